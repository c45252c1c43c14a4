#pragma once

#include <functional>
#include <string>

#include "eqsing/mpoly.hpp"

namespace eqsing {

/// Element of Q(g1, g2, ...): a ratio of polynomials in generic symbols.
///
/// The ratio is not kept in lowest terms.  Zero testing and equality only
/// need the numerator and cross-multiplication, so correctness never depends
/// on cancellation; common monomials, constants and exact quotients are
/// removed opportunistically to keep expressions small.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : num_(v), den_(1) {}               // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& v) : num_(v), den_(1) {}   // NOLINT(google-explicit-constructor)
  Scalar(const MPoly& p) : num_(p), den_(1) {}       // NOLINT(google-explicit-constructor)
  Scalar(const MPoly& num, const MPoly& den);

  static Scalar symbol(Var v) { return Scalar(MPoly::symbol(v)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True when no generic symbol occurs.
  bool is_rational() const;
  /// Value of a rational scalar.  Precondition: is_rational().
  mpq_class rational() const;
  /// True when the scalar is a polynomial (denominator constant).
  bool is_polynomial() const { return den_.is_constant(); }
  /// Numerator scaled by the constant denominator.  Precondition: is_polynomial().
  MPoly polynomial() const;
  bool mentions(Var v) const { return num_.mentions(v) || den_.mentions(v); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar substitute(Var v, const Scalar& value) const;
  double evaluate(const std::function<double(Var)>& value) const;

  bool operator==(const Scalar& o) const;

  std::string to_string(const std::function<std::string(Var)>& name = default_symbol_name) const;

 private:
  void normalize();
  MPoly num_;
  MPoly den_{1};
};

Scalar pow(const Scalar& s, unsigned e);

}  // namespace eqsing
