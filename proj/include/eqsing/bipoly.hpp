#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqsing/scalar.hpp"
#include "eqsing/upoly.hpp"

namespace eqsing {

/// Exponent pair (power of a, power of t).
struct Exponent {
  unsigned a = 0;
  unsigned t = 0;
  auto operator<=>(const Exponent&) const = default;
};

/// Polynomial in the source variables (a, t) with Scalar coefficients.
class BiPoly {
 public:
  using TermMap = std::map<Exponent, Scalar>;

  BiPoly() = default;
  BiPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  static BiPoly monomial(const Scalar& c, unsigned a_exp, unsigned t_exp);
  static BiPoly a() { return monomial(1, 1, 0); }
  static BiPoly t() { return monomial(1, 0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Scalar coeff(Exponent e) const;

  BiPoly operator-() const;
  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly scaled(const Scalar& k) const;

  BiPoly d_da() const;
  BiPoly d_dt() const;

  /// Exact quotient, nullopt when `d` does not divide.
  std::optional<BiPoly> divide_exact(const BiPoly& d) const;

  /// p(a0, t) as a polynomial in t.
  UPoly at_a(const Scalar& a0) const;
  /// p(a, 0) as a polynomial in a.
  UPoly at_t_zero() const;
  /// p(a_value, t_value) for polynomial substitutions.
  BiPoly compose(const BiPoly& a_value, const BiPoly& t_value) const;
  Scalar evaluate(const Scalar& a0, const Scalar& t0) const;
  BiPoly map_coefficients(const std::function<Scalar(const Scalar&)>& f) const;

  bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

  std::string to_string(const std::string& a_name = "a", const std::string& t_name = "t",
                        const std::function<std::string(Var)>& name = default_symbol_name) const;

 private:
  void add(Exponent e, const Scalar& c);
  TermMap terms_;
};

BiPoly pow(const BiPoly& p, unsigned e);

/// Minimum t-exponent over the support; nullopt (infinity) for zero.
std::optional<unsigned> t_order(const BiPoly& p);
/// Coefficient of t^{t_order(p)} as a polynomial in a.  Throws on zero.
UPoly leading_coeff_t(const BiPoly& p);

}  // namespace eqsing
