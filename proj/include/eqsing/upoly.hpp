#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqsing/scalar.hpp"

namespace eqsing {

/// Sparse univariate polynomial with Scalar coefficients.
class UPoly {
 public:
  using TermMap = std::map<unsigned, Scalar>;

  UPoly() = default;
  UPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  static UPoly monomial(const Scalar& c, unsigned e);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Lowest exponent with nonzero coefficient; nullopt for zero.
  std::optional<unsigned> order() const;
  /// Highest exponent; nullopt for zero.
  std::optional<unsigned> degree() const;
  Scalar coeff(unsigned e) const;
  const Scalar& leading() const { return terms_.rbegin()->second; }

  UPoly operator-() const;
  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly scaled(const Scalar& k) const;
  UPoly shifted(int k) const;  // multiply by x^k (k may be negative if exact)
  UPoly derivative() const;
  Scalar evaluate(const Scalar& x) const;

  /// Euclidean division over the field of Scalars.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly monic() const;

  bool operator==(const UPoly& o) const { return terms_ == o.terms_; }

  std::string to_string(const std::string& var,
                        const std::function<std::string(Var)>& name = default_symbol_name) const;

 private:
  void add(unsigned e, const Scalar& c);
  TermMap terms_;
};

/// Monic gcd; zero only when both inputs are zero.
UPoly gcd(const UPoly& x, const UPoly& y);

/// Dense univariate polynomial over Q.
class UPolyQ {
 public:
  UPolyQ() = default;
  explicit UPolyQ(std::vector<mpq_class> coeffs);
  static UPolyQ monomial(const mpq_class& c, unsigned e);
  static UPolyQ from_roots(const std::vector<std::pair<mpq_class, unsigned>>& roots);

  const std::vector<mpq_class>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  mpq_class coeff(unsigned e) const { return e < c_.size() ? c_[e] : mpq_class(0); }
  const mpq_class& leading() const { return c_.back(); }

  UPolyQ operator+(const UPolyQ& o) const;
  UPolyQ operator-(const UPolyQ& o) const;
  UPolyQ operator*(const UPolyQ& o) const;
  UPolyQ scaled(const mpq_class& k) const;
  UPolyQ derivative() const;
  std::pair<UPolyQ, UPolyQ> divmod(const UPolyQ& d) const;
  UPolyQ monic() const;
  bool divides(const UPolyQ& p) const;

  mpq_class evaluate(const mpq_class& x) const;
  long double evaluate(long double x) const;
  std::complex<long double> evaluate(std::complex<long double> x) const;

  /// Distinct rational roots, ascending.
  std::vector<mpq_class> rational_roots() const;
  /// Complex roots (with multiplicity), polished by Newton steps.
  std::vector<std::complex<long double>> numeric_roots() const;

  bool operator==(const UPolyQ& o) const { return c_ == o.c_; }
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

UPolyQ gcd(const UPolyQ& x, const UPolyQ& y);
/// Squarefree part p / gcd(p, p').
UPolyQ squarefree_part(const UPolyQ& p);
/// `p` with every factor shared with `q` removed.
UPolyQ coprime_part(const UPolyQ& p, const UPolyQ& q);

/// Converts a Scalar-coefficient polynomial whose coefficients are all rational.
std::optional<UPolyQ> to_rational(const UPoly& p);
/// Converts a polynomial in generic symbols that only mentions `v`.
std::optional<UPolyQ> to_rational(const MPoly& p, Var v);

}  // namespace eqsing
