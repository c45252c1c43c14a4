#pragma once

// Sparse multivariate polynomials over Q in "generic symbols".
//
// A generic symbol models a coefficient chosen generically: a polynomial in
// such symbols is treated as nonzero unless it vanishes identically.  Symbol
// id 0 is reserved for the arc coefficient `c`; ids >= 1 print as g1, g2, ...

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace eqsing {

using Var = std::uint32_t;

/// Symbol id of the free coefficient of a test arc.
inline constexpr Var kArcVar = 0;

std::string default_symbol_name(Var v);

/// Power product; factors sorted by variable, exponents positive.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(Var v, unsigned exp = 1);

  const std::vector<std::pair<Var, unsigned>>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  unsigned degree(Var v) const;
  unsigned total_degree() const;

  Monomial operator*(const Monomial& o) const;
  /// Quotient if `o` divides *this.
  std::optional<Monomial> divide(const Monomial& o) const;
  /// Componentwise minimum (the monomial gcd).
  Monomial gcd(const Monomial& o) const;
  Monomial without(Var v) const;

  bool operator==(const Monomial& o) const = default;

 private:
  std::vector<std::pair<Var, unsigned>> f_;
};

/// Pure lexicographic order, lower variable ids most significant.
int lex_compare(const Monomial& x, const Monomial& y);

struct MonomialLess {
  bool operator()(const Monomial& x, const Monomial& y) const { return lex_compare(x, y) < 0; }
};

class MPoly {
 public:
  using TermMap = std::map<Monomial, mpq_class, MonomialLess>;

  MPoly() = default;
  MPoly(long v) : MPoly(mpq_class(v)) {}  // NOLINT(google-explicit-constructor)
  MPoly(const mpq_class& v);              // NOLINT(google-explicit-constructor)
  static MPoly symbol(Var v);
  static MPoly term(const mpq_class& c, const Monomial& m);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  mpq_class constant() const;
  std::size_t size() const { return terms_.size(); }
  std::set<Var> variables() const;
  bool mentions(Var v) const;
  unsigned degree(Var v) const;

  /// Largest term in lex order.  Precondition: nonzero.
  const std::pair<const Monomial, mpq_class>& leading() const { return *terms_.rbegin(); }
  /// Gcd of all monomials in the support.
  Monomial monomial_content() const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly scaled(const mpq_class& c) const;
  MPoly times(const Monomial& m) const;
  /// Exact quotient by a monomial; all terms must be divisible.
  MPoly divided_by(const Monomial& m) const;

  /// Exact division; nullopt when `d` does not divide *this.
  std::optional<MPoly> divide_exact(const MPoly& d) const;

  MPoly substitute(Var v, const MPoly& value) const;
  /// Coefficients with respect to `v`, keyed by the power of v.
  std::map<unsigned, MPoly> collect(Var v) const;

  double evaluate(const std::function<double(Var)>& value) const;

  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

  std::string to_string(const std::function<std::string(Var)>& name = default_symbol_name) const;

 private:
  void add_term(const Monomial& m, const mpq_class& c);
  TermMap terms_;
};

MPoly pow(const MPoly& p, unsigned e);

/// Hands out fresh generic symbols g1, g2, ... in a deterministic order.
/// Each computation owns its pool; nothing is shared between threads.
class SymbolPool {
 public:
  explicit SymbolPool(Var first = 1) : next_(first) {}
  Var fresh() { return next_++; }
  Var peek() const { return next_; }

 private:
  Var next_;
};

std::string format_rational(const mpq_class& q);

}  // namespace eqsing
