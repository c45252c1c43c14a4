#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqsing/bipoly.hpp"
#include "eqsing/upoly.hpp"

namespace eqsing {

/// One term c * t^theta of a test arc.
struct ArcTerm {
  mpq_class theta;
  Scalar coeff;
};

/// Test arc  a = a0 + c1 t^theta1 + c2 t^theta2 + ...  with increasing
/// exponents.  No terms encodes theta = infinity, i.e. the arc a == a0.
/// A coefficient equal to the symbol `c` stands for a free (generic) value;
/// later terms are the refinement tail of earlier ones.
struct Arc {
  Scalar base;
  std::vector<ArcTerm> terms;

  static Arc constant(const Scalar& a0 = Scalar()) { return Arc{a0, {}}; }
  static Arc monomial(const mpq_class& theta, const Scalar& c, const Scalar& a0 = Scalar());

  /// Leading exponent; nullopt stands for infinity.
  std::optional<mpq_class> theta() const;
  /// Smallest q with every q * theta_k integral.
  unsigned ramification() const;
  Arc refined(const mpq_class& theta, const Scalar& c) const;
  Arc with_last_coeff(const Scalar& c) const;
  bool has_free_coeff() const;

  std::string to_string() const;
};

/// Result of substituting t = s^q, a = a(s) into a polynomial.
struct PuiseuxPoly {
  UPoly poly;         // polynomial in s
  unsigned ramification = 1;  // q
};

/// Exact substitution of an arc into p(a, t).
PuiseuxPoly substitute_arc(const BiPoly& p, const Arc& arc);

}  // namespace eqsing
