#pragma once

// Plane projections of the fibers and their characteristic exponents.

#include <optional>
#include <string>
#include <vector>

#include "eqsing/family.hpp"
#include "eqsing/limits.hpp"

namespace eqsing {

/// phi_i(a0, t) for i >= 2.  Throws DegenerateFiber when all vanish.
std::vector<UPoly> fiber_at(const Parametrization& param, const Scalar& a0);

/// Exponents of t occurring in some fiber entry, ascending.
std::vector<unsigned> fiber_support(const std::vector<UPoly>& fiber);

struct PlaneProjection {
  UPoly x;  // sum lambda_i phi_i
  UPoly y;  // sum mu_i phi_i
  std::vector<Var> lambda;
  std::vector<Var> mu;
};

PlaneProjection generic_plane_projection(const std::vector<UPoly>& fiber, SymbolPool& pool);

/// Puiseux characteristic (m; beta_1, ..., beta_g) of the branch (x(t), y(t)).
struct CharSequence {
  unsigned m = 0;
  std::vector<unsigned> betas;
  unsigned final_gcd = 0;
  /// Highest s-exponent of y examined.
  unsigned truncation = 0;

  bool non_primitive() const { return final_gcd > 1; }
  bool operator==(const CharSequence& o) const { return m == o.m && betas == o.betas && final_gcd == o.final_gcd; }
  std::vector<unsigned> as_list() const;
  std::string to_string() const;
};

/// Reparametrizes so that x = s^m and scans the s-exponents of y for gcd
/// drops.  The scan stops once the gcd reaches 1; otherwise the truncation
/// doubles from (max exponent + 1) up to 4 * (max exponent).
CharSequence char_exponents(const UPoly& x, const UPoly& y);

struct FiberCharacteristic {
  std::optional<mpq_class> a0;  // empty for the generic fiber
  std::vector<unsigned> support;
  CharSequence chars;
};

/// Characteristic sequence of a generic plane projection of the fiber at a0
/// (a0 empty: generic point of the a-axis).
FiberCharacteristic fiber_characteristic(const Parametrization& param, const std::optional<mpq_class>& a0);

struct StrongResult {
  Verdict verdict;
  Verdict whitney;
  FiberCharacteristic generic;
  std::vector<FiberCharacteristic> special;  // a = 0 first, then the extra values
};

/// Whitney regularity plus constancy of the characteristic exponents of a
/// generic plane projection between the generic fiber and the fibers over
/// a = 0 and every extra special value.
StrongResult strong_equisingularity_check(const Parametrization& param, const CheckOptions& opts = {},
                                          const std::vector<mpq_class>& special_a = {});

}  // namespace eqsing
