#pragma once

// Whitney conditions (a) and (b) along the a-axis, decided by limits along
// test arcs.
//
// Limits over arbitrary sequences reduce to limits along Puiseux arcs
// (curve selection).  Writing an arc as a = c t^theta + (higher terms), the
// leading terms of the secant and tangent-plane coordinates only change at
// finitely many "critical" exponents.  The sweep visits one representative
// exponent inside every open sector between them, every critical exponent
// with c kept symbolic, and the arc a == 0.  Where the leading form of a
// vector vanishes for a special value c*, the arc is refined to
// a = c* t^theta + c' t^theta' and the sweep repeats on the substituted
// vectors, up to a depth limit.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "eqsing/arc.hpp"
#include "eqsing/family.hpp"

namespace eqsing {

enum class Status { Verified, Refuted, Inconclusive };
std::string to_string(Status s);

enum class Basepoint { Origin, Generic };

struct CheckOptions {
  unsigned max_depth = 4;
  Basepoint basepoint = Basepoint::Origin;
};

/// Limit data at a failing arc.
struct LimitDetail {
  std::vector<Scalar> secant;  // projective limit of secant lines (empty for condition (a))
  std::vector<Scalar> plane;   // Pluecker coordinates of the limit tangent plane
  std::array<unsigned, 3> wedge_index{};  // 0-based i < j < k
  Scalar wedge_value;
};

/// One visited regime of the sweep.
struct Regime {
  enum class Kind { Sector, Critical, Infinity };
  Kind kind = Kind::Sector;
  Arc arc;                      // free coefficient written as the symbol c
  unsigned depth = 0;           // refinement depth
  std::vector<Scalar> secant;   // leading vectors, polynomial in c
  std::vector<Scalar> plane;
  Status status = Status::Verified;
  std::string note;
};

std::string to_string(Regime::Kind k);

struct Verdict {
  Status status = Status::Verified;
  std::optional<Arc> witness;
  std::optional<LimitDetail> detail;       // symbolic in c
  std::optional<LimitDetail> witness_detail;  // specialised at the witness arc
  std::string reason;
  std::vector<Regime> regimes;

  bool verified() const { return status == Status::Verified; }
  bool refuted() const { return status == Status::Refuted; }
};

class ZeroVectorError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// (0, phi_2, ..., phi_N): from the retraction r(n) = (a, 0, ..., 0) to n.
std::vector<BiPoly> secant_vector(const Parametrization& param);

/// Exponents theta > 0 where the (1, theta)-weighted minimal terms of a
/// vector change: (j2 - j1) / (i1 - i2) over pairs of support points of the
/// same vector.  Sorted, without duplicates.
std::vector<mpq_class> critical_exponents(const std::vector<std::vector<BiPoly>>& vectors);

/// Leading coefficient vector after substituting the arc (the projective limit).
std::vector<Scalar> limit_along_arc(const std::vector<BiPoly>& vec, const Arc& arc);

Verdict whitney_a_check(const Parametrization& param, const CheckOptions& opts = {});
Verdict whitney_b_check(const Parametrization& param, const CheckOptions& opts = {});

struct WhitneyResult {
  Verdict a;
  Verdict b;
  Verdict overall;
};

WhitneyResult whitney_check_detailed(const Parametrization& param, const CheckOptions& opts = {});
/// Conjunction of (a) and (b); Refuted wins over Inconclusive.
Verdict whitney_check(const Parametrization& param, const CheckOptions& opts = {});

}  // namespace eqsing
