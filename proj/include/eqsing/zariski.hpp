#pragma once

// Zariski's discriminant criterion, decided through its polar-curve
// characterization: a surface with smooth one-dimensional singular locus is
// Whitney regular iff the general polar curve at the origin is empty and the
// surface is equimultiple along the singular locus.  Since Whitney
// regularity and the discriminant criterion coincide for such surfaces, the
// two conditions below also decide the discriminant criterion.  The
// discriminant curve itself is never computed.

#include <string>
#include <vector>

#include "eqsing/family.hpp"
#include "eqsing/limits.hpp"

namespace eqsing {

/// Two generic linear forms composed with the parametrization.
struct GenericProjection2 {
  std::vector<Var> coeffs1;  // N symbols of the first form
  std::vector<Var> coeffs2;  // N symbols of the second form
  BiPoly l1;                 // l1 o n
  BiPoly l2;                 // l2 o n
};

GenericProjection2 generic_projection_2d(const Parametrization& param, SymbolPool& pool);

class DegenerateFamilyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PolarResult {
  bool empty = false;
  unsigned t_power = 0;  // k with J = t^k * (unit or not)
  Scalar constant;       // (J / t^k)(0, 0)
  BiPoly jacobian_det;
};

/// Critical locus of a generic projection lies in {t = 0} near the origin.
PolarResult polar_curve(const Parametrization& param, SymbolPool& pool);
bool polar_is_empty(const Parametrization& param);

struct ZariskiResult {
  Verdict verdict;
  bool polar_empty = false;
  bool equimultiple = false;
  unsigned multiplicity_origin = 0;
  unsigned multiplicity_generic = 0;
};

ZariskiResult zariski_check_detailed(const Parametrization& param);
Verdict zariski_check(const Parametrization& param);

enum class Agreement { Agree, Disagree, Undecided };
std::string to_string(Agreement a);

struct CrosscheckResult {
  Agreement agreement = Agreement::Undecided;
  Verdict whitney;
  Verdict zariski;
  /// Decisive disagreement contradicts the Whitney/Zariski equivalence, so
  /// it signals a defect in one of the two checkers.
  bool implementation_bug() const { return agreement == Agreement::Disagree; }
};

CrosscheckResult equivalence_crosscheck(const Parametrization& param, const CheckOptions& opts = {});

}  // namespace eqsing
