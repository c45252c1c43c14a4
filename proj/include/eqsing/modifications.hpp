#pragma once

// Blow-up of the singular locus and Nash modification, each as one affine
// chart presented by a new parametrization of the same (a, t) plane.
//
// The chart is the graph embedding: the original coordinates followed by the
// ratios x_i / x_k (blow-up) or p_ij / p_k of Pluecker coordinates (Nash),
// where the divisor is the entry of least t-order among those whose
// t-leading coefficient is a nonzero constant.  Coordinates that are
// monomials in the remaining ones are then pruned; the graph embedding
// differs from the pruned one by a polynomial automorphism of the ambient
// space.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eqsing/family.hpp"

namespace eqsing {

class ModificationError : public std::runtime_error {
 public:
  enum class Kind { NonPolynomialChart, NoUnitChart };
  ModificationError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string to_string(ModificationError::Kind k);

/// entry = scalar * prod kept[index]^power.
struct DroppedCoordinate {
  std::size_t emitted_index = 0;  // position in the full graph embedding
  BiPoly entry;
  Scalar scalar;
  std::vector<std::pair<std::size_t, unsigned>> factors;  // (index into kept list, power)
};

struct PruneResult {
  std::vector<std::size_t> kept;  // indices into the input, in input order
  std::vector<DroppedCoordinate> dropped;
  std::vector<std::size_t> zeros;  // identically zero inputs, dropped without a certificate
  bool applied = true;             // false when some entry is not a monomial
};

/// Scans entries by (t-order, a-order, index) and drops every monomial whose
/// exponent is a nonnegative integer combination of already kept exponents.
PruneResult prune_redundant(const std::vector<BiPoly>& entries);

struct ModificationResult {
  Parametrization modified;
  std::string chart;            // name of the chart divisor, e.g. "x2" or "p12"
  std::size_t chart_index = 0;  // 1-based entry index, or 0-based Pluecker position
  std::vector<BiPoly> emitted;  // full graph embedding before pruning
  std::vector<DroppedCoordinate> dropped;
  std::vector<std::size_t> zero_coordinates;
  bool pruning_applied = true;
  /// Some kept entry has t-order 1 with a constant coefficient.
  bool smooth_chart = false;
};

ModificationResult blowup_singular_locus(const Parametrization& param);
ModificationResult nash_modification(const Parametrization& param);

/// Every original entry is a kept entry or is rebuilt from a certificate.
bool check_factorization(const Parametrization& original, const ModificationResult& result);

}  // namespace eqsing
