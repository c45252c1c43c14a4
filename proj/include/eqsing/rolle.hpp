#pragma once

// Critical points of a linear function restricted to a parametrized curve.
//
// For p = rho o gamma with p(0) = 0 and n >= 2 distinct roots, p has degree
// d and p' has degree d - 1, while the roots of p absorb only
// sum (m_i - 1) = d - n of them.  So p' has a root outside p^{-1}(0): a
// critical point of rho away from the zero fiber.

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqsing/upoly.hpp"

namespace eqsing {

class RolleError : public std::runtime_error {
 public:
  enum class Kind { ConstantMap, NotThroughBasepoint, DimensionMismatch };
  RolleError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string to_string(RolleError::Kind k);

struct RolleCertificate {
  UPolyQ p;
  unsigned d = 0;           // degree of p
  unsigned n_distinct = 0;  // distinct complex roots of p
  /// Monic part of p' coprime to p; the constant 1 when no witness is needed.
  UPolyQ witness_factor;
  std::optional<std::complex<long double>> approx_root;
  bool no_witness_needed = false;
};

/// Parses curve entries written in the variable t.
std::vector<UPolyQ> parse_curve(const std::vector<std::string>& entries);

RolleCertificate rolle_witness(const std::vector<UPolyQ>& curve, const std::vector<mpq_class>& rho);
RolleCertificate rolle_witness(const UPolyQ& p);

struct HurwitzCount {
  unsigned lhs = 0;  // d - 1 = deg p'
  unsigned rhs = 0;  // sum (m_i - 1) = deg gcd(p, p')
  /// lhs > rhs, which holds exactly when n_distinct >= 2.
  bool strict() const { return lhs > rhs; }
};

HurwitzCount hurwitz_count(const RolleCertificate& cert);

}  // namespace eqsing
