#include "eqsing/rolle.hpp"

#include <cmath>

#include "eqsing/parse.hpp"

namespace eqsing {

std::string to_string(RolleError::Kind k) {
  switch (k) {
    case RolleError::Kind::ConstantMap: return "ConstantMap";
    case RolleError::Kind::NotThroughBasepoint: return "NotThroughBasepoint";
    case RolleError::Kind::DimensionMismatch: return "DimensionMismatch";
  }
  return "?";
}

std::vector<UPolyQ> parse_curve(const std::vector<std::string>& entries) {
  std::vector<UPolyQ> out;
  for (const auto& e : entries) out.push_back(*to_rational(parse_expression(e, {"t"}), 0));
  return out;
}

RolleCertificate rolle_witness(const std::vector<UPolyQ>& curve, const std::vector<mpq_class>& rho) {
  if (curve.size() != rho.size())
    throw RolleError(RolleError::Kind::DimensionMismatch,
                     "functional has " + std::to_string(rho.size()) + " coefficients for a curve in dimension " +
                         std::to_string(curve.size()));
  UPolyQ p;
  for (std::size_t i = 0; i < curve.size(); ++i) p = p + curve[i].scaled(rho[i]);
  return rolle_witness(p);
}

RolleCertificate rolle_witness(const UPolyQ& p) {
  if (p.degree() < 1) throw RolleError(RolleError::Kind::ConstantMap, "rho restricted to the curve is constant");
  if (p.coeff(0) != 0) throw RolleError(RolleError::Kind::NotThroughBasepoint, "p(0) != 0");
  RolleCertificate cert;
  cert.p = p;
  cert.d = static_cast<unsigned>(p.degree());
  cert.n_distinct = static_cast<unsigned>(squarefree_part(p).degree());
  if (cert.n_distinct < 2) {
    cert.no_witness_needed = true;
    cert.witness_factor = UPolyQ({mpq_class(1)});
    return cert;
  }
  cert.witness_factor = coprime_part(p.derivative(), p).monic();
  // Pick the root where |p(r)| is largest relative to sum |c_k| |r|^k, the
  // scale against which the separation from the zero fiber is reported.
  long double best = -1;
  for (const auto& r : cert.witness_factor.numeric_roots()) {
    long double scale = 0, rk = 1;
    for (const auto& c : p.coeffs()) {
      scale += std::fabs(c.get_d()) * rk;
      rk *= std::abs(r);
    }
    long double v = std::abs(p.evaluate(r)) / scale;
    if (v > best) {
      best = v;
      cert.approx_root = r;
    }
  }
  return cert;
}

HurwitzCount hurwitz_count(const RolleCertificate& cert) {
  HurwitzCount h;
  h.lhs = cert.d - 1;
  h.rhs = static_cast<unsigned>(gcd(cert.p, cert.p.derivative()).degree());
  return h;
}

}  // namespace eqsing
