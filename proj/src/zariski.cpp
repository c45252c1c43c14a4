#include "eqsing/zariski.hpp"

#include <future>

namespace eqsing {

std::string to_string(Agreement a) {
  switch (a) {
    case Agreement::Agree: return "AGREE";
    case Agreement::Disagree: return "DISAGREE";
    case Agreement::Undecided: return "UNDECIDED";
  }
  return "?";
}

GenericProjection2 generic_projection_2d(const Parametrization& param, SymbolPool& pool) {
  GenericProjection2 gp;
  for (unsigned i = 0; i < param.ambient_dim(); ++i) gp.coeffs1.push_back(pool.fresh());
  for (unsigned i = 0; i < param.ambient_dim(); ++i) gp.coeffs2.push_back(pool.fresh());
  for (unsigned i = 0; i < param.ambient_dim(); ++i) {
    gp.l1 += param.entries[i].scaled(Scalar::symbol(gp.coeffs1[i]));
    gp.l2 += param.entries[i].scaled(Scalar::symbol(gp.coeffs2[i]));
  }
  return gp;
}

PolarResult polar_curve(const Parametrization& param, SymbolPool& pool) {
  auto gp = generic_projection_2d(param, pool);
  PolarResult r;
  r.jacobian_det = gp.l1.d_da() * gp.l2.d_dt() - gp.l1.d_dt() * gp.l2.d_da();
  auto k = t_order(r.jacobian_det);
  if (!k) throw DegenerateFamilyError("Jacobian determinant of a generic projection vanishes identically");
  r.t_power = *k;
  r.constant = r.jacobian_det.coeff({0, *k});
  r.empty = !r.constant.is_zero();
  return r;
}

bool polar_is_empty(const Parametrization& param) {
  SymbolPool pool;
  return polar_curve(param, pool).empty;
}

ZariskiResult zariski_check_detailed(const Parametrization& param) {
  ZariskiResult r;
  r.polar_empty = polar_is_empty(param);
  r.multiplicity_origin = multiplicity(param, Scalar());
  r.multiplicity_generic = generic_multiplicity(param);
  r.equimultiple = r.multiplicity_origin == r.multiplicity_generic;
  if (r.polar_empty && r.equimultiple) {
    r.verdict.status = Status::Verified;
  } else {
    r.verdict.status = Status::Refuted;
    std::string why;
    if (!r.polar_empty) why = "general polar curve is not empty";
    if (!r.equimultiple) {
      if (!why.empty()) why += "; ";
      why += "not equimultiple (multiplicity " + std::to_string(r.multiplicity_origin) + " at the origin, " +
             std::to_string(r.multiplicity_generic) + " at a generic point)";
    }
    r.verdict.reason = why;
  }
  return r;
}

Verdict zariski_check(const Parametrization& param) { return zariski_check_detailed(param).verdict; }

CrosscheckResult equivalence_crosscheck(const Parametrization& param, const CheckOptions& opts) {
  CrosscheckResult r;
  auto whitney = std::async(std::launch::async, [&] { return whitney_check(param, opts); });
  r.zariski = zariski_check(param);
  r.whitney = whitney.get();
  if (r.whitney.status == Status::Inconclusive || r.zariski.status == Status::Inconclusive)
    r.agreement = Agreement::Undecided;
  else
    r.agreement = r.whitney.status == r.zariski.status ? Agreement::Agree : Agreement::Disagree;
  return r;
}

}  // namespace eqsing
