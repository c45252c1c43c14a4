#include "eqsing/projection.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "eqsing/series.hpp"

namespace eqsing {

std::vector<UPoly> fiber_at(const Parametrization& param, const Scalar& a0) {
  std::vector<UPoly> fiber;
  bool all_zero = true;
  for (std::size_t i = 1; i < param.entries.size(); ++i) {
    fiber.push_back(param.entries[i].at_a(a0));
    if (!fiber.back().is_zero()) all_zero = false;
  }
  if (all_zero) throw ValidationError(ValidationError::Kind::DegenerateFiber, 0, "fiber vanishes identically");
  return fiber;
}

std::vector<unsigned> fiber_support(const std::vector<UPoly>& fiber) {
  std::set<unsigned> s;
  for (const auto& f : fiber)
    for (const auto& [e, c] : f.terms()) s.insert(e);
  return {s.begin(), s.end()};
}

PlaneProjection generic_plane_projection(const std::vector<UPoly>& fiber, SymbolPool& pool) {
  PlaneProjection pp;
  for (std::size_t i = 0; i < fiber.size(); ++i) pp.lambda.push_back(pool.fresh());
  for (std::size_t i = 0; i < fiber.size(); ++i) pp.mu.push_back(pool.fresh());
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    pp.x = pp.x + fiber[i].scaled(Scalar::symbol(pp.lambda[i]));
    pp.y = pp.y + fiber[i].scaled(Scalar::symbol(pp.mu[i]));
  }
  return pp;
}

std::vector<unsigned> CharSequence::as_list() const {
  std::vector<unsigned> v{m};
  v.insert(v.end(), betas.begin(), betas.end());
  return v;
}

std::string CharSequence::to_string() const {
  std::ostringstream os;
  os << "(" << m;
  for (std::size_t i = 0; i < betas.size(); ++i) os << (i == 0 ? "; " : ", ") << betas[i];
  os << ")";
  return os.str();
}

namespace {

/// Coefficients of y(s w(s)) below `order`, where t = s w(s).
SeriesT compose_in_s(const UPoly& y, const SeriesT& w, unsigned order) {
  SeriesT out(order);
  SeriesT t_pow(order);  // (s w)^k, starting at k = 0
  t_pow[0] = Scalar(1);
  SeriesT s_w(order);
  for (unsigned k = 0; k + 1 < order; ++k) s_w[k + 1] = w[k];
  unsigned k = 0;
  for (const auto& [e, c] : y.terms()) {
    if (e >= order) break;
    while (k < e) {
      t_pow = t_pow * s_w;
      ++k;
    }
    out = out + t_pow.scaled(c);
  }
  return out;
}

}  // namespace

CharSequence char_exponents(const UPoly& x, const UPoly& y) {
  auto m_opt = x.order();
  if (!m_opt || *m_opt == 0) throw std::invalid_argument("char_exponents: x must vanish at 0 and be nonzero");
  CharSequence cs;
  cs.m = *m_opt;
  cs.final_gcd = cs.m;
  if (y.is_zero()) return cs;

  unsigned max_exp = std::max(*x.degree(), *y.degree());
  unsigned cap = 4 * max_exp;
  // x / (lc t^m) = 1 + ... ; scaling x leaves the characteristic unchanged.
  UPoly u = x.shifted(-static_cast<int>(cs.m)).scaled(Scalar(1) / x.coeff(cs.m));
  for (unsigned order = max_exp + 1;; order = std::min(2 * order, cap + 1)) {
    SeriesT v = series_invert_root(SeriesT(u, order), cs.m);
    SeriesT w = compositional_inverse_factor(v);
    SeriesT ys = compose_in_s(y, w, order);
    cs.betas.clear();
    unsigned g = cs.m;
    for (unsigned k = 1; k < order && g > 1; ++k) {
      if (ys[k].is_zero()) continue;
      unsigned ng = std::gcd(g, k);
      if (ng < g) {
        cs.betas.push_back(k);
        g = ng;
      }
    }
    cs.final_gcd = g;
    cs.truncation = order - 1;
    if (g == 1 || order > cap) break;
  }
  return cs;
}

FiberCharacteristic fiber_characteristic(const Parametrization& param, const std::optional<mpq_class>& a0) {
  FiberCharacteristic fc;
  fc.a0 = a0;
  SymbolPool pool;
  Scalar base = a0 ? Scalar(*a0) : Scalar::symbol(pool.fresh());
  auto fiber = fiber_at(param, base);
  fc.support = fiber_support(fiber);
  auto pp = generic_plane_projection(fiber, pool);
  fc.chars = char_exponents(pp.x, pp.y);
  return fc;
}

StrongResult strong_equisingularity_check(const Parametrization& param, const CheckOptions& opts,
                                          const std::vector<mpq_class>& special_a) {
  StrongResult r;
  r.whitney = whitney_check(param, opts);
  r.generic = fiber_characteristic(param, std::nullopt);
  std::vector<mpq_class> values{mpq_class(0)};
  for (const auto& v : special_a)
    if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
  for (const auto& v : values) r.special.push_back(fiber_characteristic(param, v));

  const FiberCharacteristic* differing = nullptr;
  for (const auto& fc : r.special)
    if (!(fc.chars == r.generic.chars)) {
      differing = &fc;
      break;
    }
  if (differing) {
    r.verdict.status = Status::Refuted;
    r.verdict.witness = Arc::constant(Scalar(*differing->a0));
    r.verdict.reason = "characteristic exponents " + r.generic.chars.to_string() + " at a generic point, " +
                       differing->chars.to_string() + " at a = " + differing->a0->get_str();
  } else if (r.whitney.status != Status::Verified) {
    r.verdict = r.whitney;
    r.verdict.regimes.clear();
    if (r.verdict.status == Status::Refuted) r.verdict.reason = "not Whitney regular";
  } else {
    r.verdict.status = Status::Verified;
  }
  return r;
}

}  // namespace eqsing
