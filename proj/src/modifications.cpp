#include "eqsing/modifications.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "eqsing/wedge.hpp"

namespace eqsing {

std::string to_string(ModificationError::Kind k) {
  switch (k) {
    case ModificationError::Kind::NonPolynomialChart: return "NonPolynomialChart";
    case ModificationError::Kind::NoUnitChart: return "NoUnitChart";
  }
  return "?";
}

namespace {

/// Finds nonnegative powers with sum power_i * basis_i == target.
bool decompose(const std::vector<Exponent>& basis, std::size_t idx, Exponent target, std::vector<unsigned>& powers) {
  if (target.a == 0 && target.t == 0) {
    std::fill(powers.begin() + static_cast<long>(idx), powers.end(), 0u);
    return true;
  }
  if (idx == basis.size()) return false;
  const Exponent& b = basis[idx];
  unsigned max_pow;
  if (b.a == 0 && b.t == 0) {
    max_pow = 0;
  } else {
    max_pow = ~0u;
    if (b.a > 0) max_pow = std::min(max_pow, target.a / b.a);
    if (b.t > 0) max_pow = std::min(max_pow, target.t / b.t);
  }
  for (unsigned p = max_pow + 1; p-- > 0;) {
    powers[idx] = p;
    if (decompose(basis, idx + 1, {target.a - p * b.a, target.t - p * b.t}, powers)) return true;
  }
  return false;
}

bool has_unit_leading_coeff(const BiPoly& p) {
  if (p.is_zero()) return false;
  auto lc = leading_coeff_t(p);
  return lc.degree() == 0u;
}

ModificationResult finish(const Parametrization& param, std::vector<BiPoly> emitted, Provenance prov) {
  ModificationResult r;
  r.emitted = std::move(emitted);
  PruneResult pr = prune_redundant(r.emitted);
  r.pruning_applied = pr.applied;
  r.zero_coordinates = pr.zeros;
  r.dropped = pr.dropped;
  r.modified.provenance = prov;
  for (std::size_t i : pr.kept) r.modified.entries.push_back(r.emitted[i]);
  (void)param;
  for (std::size_t i = 1; i < r.modified.entries.size(); ++i) {
    const auto& e = r.modified.entries[i];
    if (t_order(e) == 1u && has_unit_leading_coeff(e)) r.smooth_chart = true;
  }
  return r;
}

}  // namespace

PruneResult prune_redundant(const std::vector<BiPoly>& entries) {
  PruneResult r;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].is_zero()) {
      r.zeros.push_back(i);
      continue;
    }
    if (!entries[i].is_monomial()) r.applied = false;
    order.push_back(i);
  }
  if (!r.applied) {
    r.kept = order;
    return r;
  }
  auto expo = [&](std::size_t i) { return entries[i].terms().begin()->first; };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::pair(expo(x).t, expo(x).a) < std::pair(expo(y).t, expo(y).a);
  });

  std::vector<std::size_t> kept_scan;
  std::vector<Exponent> basis;
  struct Pending {
    std::size_t index;
    std::vector<unsigned> powers;  // aligned with kept_scan at decision time
  };
  std::vector<Pending> pending;
  for (std::size_t i : order) {
    std::vector<unsigned> powers(basis.size(), 0);
    if (decompose(basis, 0, expo(i), powers)) {
      pending.push_back({i, powers});
    } else {
      kept_scan.push_back(i);
      basis.push_back(expo(i));
    }
  }

  r.kept = kept_scan;
  std::sort(r.kept.begin(), r.kept.end());
  auto kept_pos = [&](std::size_t input_index) {
    return static_cast<std::size_t>(std::find(r.kept.begin(), r.kept.end(), input_index) - r.kept.begin());
  };
  for (const auto& p : pending) {
    DroppedCoordinate d;
    d.emitted_index = p.index;
    d.entry = entries[p.index];
    Scalar denom(1);
    for (std::size_t k = 0; k < p.powers.size(); ++k) {
      if (p.powers[k] == 0) continue;
      d.factors.emplace_back(kept_pos(kept_scan[k]), p.powers[k]);
      denom = denom * pow(entries[kept_scan[k]].terms().begin()->second, p.powers[k]);
    }
    std::sort(d.factors.begin(), d.factors.end());
    d.scalar = entries[p.index].terms().begin()->second / denom;
    r.dropped.push_back(std::move(d));
  }
  std::sort(r.dropped.begin(), r.dropped.end(),
            [](const auto& x, const auto& y) { return x.emitted_index < y.emitted_index; });
  return r;
}

ModificationResult blowup_singular_locus(const Parametrization& param) {
  validate(param);
  std::optional<std::size_t> k;
  for (std::size_t i = 1; i < param.entries.size(); ++i) {
    const auto& e = param.entries[i];
    if (!has_unit_leading_coeff(e)) continue;
    if (!k || *t_order(e) < *t_order(param.entries[*k])) k = i;
  }
  if (!k) throw ModificationError(ModificationError::Kind::NoUnitChart, "no entry has a constant t-leading coefficient");
  std::vector<BiPoly> emitted = param.entries;
  for (std::size_t i = 1; i < param.entries.size(); ++i) {
    if (i == *k) continue;
    auto q = param.entries[i].divide_exact(param.entries[*k]);
    if (!q)
      throw ModificationError(ModificationError::Kind::NonPolynomialChart,
                              "x" + std::to_string(i + 1) + "/x" + std::to_string(*k + 1) + " is not a polynomial");
    emitted.push_back(*q);
  }
  auto r = finish(param, std::move(emitted), Provenance::Blowup);
  r.chart = "x" + std::to_string(*k + 1);
  r.chart_index = *k + 1;
  return r;
}

ModificationResult nash_modification(const Parametrization& param) {
  validate(param);
  auto minors = plucker(jacobian(param));
  auto pairs = pair_indices(param.ambient_dim());
  std::optional<std::size_t> k;
  for (std::size_t i = 0; i < minors.size(); ++i) {
    if (!has_unit_leading_coeff(minors[i])) continue;
    if (!k || *t_order(minors[i]) < *t_order(minors[*k])) k = i;
  }
  auto name = [&](std::size_t i) {
    return "p" + std::to_string(pairs[i][0] + 1) + std::to_string(pairs[i][1] + 1);
  };
  if (!k)
    throw ModificationError(ModificationError::Kind::NoUnitChart, "no Pluecker coordinate has a constant t-leading coefficient");
  std::vector<BiPoly> emitted = param.entries;
  for (std::size_t i = 0; i < minors.size(); ++i) {
    if (i == *k) continue;
    auto q = minors[i].divide_exact(minors[*k]);
    if (!q)
      throw ModificationError(ModificationError::Kind::NonPolynomialChart,
                              name(i) + "/" + name(*k) + " is not a polynomial");
    emitted.push_back(*q);
  }
  auto r = finish(param, std::move(emitted), Provenance::Nash);
  r.chart = name(*k);
  r.chart_index = *k;
  return r;
}

bool check_factorization(const Parametrization& original, const ModificationResult& result) {
  const auto& kept = result.modified.entries;
  for (const auto& entry : original.entries) {
    if (entry.is_zero()) continue;
    if (std::find(kept.begin(), kept.end(), entry) != kept.end()) continue;
    bool rebuilt = false;
    for (const auto& d : result.dropped) {
      BiPoly prod(d.scalar);
      bool valid = true;
      for (const auto& [idx, power] : d.factors) {
        if (idx >= kept.size()) {
          valid = false;
          break;
        }
        prod = prod * pow(kept[idx], power);
      }
      if (valid && prod == entry) {
        rebuilt = true;
        break;
      }
    }
    if (!rebuilt) return false;
  }
  return true;
}

}  // namespace eqsing
