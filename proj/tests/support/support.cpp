#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <limits>
#include <sstream>

#include "eqsing/modifications.hpp"
#include "eqsing/wedge.hpp"
#include "eqsing/zariski.hpp"

using namespace eqsing;

namespace testsupport {

std::vector<CorpusCase> corpus() {
  std::vector<CorpusCase> out;
  for (const auto& entry : std::filesystem::directory_iterator(EQSING_CORPUS_DIR)) {
    const auto& path = entry.path();
    if (path.extension() != ".json" || path.string().find(".eqs.") != std::string::npos) continue;
    out.push_back({path.stem().string(), parametrization_from_json(read_json_file(path))});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.name < y.name; });
  return out;
}

Parametrization random_monomial_family(std::mt19937& rng) {
  std::uniform_int_distribution<unsigned> dim(3, 5), ai(0, 8), tj(1, 8), coin(0, 2);
  Parametrization p;
  unsigned n = dim(rng);
  p.entries.push_back(BiPoly::a());
  for (unsigned k = 1; k < n; ++k) {
    unsigned i = (k == 1 || coin(rng) == 0) ? 0 : ai(rng);
    p.entries.push_back(BiPoly::monomial(Scalar(1), i, tj(rng)));
  }
  std::shuffle(p.entries.begin() + 1, p.entries.end(), rng);
  return p;
}

UPolyQ random_rolle_polynomial(std::mt19937& rng) {
  std::vector<int> pool{-3, -2, -1, 1, 2, 3};
  std::shuffle(pool.begin(), pool.end(), rng);
  std::uniform_int_distribution<unsigned> count(1, 4), mult(1, 3);
  std::vector<std::pair<mpq_class, unsigned>> roots{{mpq_class(0), mult(rng)}};
  unsigned extra = count(rng);
  for (unsigned i = 0; i < extra; ++i) roots.emplace_back(mpq_class(pool[i]), mult(rng));
  return UPolyQ::from_roots(roots);
}

namespace {

long double value(const Scalar& s) { return s.rational().get_d(); }

long double eval(const BiPoly& p, long double a, long double t) {
  long double sum = 0;
  for (const auto& [e, c] : p.terms()) sum += value(c) * std::pow(a, static_cast<long double>(e.a)) * std::pow(t, static_cast<long double>(e.t));
  return sum;
}

std::vector<long double> normalised(std::vector<long double> v) {
  long double n = 0;
  for (auto x : v) n += x * x;
  n = std::sqrt(n);
  if (n > 0)
    for (auto& x : v) x /= n;
  return v;
}

std::vector<long double> sample_limit(const std::function<std::vector<long double>(long double)>& at) {
  std::vector<std::vector<long double>> samples;
  for (int k = 3; k <= 6; ++k) samples.push_back(normalised(at(std::pow(10.0L, -k))));
  // Keep the sign of the last sample.
  for (auto& smp : samples) {
    long double dot = 0;
    for (std::size_t i = 0; i < smp.size(); ++i) dot += smp[i] * samples.back()[i];
    if (dot < 0)
      for (auto& x : smp) x = -x;
  }
  std::vector<long double> out(samples.back().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    long double x0 = samples[1][i], x1 = samples[2][i], x2 = samples[3][i];
    long double d1 = x1 - x0, d2 = x2 - x1, den = d2 - d1;
    out[i] = std::fabs(den) > 1e-30L ? x2 - d2 * d2 / den : x2;
  }
  return out;
}

std::pair<long double, long double> arc_point(const Arc& arc, long double s) {
  const unsigned q = arc.ramification();
  long double a = value(arc.base);
  for (const auto& term : arc.terms)
    a += value(term.coeff) * std::pow(s, static_cast<long double>(mpq_class(term.theta * q).get_d()));
  return {a, std::pow(s, static_cast<long double>(q))};
}

}  // namespace

std::vector<long double> numeric_arc_limit(const std::vector<BiPoly>& vec, const Arc& arc) {
  return sample_limit([&](long double s) {
    auto [a, t] = arc_point(arc, s);
    std::vector<long double> v;
    for (const auto& p : vec) v.push_back(eval(p, a, t));
    return v;
  });
}

namespace {

/// Tangent plane limit from numerically evaluated Jacobian rows.
std::vector<long double> numeric_plane_limit(const Parametrization& param, const Arc& arc) {
  auto jac = jacobian(param);
  const unsigned n = param.ambient_dim();
  return sample_limit([&](long double s) {
    auto [a, t] = arc_point(arc, s);
    std::vector<long double> r1, r2, out;
    for (unsigned i = 0; i < n; ++i) {
      r1.push_back(eval(jac.d_a[i], a, t));
      r2.push_back(eval(jac.d_t[i], a, t));
    }
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j) out.push_back(r1[i] * r2[j] - r1[j] * r2[i]);
    return out;
  });
}

}  // namespace

long double projective_distance(const std::vector<long double>& x, const std::vector<long double>& y) {
  auto u = normalised(x), v = normalised(y);
  long double dot = 0;
  for (std::size_t i = 0; i < u.size(); ++i) dot += u[i] * v[i];
  long double worst = 0;
  for (std::size_t i = 0; i < u.size(); ++i) worst = std::max(worst, std::fabs(u[i] - (dot < 0 ? -v[i] : v[i])));
  return worst;
}

std::vector<long double> to_long_double(const std::vector<Scalar>& v) {
  std::vector<long double> out;
  for (const auto& s : v) out.push_back(value(s));
  return out;
}

Arc specialise(const Arc& arc, const Scalar& c) {
  Arc out = arc;
  for (auto& term : out.terms) term.coeff = term.coeff.substitute(kArcVar, c);
  return out;
}

SuiteResult plucker_quadric_suite(unsigned random_cases, unsigned seed) {
  SuiteResult r;
  std::vector<Parametrization> params;
  for (const auto& cc : corpus()) params.push_back(cc.param);
  std::mt19937 rng(seed);
  for (unsigned i = 0; i < random_cases; ++i) params.push_back(random_monomial_family(rng));
  for (const auto& p : params) {
    auto pl = plucker(jacobian(p));
    const unsigned n = p.ambient_dim();
    auto at = [&](unsigned i, unsigned j) { return pl[pair_position(i, j, n)]; };
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j)
        for (unsigned k = j + 1; k < n; ++k)
          for (unsigned l = k + 1; l < n; ++l) {
            BiPoly q = at(i, j) * at(k, l) - at(i, k) * at(j, l) + at(i, l) * at(j, k);
            if (!q.is_zero()) r.fail("quadric fails on " + p.to_string());
          }
    ++r.cases;
  }
  return r;
}

SuiteResult b_implies_a_suite(unsigned random_cases, unsigned seed) {
  SuiteResult r;
  std::vector<Parametrization> params;
  for (const auto& cc : corpus()) params.push_back(cc.param);
  std::mt19937 rng(seed);
  for (unsigned i = 0; i < random_cases; ++i) params.push_back(random_monomial_family(rng));
  for (const auto& p : params) {
    if (whitney_b_check(p).verified() && !whitney_a_check(p).verified())
      r.fail("(b) verified but (a) not on " + p.to_string());
    ++r.cases;
  }
  return r;
}

SuiteResult pruning_invariance_suite() {
  SuiteResult r;
  for (const auto& cc : corpus()) {
    for (auto fn : {&blowup_singular_locus, &nash_modification}) {
      ModificationResult mod;
      try {
        mod = fn(cc.param);
      } catch (const ModificationError&) {
        continue;
      }
      Status base = whitney_check(mod.modified).status;
      for (const auto& d : mod.dropped) {
        Parametrization extended = mod.modified;
        extended.entries.push_back(d.entry);
        ++r.cases;
        if (whitney_check(extended).status != base)
          r.fail("adding " + d.entry.to_string() + " to " + mod.modified.to_string() + " changes the verdict");
      }
    }
  }
  return r;
}

SuiteResult semicontinuity_suite(unsigned random_cases, unsigned seed) {
  SuiteResult r;
  std::vector<Parametrization> params;
  for (const auto& cc : corpus()) params.push_back(cc.param);
  std::mt19937 rng(seed);
  for (unsigned i = 0; i < random_cases; ++i) params.push_back(random_monomial_family(rng));
  for (const auto& p : params) {
    if (multiplicity(p, Scalar()) < generic_multiplicity(p)) r.fail("multiplicity jumps up at 0 on " + p.to_string());
    ++r.cases;
  }
  return r;
}

SuiteResult rolle_suite(unsigned count, unsigned seed) {
  SuiteResult r;
  std::mt19937 rng(seed);
  while (r.cases < count) {
    UPolyQ p = random_rolle_polynomial(rng);
    auto cert = rolle_witness(p);
    if (cert.n_distinct < 2) continue;
    ++r.cases;
    std::string name = p.to_string();
    const UPolyQ& w = cert.witness_factor;
    UPolyQ dp = p.derivative();
    if (w.degree() < 1) r.fail("constant witness for " + name);
    if (!w.divides(dp)) r.fail("witness does not divide p' for " + name);
    if (gcd(w, p).degree() != 0) r.fail("witness shares a factor with p for " + name);
    if (!cert.approx_root) {
      r.fail("no numerical root for " + name);
      continue;
    }
    auto root = *cert.approx_root;
    long double sp = 0, sdp = 0;
    std::complex<long double> vp = 0, vdp = 0, pw = 1;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k, pw *= root) {
      long double ck = p.coeffs()[k].get_d();
      vp += ck * pw;
      sp += std::fabs(ck) * std::abs(pw);
      if (k > 0) {
        long double dk = ck * static_cast<long double>(k);
        std::complex<long double> prev = pw / root;
        vdp += dk * prev;
        sdp += std::fabs(dk) * std::abs(prev);
      }
    }
    if (!(std::abs(vdp) < 1e-8L * sdp)) r.fail("|p'(r)| too large for " + name);
    if (!(std::abs(vp) > 1e-4L * sp)) r.fail("|p(r)| too small for " + name);
    long double sep = std::numeric_limits<long double>::infinity();
    for (const auto& z : squarefree_part(p).numeric_roots()) sep = std::min(sep, std::abs(root - z));
    if (!(sep > 1e-6L)) r.fail("critical point on the zero fiber for " + name);
    auto h = hurwitz_count(cert);
    if (!h.strict() || h.lhs != cert.d - 1 || h.rhs != cert.d - cert.n_distinct)
      r.fail("degree count fails for " + name);
  }
  return r;
}

SuiteResult arc_oracle_suite() {
  SuiteResult r;
  for (const auto& cc : corpus()) {
    auto sec = secant_vector(cc.param);
    for (bool b : {false, true}) {
      Verdict v = b ? whitney_b_check(cc.param) : whitney_a_check(cc.param);
      for (const auto& reg : v.regimes) {
        if (reg.plane.empty()) continue;
        // c = 1 unless the leading vector vanishes there.
        for (long c = 1; c < 10; ++c) {
          auto sub = [&](const std::vector<Scalar>& vec) {
            std::vector<Scalar> out;
            for (const auto& s : vec) out.push_back(s.substitute(kArcVar, Scalar(c)));
            return out;
          };
          auto plane = sub(reg.plane), secant = sub(reg.secant);
          auto nonzero = [](const std::vector<Scalar>& vec) {
            return std::any_of(vec.begin(), vec.end(), [](const Scalar& s) { return !s.is_zero(); });
          };
          if (!nonzero(plane) || (b && !nonzero(secant))) continue;
          Arc arc = specialise(reg.arc, Scalar(c));
          ++r.cases;
          std::ostringstream where;
          where << cc.name << " along " << arc.to_string();
          if (projective_distance(numeric_plane_limit(cc.param, arc), to_long_double(plane)) > 1e-6L)
            r.fail("plane limit disagrees on " + where.str());
          if (b && projective_distance(numeric_arc_limit(sec, arc), to_long_double(secant)) > 1e-6L)
            r.fail("secant limit disagrees on " + where.str());
          break;
        }
      }
    }
  }
  return r;
}

FuzzStats equivalence_fuzz(unsigned count, unsigned seed) {
  FuzzStats st;
  std::vector<Parametrization> params;
  for (const auto& cc : corpus()) params.push_back(cc.param);
  std::mt19937 rng(seed);
  for (unsigned i = 0; i < count; ++i) params.push_back(random_monomial_family(rng));
  for (const auto& p : params) {
    auto r = equivalence_crosscheck(p);
    ++st.families;
    switch (r.agreement) {
      case Agreement::Agree:
        ++st.agree;
        (r.whitney.verified() ? st.verified : st.refuted)++;
        break;
      case Agreement::Undecided: ++st.undecided; break;
      case Agreement::Disagree:
        ++st.disagree;
        if (st.first_disagreement.empty())
          st.first_disagreement = p.to_string() + ": Whitney " + to_string(r.whitney.status) + ", Zariski " +
                                  to_string(r.zariski.status);
        break;
    }
  }
  return st;
}

}  // namespace testsupport
