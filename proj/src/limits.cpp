#include "eqsing/limits.hpp"

#include <set>

#include "eqsing/wedge.hpp"

namespace eqsing {

std::string to_string(Status s) {
  switch (s) {
    case Status::Verified: return "Verified";
    case Status::Refuted: return "Refuted";
    case Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(Regime::Kind k) {
  switch (k) {
    case Regime::Kind::Sector: return "sector";
    case Regime::Kind::Critical: return "critical";
    case Regime::Kind::Infinity: return "infinity";
  }
  return "?";
}

std::vector<BiPoly> secant_vector(const Parametrization& param) {
  std::vector<BiPoly> v = param.entries;
  if (!v.empty()) v[0] = BiPoly();
  return v;
}

std::vector<mpq_class> critical_exponents(const std::vector<std::vector<BiPoly>>& vectors) {
  std::set<mpq_class> out;
  for (const auto& vec : vectors) {
    std::set<Exponent> support;
    for (const auto& entry : vec)
      for (const auto& [e, c] : entry.terms()) support.insert(e);
    for (auto i = support.begin(); i != support.end(); ++i)
      for (auto j = std::next(i); j != support.end(); ++j) {
        if (i->a == j->a) continue;
        mpq_class theta(static_cast<long>(j->t) - static_cast<long>(i->t),
                        static_cast<long>(i->a) - static_cast<long>(j->a));
        theta.canonicalize();
        if (theta > 0) out.insert(theta);
      }
  }
  return {out.begin(), out.end()};
}

std::vector<Scalar> limit_along_arc(const std::vector<BiPoly>& vec, const Arc& arc) {
  std::vector<UPoly> sub;
  std::optional<unsigned> low;
  for (const auto& entry : vec) {
    sub.push_back(substitute_arc(entry, arc).poly);
    auto ord = sub.back().order();
    if (ord && (!low || *ord < *low)) low = ord;
  }
  if (!low) throw ZeroVectorError("limit_along_arc: vector vanishes identically along the arc");
  std::vector<Scalar> out;
  for (const auto& p : sub) out.push_back(p.coeff(*low));
  return out;
}

namespace {

bool is_zero_vector(const std::vector<Scalar>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Scalar> specialise(const std::vector<Scalar>& v, const Scalar& c) {
  std::vector<Scalar> out;
  for (const auto& x : v) out.push_back(x.substitute(kArcVar, c));
  return out;
}

/// A Scalar polynomial in c, as a univariate polynomial with c-free coefficients.
UPoly as_poly_in_c(const Scalar& s) {
  if (s.den().mentions(kArcVar)) throw std::logic_error("arc coefficient in a denominator");
  UPoly p;
  for (const auto& [k, coeff] : s.num().collect(kArcVar)) p = p + UPoly::monomial(Scalar(coeff, s.den()), k);
  return p;
}

struct RootSet {
  std::set<mpq_class> rational;          // nonzero rational values of c
  std::vector<std::string> unresolved;   // factors whose roots we cannot represent
};

/// Nonzero values of c at which every entry of `v` vanishes.
void common_roots(const std::vector<Scalar>& v, RootSet& out) {
  UPoly g;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    g = gcd(g, as_poly_in_c(x));
    if (*g.degree() == 0) return;
  }
  if (g.is_zero()) return;
  g = g.shifted(-static_cast<int>(*g.order()));
  if (*g.degree() == 0) return;
  auto q = to_rational(g);
  if (!q) {
    out.unresolved.push_back(g.to_string("c"));
    return;
  }
  UPolyQ rest = *q;
  for (const auto& r : q->rational_roots()) {
    out.rational.insert(r);
    UPolyQ lin({-r, mpq_class(1)});
    while (lin.divides(rest)) rest = rest.divmod(lin).first;
  }
  if (rest.degree() >= 1) out.unresolved.push_back(rest.to_string("c"));
}

/// Small nonzero integers in the order 1, -1, 2, -2, ...
std::vector<long> trial_values() {
  std::vector<long> out;
  for (long k = 1; k <= 64; ++k) {
    out.push_back(k);
    out.push_back(-k);
  }
  return out;
}

class Sweep {
 public:
  Sweep(bool condition_b, const CheckOptions& opts, unsigned n, Verdict& out)
      : b_(condition_b), opts_(opts), n_(n), out_(out) {}

  void run(const std::vector<BiPoly>& sec, const std::vector<BiPoly>& plane, const Arc& prefix, unsigned ram,
           const mpq_class& lower, unsigned depth) {
    std::vector<std::vector<BiPoly>> vecs{plane};
    if (b_) vecs.push_back(sec);
    std::vector<mpq_class> crit;
    for (const auto& c : critical_exponents(vecs))
      if (c > lower) crit.push_back(c);

    std::vector<std::pair<std::optional<mpq_class>, Regime::Kind>> plan;
    mpq_class prev = lower;
    for (const auto& c : crit) {
      plan.emplace_back(mpq_class((prev + c) / 2), Regime::Kind::Sector);
      plan.emplace_back(c, Regime::Kind::Critical);
      prev = c;
    }
    plan.emplace_back(mpq_class(prev + 1), Regime::Kind::Sector);
    plan.emplace_back(std::nullopt, Regime::Kind::Infinity);

    for (const auto& [theta, kind] : plan) visit(sec, plane, prefix, ram, theta, kind, depth);
  }

 private:
  void visit(const std::vector<BiPoly>& sec, const std::vector<BiPoly>& plane, const Arc& prefix, unsigned ram,
             const std::optional<mpq_class>& theta, Regime::Kind kind, unsigned depth) {
    const Scalar c = Scalar::symbol(kArcVar);
    Arc local = theta ? Arc::monomial(*theta, c) : Arc::constant();
    Regime reg;
    reg.kind = kind;
    reg.depth = depth;
    reg.arc = theta ? prefix.refined(*theta / ram, c) : prefix;

    std::vector<Scalar> ell, omega;
    try {
      ell = limit_along_arc(sec, local);
    } catch (const ZeroVectorError&) {
      reg.note = "arc lies in the singular locus";
      out_.regimes.push_back(std::move(reg));
      return;
    }
    try {
      omega = limit_along_arc(plane, local);
    } catch (const ZeroVectorError&) {
      reg.status = Status::Inconclusive;
      reg.note = "tangent plane undefined along the arc (parametrization not immersive)";
      out_.regimes.push_back(std::move(reg));
      return;
    }
    reg.plane = omega;
    std::vector<Scalar> probe;
    if (b_) {
      reg.secant = ell;
      probe = ell;
    } else {
      probe.assign(n_, Scalar());
      probe[0] = Scalar(1);
    }

    auto w = wedge3(probe, omega);
    auto triples = triple_indices(n_);
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k].is_zero()) continue;
      reg.status = Status::Refuted;
      LimitDetail detail{b_ ? ell : std::vector<Scalar>{}, omega, triples[k], w[k]};
      record_refutation(reg, local, ell, omega, detail, k);
      out_.regimes.push_back(std::move(reg));
      return;
    }

    // The wedge vanishes identically in c; special values of c where a
    // leading form degenerates need a refined arc.
    if (!local.has_free_coeff()) {
      out_.regimes.push_back(std::move(reg));
      return;
    }
    RootSet roots;
    common_roots(omega, roots);
    if (b_) common_roots(ell, roots);
    std::vector<mpq_class> todo(roots.rational.begin(), roots.rational.end());
    if (!roots.unresolved.empty()) {
      reg.status = Status::Inconclusive;
      reg.note = "leading form degenerates at roots outside Q: ";
      for (std::size_t i = 0; i < roots.unresolved.size(); ++i) reg.note += (i ? "; " : "") + roots.unresolved[i];
    }
    if (!todo.empty() && depth >= opts_.max_depth) {
      reg.status = Status::Inconclusive;
      if (!reg.note.empty()) reg.note += "; ";
      reg.note += "refinement depth exhausted";
      todo.clear();
    }
    if (!todo.empty()) {
      if (!reg.note.empty()) reg.note += "; ";
      reg.note += "refined at c =";
      for (const auto& r : todo) reg.note += " " + format_rational(r);
    }
    out_.regimes.push_back(reg);
    if (reg.status == Status::Inconclusive && out_.reason.empty()) out_.reason = reg.note;

    for (const auto& r : todo) {
      const mpq_class& th = *theta;
      unsigned q = static_cast<unsigned>(th.get_den().get_ui());
      unsigned p = static_cast<unsigned>(th.get_num().get_ui());
      // t = tau^q, a = r tau^p + b.
      BiPoly a_value = BiPoly::monomial(Scalar(r), 0, p) + BiPoly::a();
      BiPoly t_value = BiPoly::monomial(Scalar(1), 0, q);
      std::vector<BiPoly> sec2, plane2;
      for (const auto& e : sec) sec2.push_back(e.compose(a_value, t_value));
      for (const auto& e : plane) plane2.push_back(e.compose(a_value, t_value));
      Arc prefix2 = prefix.refined(th / ram, Scalar(r));
      run(sec2, plane2, prefix2, ram * q, mpq_class(p), depth + 1);
    }
  }

  void record_refutation(Regime& reg, const Arc& local, const std::vector<Scalar>& ell,
                         const std::vector<Scalar>& omega, const LimitDetail& detail, std::size_t k) {
    if (out_.witness) return;
    out_.detail = detail;
    if (!local.has_free_coeff()) {
      out_.witness = reg.arc;
      out_.witness_detail = detail;
      return;
    }
    for (long v : trial_values()) {
      Scalar cv(v);
      auto wk = detail.wedge_value.substitute(kArcVar, cv);
      auto l = specialise(ell, cv);
      auto o = specialise(omega, cv);
      if (wk.is_zero() || is_zero_vector(l) || is_zero_vector(o)) continue;
      out_.witness = reg.arc.with_last_coeff(cv);
      out_.witness_detail = LimitDetail{b_ ? l : std::vector<Scalar>{}, o, detail.wedge_index, wk};
      return;
    }
    // Every small integer is a root: keep c free (generic).
    out_.witness = reg.arc;
    out_.witness_detail = detail;
    (void)k;
  }

  bool b_;
  const CheckOptions& opts_;
  unsigned n_;
  Verdict& out_;
};

Verdict run_check(const Parametrization& param, const CheckOptions& opts, bool condition_b) {
  Verdict v;
  std::vector<BiPoly> entries = param.entries;
  Arc prefix = Arc::constant();
  if (opts.basepoint == Basepoint::Generic) {
    // Check at a generic point g of the axis: a -> g + a.
    SymbolPool pool;
    Scalar g = Scalar::symbol(pool.fresh());
    BiPoly shift = BiPoly(g) + BiPoly::a();
    for (auto& e : entries) e = e.compose(shift, BiPoly::t());
    prefix = Arc::constant(g);
  }
  Parametrization shifted = param;
  shifted.entries = entries;
  auto sec = secant_vector(shifted);
  auto plane = plucker(jacobian(shifted));
  Sweep(condition_b, opts, param.ambient_dim(), v).run(sec, plane, prefix, 1, mpq_class(0), 0);

  bool inconclusive = false;
  for (const auto& r : v.regimes) {
    if (r.status == Status::Refuted) v.status = Status::Refuted;
    if (r.status == Status::Inconclusive) inconclusive = true;
  }
  if (v.status != Status::Refuted && inconclusive) {
    v.status = Status::Inconclusive;
    if (v.reason.empty())
      for (const auto& r : v.regimes)
        if (r.status == Status::Inconclusive) {
          v.reason = r.note;
          break;
        }
  }
  if (v.status != Status::Inconclusive) v.reason.clear();
  return v;
}

}  // namespace

Verdict whitney_a_check(const Parametrization& param, const CheckOptions& opts) {
  return run_check(param, opts, false);
}

Verdict whitney_b_check(const Parametrization& param, const CheckOptions& opts) {
  return run_check(param, opts, true);
}

WhitneyResult whitney_check_detailed(const Parametrization& param, const CheckOptions& opts) {
  WhitneyResult r{whitney_a_check(param, opts), whitney_b_check(param, opts), {}};
  if (r.a.refuted()) {
    r.overall = r.a;
  } else if (r.b.refuted()) {
    r.overall = r.b;
  } else if (r.a.status == Status::Inconclusive) {
    r.overall = r.a;
  } else {
    r.overall = r.b;
  }
  return r;
}

Verdict whitney_check(const Parametrization& param, const CheckOptions& opts) {
  return whitney_check_detailed(param, opts).overall;
}

}  // namespace eqsing
