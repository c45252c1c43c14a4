// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "eqsing/modifications.hpp"
#include "eqsing/parse.hpp"
#include "eqsing/projection.hpp"
#include "eqsing/zariski.hpp"
#include "support.hpp"

using namespace eqsing;
using testsupport::projective_distance;
using testsupport::to_long_double;

namespace {

struct Check {
  std::ostringstream failures;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) failures << "; ";
      failures << what;
      ok = false;
    }
  }
};

Parametrization P(const std::vector<std::string>& e) { return Parametrization::parse(e); }

bool proportional(const std::vector<Scalar>& v, const std::vector<long double>& expected) {
  return projective_distance(to_long_double(v), expected) < 1e-12L;
}

std::vector<Scalar> at_c(const std::vector<Scalar>& v, long c) {
  std::vector<Scalar> out;
  for (const auto& s : v) out.push_back(s.substitute(kArcVar, Scalar(c)));
  return out;
}

/// Kept sets agree up to a nonzero scalar per coordinate and a permutation.
bool same_up_to_scalars(const std::vector<BiPoly>& got, const std::vector<std::string>& want) {
  auto shape = [](const BiPoly& p) {
    std::set<std::pair<unsigned, unsigned>> s;
    for (const auto& [e, c] : p.terms()) s.insert({e.a, e.t});
    return s;
  };
  if (got.size() != want.size()) return false;
  std::multiset<std::set<std::pair<unsigned, unsigned>>> g, w;
  for (const auto& p : got) g.insert(shape(p));
  for (const auto& s : want) w.insert(shape(parse_poly(s)));
  return g == w;
}

bool exactly(const std::vector<BiPoly>& got, const std::vector<std::string>& want) {
  std::vector<BiPoly> w;
  for (const auto& s : want) w.push_back(parse_poly(s));
  return got == w;
}

bool theta_is(const std::optional<Arc>& arc, long theta) {
  return arc && arc->theta() && *arc->theta() == theta;
}

void criterion1(Check& ck) {
  auto p = P({"a", "t^3", "t^4", "a*t^5"});
  auto w = whitney_check_detailed(p);
  ck.expect(w.overall.verified(), "whitney not Verified");
  for (const auto& reg : w.b.regimes) {
    ck.expect(proportional(at_c(reg.secant, 1), {0, 1, 0, 0}), "secant limit differs on " + reg.arc.to_string());
    ck.expect(proportional(at_c(reg.plane, 1), {1, 0, 0, 0, 0, 0}), "plane differs on " + reg.arc.to_string());
  }
  ck.expect(!w.b.regimes.empty(), "no regimes");
  ck.expect(zariski_check(p).verified(), "zariski not Verified");
  auto eqs = parse_equations({"x", "y", "z", "w"}, {"y^4 - z^3", "y*w - x*z^2", "z*w - x*y^3", "x^3*y^5 - w^3",
                                                    "x^2*y^2*z - w^2"});
  ck.expect(verify_implicit_equations(p, eqs), "equations do not vanish");
}

void criterion2(Check& ck) {
  auto p = P({"a", "t^3", "t^5", "a*t^2"});
  auto v = whitney_check(p);
  ck.expect(v.refuted(), "whitney not Refuted");
  ck.expect(theta_is(v.witness, 1), "witness theta is not 1");
  if (v.detail) {
    const Scalar c = Scalar::symbol(kArcVar);
    ck.expect(v.detail->secant == std::vector<Scalar>{0, 1, 0, c}, "secant limit is not (0,1,0,c)");
    // span{(1,0,0,0), (0,3,0,2c)}
    ck.expect(v.detail->plane == std::vector<Scalar>{3, 0, c * Scalar(2), 0, 0, 0}, "plane is not span{e1,(0,3,0,2c)}");
    ck.expect(!v.detail->wedge_value.is_zero(), "wedge coordinate vanishes");
  } else {
    ck.expect(false, "no limit detail");
  }
  ck.expect(multiplicity(p, Scalar()) == 3 && generic_multiplicity(p) == 2, "multiplicities are not 3 and 2");
  ck.expect(zariski_check(p).refuted(), "zariski not Refuted");
  ck.expect(equivalence_crosscheck(p).agreement == Agreement::Agree, "crosscheck does not AGREE");
}

void criterion3(Check& ck) {
  auto p = P({"a", "t^4", "a*t^6", "t^7"});
  ck.expect(whitney_check(p).verified(), "whitney not Verified");
  auto s = strong_equisingularity_check(p);
  ck.expect(s.generic.chars.as_list() == std::vector<unsigned>{4, 6, 7}, "generic chars " + s.generic.chars.to_string());
  ck.expect(s.special.at(0).chars.as_list() == std::vector<unsigned>{4, 7}, "a=0 chars " + s.special[0].chars.to_string());
  ck.expect(s.verdict.refuted(), "strong check not Refuted");
}

void criterion4(Check& ck) {
  auto p = P({"a", "t^4", "a*t^6", "t^7"});
  auto b = blowup_singular_locus(p);
  auto n = nash_modification(p);
  ck.expect(same_up_to_scalars(b.modified.entries, {"a", "t^4", "a*t^2", "t^3"}), "blow-up " + b.modified.to_string());
  ck.expect(same_up_to_scalars(n.modified.entries, {"a", "t^4", "a*t^2", "t^3"}) &&
                exactly(n.modified.entries, {"a", "t^4", "(3/2)*a*t^2", "(7/4)*t^3"}),
            "Nash " + n.modified.to_string());
  auto vb = whitney_check(b.modified);
  ck.expect(vb.refuted(), "blow-up whitney not Refuted");
  ck.expect(theta_is(vb.witness, 1), "blow-up witness theta is not 1");
  if (vb.witness_detail) {
    ck.expect(proportional(vb.witness_detail->secant, {0, 0, 1, 1}), "blow-up limit line is not (0,0,1,1)");
    // span{(1,0,0,0), (0,0,2,3)}: p13 = 2, p14 = 3
    ck.expect(proportional(vb.witness_detail->plane, {0, 2, 3, 0, 0, 0}), "blow-up limit plane is not span{e1,(0,0,2,3)}");
  } else {
    ck.expect(false, "no witness limit for the blow-up");
  }
  ck.expect(whitney_check(n.modified).refuted(), "Nash whitney not Refuted");
  ck.expect(check_factorization(p, b), "blow-up factorization");
  ck.expect(check_factorization(p, n), "Nash factorization");
}

void criterion5(Check& ck) {
  auto p = P({"a", "t^5", "t^8", "a*t^9"});
  ck.expect(whitney_check(p).verified(), "whitney not Verified");
  auto s = strong_equisingularity_check(p);
  ck.expect(s.verdict.verified(), "strong check not Verified");
  ck.expect(s.generic.chars.as_list() == std::vector<unsigned>{5, 8} &&
                s.special.at(0).chars.as_list() == std::vector<unsigned>{5, 8},
            "chars not (5;8) on both fibers");
  auto b = blowup_singular_locus(p);
  auto n = nash_modification(p);
  ck.expect(same_up_to_scalars(b.modified.entries, {"a", "t^3", "a*t^4", "t^5"}), "blow-up " + b.modified.to_string());
  ck.expect(exactly(n.modified.entries, {"a", "t^5", "(8/5)*t^3", "(9/5)*a*t^4"}), "Nash " + n.modified.to_string());
  for (const auto* m : {&b, &n}) {
    auto sm = strong_equisingularity_check(m->modified);
    ck.expect(sm.verdict.refuted(), "strong check on " + m->modified.to_string() + " not Refuted");
    ck.expect(sm.generic.chars.as_list() == std::vector<unsigned>{3, 4} &&
                  sm.special.at(0).chars.as_list() == std::vector<unsigned>{3, 5},
              "chars on " + m->modified.to_string() + " are not (3;4) vs (3;5)");
  }
}

void criterion6(Check& ck) {
  auto st = testsupport::equivalence_fuzz(300, 20261015);
  ck.expect(st.disagree == 0, "decisive disagreement: " + st.first_disagreement);
  ck.expect(st.families >= 200, "too few families");
  std::cout << "  families " << st.families << ", agree " << st.agree << " (verified " << st.verified << ", refuted "
            << st.refuted << "), undecided " << st.undecided << ", disagree " << st.disagree << "\n";
}

void criterion7(Check& ck) {
  struct Named {
    const char* name;
    testsupport::SuiteResult r;
  };
  std::vector<Named> suites{
      {"Pluecker quadric", testsupport::plucker_quadric_suite(100, 1)},
      {"(b) implies (a)", testsupport::b_implies_a_suite(100, 2)},
      {"pruning invariance", testsupport::pruning_invariance_suite()},
      {"multiplicity semicontinuity", testsupport::semicontinuity_suite(100, 3)},
      {"Rolle certificates", testsupport::rolle_suite(200, 4)},
      {"numerical arc limits", testsupport::arc_oracle_suite()},
  };
  for (const auto& s : suites) {
    std::cout << "  " << s.name << ": " << s.r.cases << " cases, " << (s.r.ok ? "ok" : "FAILED: " + s.r.detail) << "\n";
    ck.expect(s.r.ok, s.name);
    ck.expect(s.r.cases > 0, std::string(s.name) + " ran no cases");
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<void(Check&)> run;
  };
  std::vector<Criterion> all{
      {1, "(a,t^3,t^4,at^5) regular, equations vanish", 1, criterion1},
      {2, "(a,t^3,t^5,at^2) refuted at theta=1, multiplicity jump", 1, criterion2},
      {3, "(a,t^4,at^6,t^7) regular, not strongly equisingular", 1, criterion3},
      {4, "(a,t^4,at^6,t^7) blow-up and Nash charts, both not regular", 2, criterion4},
      {5, "(a,t^5,t^8,at^9) strongly equisingular, modifications are not", 2, criterion5},
      {6, "Whitney and Zariski checkers agree", 60, criterion6},
      {7, "property suites", 120, criterion7},
  };
  int failed = 0;
  for (const auto& c : all) {
    Check ck;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(ck);
    } catch (const std::exception& e) {
      ck.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ck.expect(secs < c.budget_s, "took " + std::to_string(secs) + " s");
    std::cout << (ck.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << secs << " s)";
    if (!ck.ok) std::cout << " -- " << ck.failures.str();
    std::cout << "\n";
    failed += !ck.ok;
  }
  return failed == 0 ? 0 : 1;
}
