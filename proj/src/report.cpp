#include "eqsing/report.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include "eqsing/parse.hpp"
#include "eqsing/wedge.hpp"

namespace eqsing {

using nlohmann::json;

namespace {

json scalars(const std::vector<Scalar>& v) {
  json j = json::array();
  for (const auto& s : v) j.push_back(s.to_string());
  return j;
}

json polys(const std::vector<BiPoly>& v) {
  json j = json::array();
  for (const auto& p : v) j.push_back(p.to_string());
  return j;
}

json rationals(const std::vector<mpq_class>& v) {
  json j = json::array();
  for (const auto& q : v) j.push_back(format_rational(q));
  return j;
}

std::string coeff_string(const Scalar& c) {
  return c == Scalar::symbol(kArcVar) ? std::string("generic") : c.to_string();
}

json detail_json(const LimitDetail& d) {
  json j;
  if (!d.secant.empty()) j["secant"] = scalars(d.secant);
  j["plane"] = scalars(d.plane);
  j["wedge_index"] = {d.wedge_index[0] + 1, d.wedge_index[1] + 1, d.wedge_index[2] + 1};
  j["wedge_value"] = d.wedge_value.to_string();
  return j;
}

json fiber_json(const FiberCharacteristic& fc) {
  json j;
  j["a0"] = fc.a0 ? format_rational(*fc.a0) : std::string("generic");
  j["support"] = fc.support;
  j["chars"] = to_json(fc.chars);
  return j;
}

json error_json(const std::string& kind, const std::string& message) {
  return json{{"error", {{"kind", kind}, {"message", message}}}};
}

std::string format_ld(long double x) {
  if (std::fabs(x) < 1e-12L) x = 0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Lg", x);
  return buf;
}

}  // namespace

json to_json(const Arc& arc) {
  json j;
  j["a0"] = arc.base.to_string();
  if (arc.terms.empty()) {
    j["theta"] = "inf";
    j["c"] = "0";
    return j;
  }
  j["theta"] = format_rational(arc.terms[0].theta);
  j["c"] = coeff_string(arc.terms[0].coeff);
  if (arc.terms.size() > 1) {
    json tail = json::array();
    for (std::size_t i = 1; i < arc.terms.size(); ++i)
      tail.push_back({{"theta", format_rational(arc.terms[i].theta)}, {"c", coeff_string(arc.terms[i].coeff)}});
    j["refinement"] = tail;
  }
  return j;
}

json to_json(const Verdict& v, bool with_regimes) {
  json j;
  j["status"] = to_string(v.status);
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (v.detail) j["limit"] = detail_json(*v.detail);
  if (v.witness_detail) j["witness_limit"] = detail_json(*v.witness_detail);
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (with_regimes && !v.regimes.empty()) {
    json regs = json::array();
    for (const auto& r : v.regimes) {
      json rj;
      rj["kind"] = to_string(r.kind);
      rj["arc"] = to_json(r.arc);
      rj["depth"] = r.depth;
      if (!r.secant.empty()) rj["secant"] = scalars(r.secant);
      if (!r.plane.empty()) rj["plane"] = scalars(r.plane);
      rj["status"] = to_string(r.status);
      if (!r.note.empty()) rj["note"] = r.note;
      regs.push_back(rj);
    }
    j["regimes"] = regs;
  }
  return j;
}

json to_json(const CharSequence& cs) {
  json j;
  j["sequence"] = cs.as_list();
  j["text"] = cs.to_string();
  j["final_gcd"] = cs.final_gcd;
  j["non_primitive"] = cs.non_primitive();
  j["truncation"] = cs.truncation;
  return j;
}

json whitney_section(const Parametrization& param, const CheckOptions& opts) {
  auto r = whitney_check_detailed(param, opts);
  return json{{"a", to_json(r.a)}, {"b", to_json(r.b)}, {"overall", to_json(r.overall, false)}};
}

json zariski_section(const Parametrization& param) {
  auto r = zariski_check_detailed(param);
  SymbolPool pool;
  auto polar = polar_curve(param, pool);
  json j;
  j["verdict"] = to_json(r.verdict, false);
  j["polar_empty"] = r.polar_empty;
  j["polar"] = {{"t_power", polar.t_power}, {"constant_term", polar.constant.to_string()}};
  j["equimultiple"] = r.equimultiple;
  j["multiplicity_origin"] = r.multiplicity_origin;
  j["multiplicity_generic"] = r.multiplicity_generic;
  j["discriminant"] = r.verdict.verified()
                          ? "generic plane projections have a smooth discriminant near the origin"
                          : "some generic plane projection has a singular discriminant at the origin";
  return j;
}

json crosscheck_section(const Parametrization& param, const CheckOptions& opts) {
  auto r = equivalence_crosscheck(param, opts);
  return json{{"agreement", to_string(r.agreement)},
              {"whitney", to_string(r.whitney.status)},
              {"zariski", to_string(r.zariski.status)},
              {"implementation_bug", r.implementation_bug()}};
}

json strong_section(const Parametrization& param, const CheckOptions& opts, const std::vector<mpq_class>& special_a) {
  auto r = strong_equisingularity_check(param, opts, special_a);
  json special = json::array();
  for (const auto& fc : r.special) special.push_back(fiber_json(fc));
  return json{{"verdict", to_json(r.verdict, false)},
              {"whitney", to_string(r.whitney.status)},
              {"generic_fiber", fiber_json(r.generic)},
              {"special_fibers", special}};
}

json char_exponents_section(const Parametrization& param, const std::vector<mpq_class>& special_a) {
  std::vector<mpq_class> values{mpq_class(0)};
  for (const auto& v : special_a)
    if (v != 0) values.push_back(v);
  json special = json::array();
  for (const auto& v : values) special.push_back(fiber_json(fiber_characteristic(param, v)));
  return json{{"generic_fiber", fiber_json(fiber_characteristic(param, std::nullopt))}, {"special_fibers", special}};
}

json modification_section(const Parametrization& original, const ModificationResult& mod) {
  json j;
  j["chart"] = mod.chart;
  j["emitted"] = polys(mod.emitted);
  j["kept"] = polys(mod.modified.entries);
  auto names = mod.modified.variable_names();
  json dropped = json::array();
  for (const auto& d : mod.dropped) {
    std::string expr = d.scalar.to_string();
    json factors = json::array();
    for (const auto& [idx, power] : d.factors) {
      factors.push_back({idx + 1, power});
      expr += "*" + names[idx] + (power > 1 ? "^" + std::to_string(power) : "");
    }
    dropped.push_back({{"coordinate", d.emitted_index + 1},
                       {"entry", d.entry.to_string()},
                       {"scalar", d.scalar.to_string()},
                       {"factors", factors},
                       {"expression", expr}});
  }
  j["dropped"] = dropped;
  json zeros = json::array();
  for (auto z : mod.zero_coordinates) zeros.push_back(z + 1);
  j["zero_coordinates"] = zeros;
  j["pruning_applied"] = mod.pruning_applied;
  j["smooth_chart"] = mod.smooth_chart;
  j["factorization_check"] = check_factorization(original, mod);
  j["parametrization"] = to_json(mod.modified);
  return j;
}

json rolle_section(const RolleCertificate& cert) {
  auto h = hurwitz_count(cert);
  json j;
  j["statement"] =
      "a linear function whose zero fiber on the curve has at least two points has a critical point "
      "outside that fiber";
  j["p"] = cert.p.to_string("t");
  j["d"] = cert.d;
  j["n_distinct"] = cert.n_distinct;
  j["no_witness_needed"] = cert.no_witness_needed;
  j["witness_factor"] = cert.witness_factor.to_string("t");
  if (cert.approx_root) j["approx_root"] = {{"re", format_ld(cert.approx_root->real())}, {"im", format_ld(cert.approx_root->imag())}};
  j["count"] = {{"deg_derivative", h.lhs}, {"absorbed_by_fiber", h.rhs}, {"strict", h.strict()}};
  return j;
}

json equations_section(const Parametrization& param, const ImplicitEquations& eqs) {
  json list = json::array();
  bool all = true;
  for (std::size_t i = 0; i < eqs.polys.size(); ++i) {
    BiPoly composed = compose_ambient(eqs.polys[i], param.entries);
    all = all && composed.is_zero();
    json e{{"poly", eqs.sources[i]}, {"vanishes", composed.is_zero()}};
    if (!composed.is_zero()) e["residual"] = composed.to_string();
    list.push_back(e);
  }
  return json{{"vars", eqs.vars}, {"equations", list}, {"all_vanish", verify_implicit_equations(param, eqs) && all}};
}

namespace {

void run_tasks(std::vector<std::function<void()>>& tasks, unsigned threads) {
  if (threads <= 1) {
    for (auto& t : tasks) t();
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(tasks.size());
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      try {
        tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < std::min<std::size_t>(threads, tasks.size()); ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

json full_report_section(const Parametrization& param, const ReportOptions& opts) {
  json out;
  std::vector<std::function<void()>> tasks;
  json whitney, zariski, crosscheck, strong;
  tasks.push_back([&] { whitney = whitney_section(param, opts.check); });
  tasks.push_back([&] { zariski = zariski_section(param); });
  tasks.push_back([&] { crosscheck = crosscheck_section(param, opts.check); });
  tasks.push_back([&] { strong = strong_section(param, opts.check, opts.special_a); });

  struct Mod {
    const char* name;
    ModificationResult (*fn)(const Parametrization&);
    json section;
    std::optional<ModificationResult> result;
    json whitney, zariski, crosscheck, strong;
  };
  std::vector<Mod> mods{{"blowup", &blowup_singular_locus, {}, {}, {}, {}, {}, {}},
                        {"nash", &nash_modification, {}, {}, {}, {}, {}, {}}};
  for (auto& m : mods) {
    try {
      m.result = m.fn(param);
      m.section = modification_section(param, *m.result);
    } catch (const ModificationError& e) {
      m.section = error_json(to_string(e.kind()), e.what());
      continue;
    }
    const Parametrization& mp = m.result->modified;
    tasks.push_back([&m, &mp, &opts] { m.whitney = whitney_section(mp, opts.check); });
    tasks.push_back([&m, &mp] { m.zariski = zariski_section(mp); });
    tasks.push_back([&m, &mp, &opts] { m.crosscheck = crosscheck_section(mp, opts.check); });
    tasks.push_back([&m, &mp, &opts] { m.strong = strong_section(mp, opts.check, opts.special_a); });
  }
  run_tasks(tasks, opts.threads);

  out["whitney"] = whitney;
  out["zariski"] = zariski;
  out["crosscheck"] = crosscheck;
  out["strong"] = strong;
  for (auto& m : mods) {
    json s = m.section;
    if (m.result) {
      s["whitney"] = m.whitney;
      s["zariski"] = m.zariski;
      s["crosscheck"] = m.crosscheck;
      s["strong"] = m.strong;
    }
    out[m.name] = s;
  }
  return out;
}

json envelope(const std::string& command, const std::string& input_name, const json& input,
              const ReportOptions& opts, json results) {
  json j;
  j["report_version"] = kReportVersion;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["input"] = {{"file", input_name}, {"data", input}};
  j["options"] = {{"depth", opts.check.max_depth},
                  {"basepoint", opts.check.basepoint == Basepoint::Origin ? "origin" : "generic"},
                  {"special_a", rationals(opts.special_a)},
                  {"truncation_cap", "4 * max exponent"}};
  j["results"] = std::move(results);
  return j;
}

std::string headline_status(const std::string& command, const json& r) {
  if (command == "check-whitney") return r.at("overall").at("status");
  if (command == "check-zariski") return r.at("verdict").at("status");
  if (command == "strong") return r.at("verdict").at("status");
  if (command == "crosscheck") {
    std::string a = r.at("agreement");
    if (a == "UNDECIDED") return "Inconclusive";
    if (a == "DISAGREE") return "Error";
    return r.at("whitney");
  }
  if (command == "full-report") {
    for (const auto& s : {r.at("whitney").at("overall").at("status"), r.at("zariski").at("verdict").at("status"),
                          r.at("strong").at("verdict").at("status")})
      if (s == "Inconclusive") return "Inconclusive";
    return r.at("whitney").at("overall").at("status");
  }
  return "Verified";
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

namespace {

bool is_flat(const json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& e : j)
    if (e.is_object() || e.is_array()) return false;
  return true;
}

std::string flat(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + flat(j[i]);
    return s + "]";
  }
  return j.dump();
}

void render(const json& j, int indent, std::ostringstream& os) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (is_flat(v)) {
        os << pad << k << ": " << flat(v) << "\n";
      } else {
        os << pad << k << ":\n";
        render(v, indent + 2, os);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (is_flat(e)) {
        os << pad << "- " << flat(e) << "\n";
      } else {
        os << pad << "-\n";
        render(e, indent + 2, os);
      }
    }
  } else {
    os << pad << flat(j) << "\n";
  }
}

}  // namespace

std::string render_text(const json& j) {
  std::ostringstream os;
  render(j, 0, os);
  return os.str();
}

}  // namespace eqsing
