#include "eqsing/family.hpp"

#include <fstream>
#include <sstream>

#include "eqsing/parse.hpp"
#include "eqsing/wedge.hpp"

namespace eqsing {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Original: return "original";
    case Provenance::Blowup: return "blowup";
    case Provenance::Nash: return "nash";
    case Provenance::Pruned: return "pruned";
  }
  return "original";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "original") return Provenance::Original;
  if (s == "blowup") return Provenance::Blowup;
  if (s == "nash") return Provenance::Nash;
  if (s == "pruned") return Provenance::Pruned;
  throw FormatError("unknown provenance '" + s + "'");
}

Parametrization Parametrization::parse(const std::vector<std::string>& exprs, Provenance provenance) {
  Parametrization p;
  for (const auto& e : exprs) p.entries.push_back(parse_poly(e));
  p.provenance = provenance;
  return p;
}

std::vector<std::string> Parametrization::variable_names() const {
  if (!ambient_vars.empty()) return ambient_vars;
  std::vector<std::string> names;
  for (unsigned i = 1; i <= ambient_dim(); ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string Parametrization::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? ", " : "") << entries[i].to_string();
  os << ")";
  return os.str();
}

ValidationError::ValidationError(Kind kind, unsigned index, const std::string& what)
    : std::runtime_error(what), kind_(kind), index_(index) {}

std::string to_string(ValidationError::Kind k) {
  switch (k) {
    case ValidationError::Kind::TooFewEntries: return "TooFewEntries";
    case ValidationError::Kind::FirstEntryNotA: return "FirstEntryNotA";
    case ValidationError::Kind::EntryNotVanishingOnAxis: return "EntryNotVanishingOnAxis";
    case ValidationError::Kind::DegenerateFiber: return "DegenerateFiber";
  }
  return "?";
}

void validate(const Parametrization& param) {
  using K = ValidationError::Kind;
  if (param.entries.size() < 2)
    throw ValidationError(K::TooFewEntries, 0, "a family needs at least the entries a and one fiber coordinate");
  if (!(param.entries[0] == BiPoly::a()))
    throw ValidationError(K::FirstEntryNotA, 1, "first entry must be exactly a");
  for (unsigned i = 1; i < param.ambient_dim(); ++i) {
    if (!param.entries[i].at_t_zero().is_zero())
      throw ValidationError(K::EntryNotVanishingOnAxis, i + 1,
                            "entry " + std::to_string(i + 1) + " does not vanish on t = 0");
  }
  // The special fiber must be a curve: some phi_i(0, t) is not identically zero.
  bool curve = false;
  for (unsigned i = 1; i < param.ambient_dim() && !curve; ++i) curve = !param.entries[i].at_a(Scalar()).is_zero();
  if (!curve) throw ValidationError(K::DegenerateFiber, 0, "the fiber over a = 0 is degenerate");
}

JacobianMatrix jacobian(const Parametrization& param) {
  JacobianMatrix j;
  for (const auto& e : param.entries) {
    j.d_a.push_back(e.d_da());
    j.d_t.push_back(e.d_dt());
  }
  return j;
}

std::vector<BiPoly> plucker(const JacobianMatrix& jac) { return wedge2(jac.d_a, jac.d_t); }

unsigned multiplicity(const Parametrization& param, const Scalar& a0) {
  std::optional<unsigned> best;
  for (unsigned i = 1; i < param.ambient_dim(); ++i) {
    auto ord = param.entries[i].at_a(a0).order();
    if (ord && (!best || *ord < *best)) best = ord;
  }
  if (!best)
    throw ValidationError(ValidationError::Kind::DegenerateFiber, 0, "all fiber entries vanish identically");
  return *best;
}

unsigned generic_multiplicity(const Parametrization& param) {
  SymbolPool pool;
  return multiplicity(param, Scalar::symbol(pool.fresh()));
}

bool is_equimultiple(const Parametrization& param) {
  return multiplicity(param, Scalar()) == generic_multiplicity(param);
}

ImplicitEquations parse_equations(const std::vector<std::string>& vars, const std::vector<std::string>& polys) {
  ImplicitEquations eqs;
  eqs.vars = vars;
  eqs.sources = polys;
  for (const auto& p : polys) eqs.polys.push_back(parse_expression(p, vars));
  return eqs;
}

bool verify_implicit_equations(const Parametrization& param, const ImplicitEquations& eqs) {
  if (eqs.vars.size() != param.ambient_dim())
    throw std::invalid_argument("verify_implicit_equations: " + std::to_string(eqs.vars.size()) +
                                " variables for ambient dimension " + std::to_string(param.ambient_dim()));
  for (const auto& p : eqs.polys)
    if (!compose_ambient(p, param.entries).is_zero()) return false;
  return true;
}

Parametrization parametrization_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw FormatError("parametrization file must hold a JSON object");
    if (j.value("version", 1) != 1) throw FormatError("unsupported parametrization version");
    std::vector<std::string> src = j.value("source_vars", std::vector<std::string>{"a", "t"});
    if (src.size() != 2) throw FormatError("source_vars must name exactly two variables");
    auto exprs = j.at("entries").get<std::vector<std::string>>();
    Parametrization p;
    for (const auto& e : exprs) p.entries.push_back(parse_poly(e, src));
    if (j.contains("ambient_dim") && j.at("ambient_dim").get<unsigned>() != p.ambient_dim())
      throw FormatError("ambient_dim does not match the number of entries");
    if (j.contains("ambient_vars")) {
      p.ambient_vars = j.at("ambient_vars").get<std::vector<std::string>>();
      if (p.ambient_vars.size() != p.ambient_dim()) throw FormatError("ambient_vars has the wrong length");
    }
    if (j.contains("provenance")) p.provenance = provenance_from_string(j.at("provenance").get<std::string>());
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed parametrization: ") + e.what());
  }
}

nlohmann::json to_json(const Parametrization& param) {
  nlohmann::json j;
  j["version"] = 1;
  j["ambient_dim"] = param.ambient_dim();
  j["source_vars"] = {"a", "t"};
  j["ambient_vars"] = param.variable_names();
  std::vector<std::string> exprs;
  for (const auto& e : param.entries) exprs.push_back(e.to_string());
  j["entries"] = exprs;
  j["provenance"] = to_string(param.provenance);
  return j;
}

ImplicitEquations equations_from_json(const nlohmann::json& j) {
  try {
    return parse_equations(j.at("vars").get<std::vector<std::string>>(),
                           j.at("polys").get<std::vector<std::string>>());
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed equation file: ") + e.what());
  }
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace eqsing
