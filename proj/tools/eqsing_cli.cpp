// Command-line front end: eqsing <command> <input.json> [options]

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "eqsing/parse.hpp"
#include "eqsing/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace eqsing;

namespace {

struct Args {
  std::string input;
  std::string equations;
  unsigned depth = 4;
  std::string basepoint = "origin";
  std::vector<std::string> special_a;
  std::string rho;
  std::string format = "text";
  std::string out;
};

struct CliError {
  std::string kind;
  std::string message;
};

mpq_class parse_rational(const std::string& s) {
  try {
    MPoly p = parse_expression(s, {});
    if (!p.is_constant()) throw CliError{"Usage", "not a rational number: " + s};
    return p.constant();
  } catch (const ParseError&) {
    throw CliError{"Usage", "not a rational number: " + s};
  }
}

std::vector<mpq_class> parse_rational_list(const std::string& s) {
  std::vector<mpq_class> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_rational(item));
  return out;
}

void emit(const Args& args, const std::string& text) {
  if (args.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(args.out);
  if (!f) throw CliError{"IO", "cannot write " + args.out};
  f << text;
}

std::string render(const Args& args, const json& j) {
  return args.format == "json" ? render_json(j) : render_text(j);
}

int exit_code(const std::string& status) {
  if (status == "Inconclusive") return 2;
  if (status == "Error") return 1;
  return 0;
}

Parametrization load_param(const json& data) {
  Parametrization p = parametrization_from_json(data);
  validate(p);
  return p;
}

fs::path modified_path(const Args& args, const std::string& kind) {
  fs::path dir = args.out.empty() ? fs::current_path() : fs::path(args.out).parent_path();
  if (dir.empty()) dir = fs::current_path();
  return dir / (fs::path(args.input).stem().string() + "." + kind + ".json");
}

int run(const std::string& command, const Args& args) {
  ReportOptions opts;
  opts.check.max_depth = args.depth;
  opts.check.basepoint = args.basepoint == "generic" ? Basepoint::Generic : Basepoint::Origin;
  for (const auto& s : args.special_a) opts.special_a.push_back(parse_rational(s));
  opts.threads = std::max(1u, std::thread::hardware_concurrency());

  json data = read_json_file(args.input);
  std::string name = fs::path(args.input).filename().string();
  json results;

  if (command == "rolle") {
    if (!data.is_object() || !data.contains("entries")) throw CliError{"Format", "curve file needs \"entries\""};
    auto curve = parse_curve(data.at("entries").get<std::vector<std::string>>());
    std::vector<mpq_class> rho;
    if (args.rho.empty()) {
      rho.assign(curve.size(), mpq_class(0));
      if (!rho.empty()) rho[0] = 1;
    } else {
      rho = parse_rational_list(args.rho);
    }
    results = rolle_section(rolle_witness(curve, rho));
    json extra = {{"rho", json::array()}};
    for (const auto& q : rho) extra["rho"].push_back(format_rational(q));
    results["functional"] = extra["rho"];
  } else {
    Parametrization param = load_param(data);
    if (command == "check-whitney") {
      results = whitney_section(param, opts.check);
    } else if (command == "check-zariski") {
      results = zariski_section(param);
    } else if (command == "crosscheck") {
      results = crosscheck_section(param, opts.check);
    } else if (command == "strong") {
      results = strong_section(param, opts.check, opts.special_a);
    } else if (command == "char-exponents") {
      results = char_exponents_section(param, opts.special_a);
    } else if (command == "blowup" || command == "nash") {
      auto mod = command == "blowup" ? blowup_singular_locus(param) : nash_modification(param);
      results = modification_section(param, mod);
      fs::path path = modified_path(args, command);
      std::ofstream f(path);
      if (!f) throw CliError{"IO", "cannot write " + path.string()};
      f << to_json(mod.modified).dump(2) << "\n";
      results["written_to"] = path.filename().string();
    } else if (command == "verify-equations") {
      results = equations_section(param, equations_from_json(read_json_file(args.equations)));
    } else if (command == "full-report") {
      results = full_report_section(param, opts);
    }
  }

  json report = envelope(command, name, data, opts, results);
  emit(args, render(args, report));
  return exit_code(headline_status(command, results));
}

int fail(const Args& args, const CliError& e) {
  if (args.format == "json") {
    json j{{"report_version", kReportVersion}, {"error", {{"kind", e.kind}, {"message", e.message}}}};
    try {
      emit(args, render_json(j));
    } catch (const CliError&) {
      std::cout << render_json(j);
    }
  } else {
    std::cerr << "error (" << e.kind << "): " << e.message << "\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equisingularity checks for one-parameter families of parametrized space curves"};
  app.require_subcommand(1);
  Args args;

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec commands[] = {
      {"check-whitney", "Whitney conditions (a) and (b) along the a-axis"},
      {"check-zariski", "Zariski's discriminant criterion via polar curve and equimultiplicity"},
      {"crosscheck", "Compare the Whitney and Zariski checkers"},
      {"strong", "Strong equisingularity (Whitney plus constant characteristic exponents)"},
      {"char-exponents", "Characteristic exponents of generic plane projections of fibers"},
      {"blowup", "Blow-up of the singular locus; writes <input>.blowup.json"},
      {"nash", "Nash modification; writes <input>.nash.json"},
      {"rolle", "Critical point of a linear function on a curve outside its zero fiber"},
      {"verify-equations", "Check that implicit equations vanish on the parametrization"},
      {"full-report", "Every check, also on the blow-up and the Nash modification"},
  };
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("input", args.input, "Input JSON file")->required();
    if (std::string(c.name) == "verify-equations")
      sub->add_option("equations", args.equations, "Equation JSON file")->required();
    if (std::string(c.name) == "rolle")
      sub->add_option("--rho", args.rho, "Coefficients of the linear functional, comma separated (default e1)");
    sub->add_option("--depth", args.depth, "Refinement depth for arc analysis")->capture_default_str();
    sub->add_option("--basepoint", args.basepoint, "Point of the a-axis to check at")
        ->check(CLI::IsMember({"origin", "generic"}))
        ->capture_default_str();
    sub->add_option("--special-a", args.special_a, "Extra special value of a for fiber comparison")
        ->allow_extra_args(false);
    sub->add_option("--format", args.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    sub->add_option("--out", args.out, "Write the report to this path");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  std::string command = app.get_subcommands().front()->get_name();

  try {
    return run(command, args);
  } catch (const CliError& e) {
    return fail(args, e);
  } catch (const ParseError& e) {
    return fail(args, {"Parse", e.what()});
  } catch (const ValidationError& e) {
    return fail(args, {"Validation." + to_string(e.kind()), e.what()});
  } catch (const IoError& e) {
    return fail(args, {"IO", e.what()});
  } catch (const FormatError& e) {
    return fail(args, {"Format", e.what()});
  } catch (const ModificationError& e) {
    return fail(args, {"Modification." + to_string(e.kind()), e.what()});
  } catch (const RolleError& e) {
    return fail(args, {"Rolle." + to_string(e.kind()), e.what()});
  } catch (const std::exception& e) {
    return fail(args, {"Error", e.what()});
  }
}
