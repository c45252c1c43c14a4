#pragma once

// One-parameter families of parametrized space curves
//
//   n(a, t) = (a, phi_2(a, t), ..., phi_N(a, t)),
//
// whose singular locus is the a-axis (the image of t = 0).
//
// The parametrization is assumed to be generically injective on fibers (it
// plays the role of the normalization of the surface).  This is not checked:
// multiplicities are computed as minimal fiber orders, which equals the local
// degree of a generic plane projection only under that assumption.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqsing/bipoly.hpp"

namespace eqsing {

enum class Provenance { Original, Blowup, Nash, Pruned };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

struct Parametrization {
  std::vector<BiPoly> entries;
  std::vector<std::string> ambient_vars;  // defaults to x1..xN
  Provenance provenance = Provenance::Original;

  unsigned ambient_dim() const { return static_cast<unsigned>(entries.size()); }
  /// Builds from expression strings in the variables a, t.
  static Parametrization parse(const std::vector<std::string>& exprs,
                               Provenance provenance = Provenance::Original);
  std::vector<std::string> variable_names() const;
  std::string to_string() const;
};

class ValidationError : public std::runtime_error {
 public:
  enum class Kind { TooFewEntries, FirstEntryNotA, EntryNotVanishingOnAxis, DegenerateFiber };
  ValidationError(Kind kind, unsigned index, const std::string& what);
  Kind kind() const { return kind_; }
  /// 1-based entry index, 0 when not entry specific.
  unsigned index() const { return index_; }

 private:
  Kind kind_;
  unsigned index_;
};

std::string to_string(ValidationError::Kind k);

/// Throws ValidationError naming the first violated invariant.  Fiber
/// injectivity is assumed, not checked.
void validate(const Parametrization& param);

struct JacobianMatrix {
  std::vector<BiPoly> d_a;  // first row, starts with 1
  std::vector<BiPoly> d_t;  // second row, starts with 0
};

JacobianMatrix jacobian(const Parametrization& param);

/// The C(N, 2) minors p_ij, i < j, in canonical order.
std::vector<BiPoly> plucker(const JacobianMatrix& jac);

/// Minimal t-order of phi_i(a0, t), i >= 2.  Throws DegenerateFiber when
/// every entry vanishes identically at a0.
unsigned multiplicity(const Parametrization& param, const Scalar& a0);
/// Multiplicity at a generic point of the a-axis.
unsigned generic_multiplicity(const Parametrization& param);
bool is_equimultiple(const Parametrization& param);

struct ImplicitEquations {
  std::vector<std::string> vars;
  std::vector<std::string> sources;
  std::vector<MPoly> polys;
};

ImplicitEquations parse_equations(const std::vector<std::string>& vars,
                                  const std::vector<std::string>& polys);
/// True iff every equation vanishes identically on the parametrization.
bool verify_implicit_equations(const Parametrization& param, const ImplicitEquations& eqs);

// File formats.
//   {"version":1, "ambient_dim":N, "source_vars":["a","t"],
//    "ambient_vars":["x1",...], "entries":[...]}           (parametrization)
//   {"vars":[...], "polys":[...]}                            (implicit equations)

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Parametrization parametrization_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Parametrization& param);
ImplicitEquations equations_from_json(const nlohmann::json& j);
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace eqsing
