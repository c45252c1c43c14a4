#include "eqsing/arc.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eqsing {

Arc Arc::monomial(const mpq_class& theta, const Scalar& c, const Scalar& a0) {
  if (theta <= 0) throw std::invalid_argument("Arc: exponent must be positive");
  return Arc{a0, {ArcTerm{theta, c}}};
}

std::optional<mpq_class> Arc::theta() const {
  if (terms.empty()) return std::nullopt;
  return terms.front().theta;
}

unsigned Arc::ramification() const {
  unsigned long q = 1;
  for (const auto& term : terms) q = std::lcm(q, term.theta.get_den().get_ui());
  return static_cast<unsigned>(q);
}

Arc Arc::refined(const mpq_class& theta, const Scalar& c) const {
  if (!terms.empty() && theta <= terms.back().theta)
    throw std::invalid_argument("Arc::refined: exponents must increase");
  Arc r = *this;
  r.terms.push_back({theta, c});
  return r;
}

Arc Arc::with_last_coeff(const Scalar& c) const {
  Arc r = *this;
  if (!r.terms.empty()) r.terms.back().coeff = c;
  return r;
}

bool Arc::has_free_coeff() const {
  for (const auto& term : terms)
    if (term.coeff.mentions(kArcVar)) return true;
  return false;
}

std::string Arc::to_string() const {
  std::string out;
  if (!base.is_zero() || terms.empty()) out = base.to_string();
  for (const auto& term : terms) {
    std::string power = term.theta == 1 ? "t" : "t^" + (term.theta.get_den() == 1 ? format_rational(term.theta)
                                                                                   : "(" + format_rational(term.theta) + ")");
    std::string coeff = term.coeff.to_string();
    bool compound = coeff.find_first_of("+-", 1) != std::string::npos;
    std::string piece = term.coeff == Scalar(1) ? power : (compound ? "(" + coeff + ")" : coeff) + "*" + power;
    if (out.empty())
      out = piece;
    else if (piece[0] == '-')
      out += " - " + piece.substr(1);
    else
      out += " + " + piece;
  }
  return "a = " + out;
}

PuiseuxPoly substitute_arc(const BiPoly& p, const Arc& arc) {
  PuiseuxPoly out;
  out.ramification = arc.ramification();
  const unsigned q = out.ramification;
  UPoly a_of_s(arc.base);
  for (const auto& term : arc.terms) {
    mpq_class e = term.theta * q;
    a_of_s = a_of_s + UPoly::monomial(term.coeff, static_cast<unsigned>(e.get_num().get_ui()));
  }
  std::map<unsigned, UPoly> apow;
  apow[0] = UPoly(Scalar(1));
  for (const auto& [e, c] : p.terms()) {
    auto it = apow.find(e.a);
    if (it == apow.end()) {
      UPoly acc(Scalar(1));
      for (unsigned i = 0; i < e.a; ++i) acc = acc * a_of_s;
      it = apow.emplace(e.a, acc).first;
    }
    out.poly = out.poly + it->second.scaled(c).shifted(static_cast<int>(q * e.t));
  }
  return out;
}

}  // namespace eqsing
