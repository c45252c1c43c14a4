#include "eqsing/bipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace eqsing {

BiPoly::BiPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Exponent{0, 0}, c);
}

BiPoly BiPoly::monomial(const Scalar& c, unsigned a_exp, unsigned t_exp) {
  BiPoly p;
  if (!c.is_zero()) p.terms_.emplace(Exponent{a_exp, t_exp}, c);
  return p;
}

Scalar BiPoly::coeff(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

void BiPoly::add(Exponent e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  r += o;
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add(e, -c);
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add({e1.a + e2.a, e1.t + e2.t}, c1 * c2);
  return r;
}

BiPoly BiPoly::scaled(const Scalar& k) const {
  if (k.is_zero()) return {};
  BiPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c * k);
  return r;
}

BiPoly BiPoly::d_da() const {
  BiPoly r;
  for (const auto& [e, c] : terms_)
    if (e.a > 0) r.add({e.a - 1, e.t}, c * Scalar(static_cast<long>(e.a)));
  return r;
}

BiPoly BiPoly::d_dt() const {
  BiPoly r;
  for (const auto& [e, c] : terms_)
    if (e.t > 0) r.add({e.a, e.t - 1}, c * Scalar(static_cast<long>(e.t)));
  return r;
}

std::optional<BiPoly> BiPoly::divide_exact(const BiPoly& d) const {
  if (d.is_zero()) throw std::domain_error("BiPoly::divide_exact: division by zero");
  // Leading term for the order (t, then a), lexicographic.
  auto lead = [](const BiPoly& p) {
    auto best = p.terms_.begin();
    for (auto it = p.terms_.begin(); it != p.terms_.end(); ++it)
      if (std::pair(it->first.t, it->first.a) > std::pair(best->first.t, best->first.a)) best = it;
    return *best;
  };
  BiPoly rem = *this;
  BiPoly quot;
  const auto [de, dc] = lead(d);
  while (!rem.is_zero()) {
    const auto [re, rc] = lead(rem);
    if (re.a < de.a || re.t < de.t) return std::nullopt;
    BiPoly step = monomial(rc / dc, re.a - de.a, re.t - de.t);
    quot += step;
    rem = rem - step * d;
  }
  return quot;
}

UPoly BiPoly::at_a(const Scalar& a0) const {
  UPoly r;
  for (const auto& [e, c] : terms_) r = r + UPoly::monomial(c * pow(a0, e.a), e.t);
  return r;
}

UPoly BiPoly::at_t_zero() const {
  UPoly r;
  for (const auto& [e, c] : terms_)
    if (e.t == 0) r = r + UPoly::monomial(c, e.a);
  return r;
}

BiPoly BiPoly::compose(const BiPoly& a_value, const BiPoly& t_value) const {
  BiPoly r;
  std::map<unsigned, BiPoly> apow, tpow;
  auto power = [](std::map<unsigned, BiPoly>& cache, const BiPoly& base, unsigned e) -> const BiPoly& {
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, pow(base, e)).first;
    return it->second;
  };
  for (const auto& [e, c] : terms_) r += (power(apow, a_value, e.a) * power(tpow, t_value, e.t)).scaled(c);
  return r;
}

Scalar BiPoly::evaluate(const Scalar& a0, const Scalar& t0) const {
  Scalar acc;
  for (const auto& [e, c] : terms_) acc += c * pow(a0, e.a) * pow(t0, e.t);
  return acc;
}

BiPoly BiPoly::map_coefficients(const std::function<Scalar(const Scalar&)>& f) const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.add(e, f(c));
  return r;
}

std::string BiPoly::to_string(const std::string& a_name, const std::string& t_name,
                              const std::function<std::string(Var)>& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Ascending t-order, then a-order: the order in which series are read.
  std::vector<std::pair<Exponent, Scalar>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    return std::pair(x.first.t, x.first.a) < std::pair(y.first.t, y.first.a);
  });
  for (const auto& [e, c] : sorted) {
    bool mono = e.a == 0 && e.t == 0;
    std::string cs;
    bool negative = false;
    if (c.is_rational()) {
      mpq_class q = c.rational();
      negative = q < 0;
      mpq_class mag = abs(q);
      if (mag != 1 || mono) cs = mag.get_den() != 1 && !mono ? "(" + format_rational(mag) + ")" : format_rational(mag);
    } else {
      cs = "(" + c.to_string(name) + ")";
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    os << cs;
    bool need_star = !cs.empty();
    auto factor = [&](const std::string& v, unsigned k) {
      if (k == 0) return;
      if (need_star) os << "*";
      os << v;
      if (k > 1) os << "^" << k;
      need_star = true;
    };
    factor(a_name, e.a);
    factor(t_name, e.t);
  }
  return os.str();
}

BiPoly pow(const BiPoly& p, unsigned e) {
  BiPoly result(Scalar(1));
  BiPoly base = p;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

std::optional<unsigned> t_order(const BiPoly& p) {
  if (p.is_zero()) return std::nullopt;
  unsigned best = ~0u;
  for (const auto& [e, c] : p.terms()) best = std::min(best, e.t);
  return best;
}

UPoly leading_coeff_t(const BiPoly& p) {
  auto k = t_order(p);
  if (!k) throw std::domain_error("leading_coeff_t: zero polynomial");
  UPoly r;
  for (const auto& [e, c] : p.terms())
    if (e.t == *k) r = r + UPoly::monomial(c, e.a);
  return r;
}

}  // namespace eqsing
