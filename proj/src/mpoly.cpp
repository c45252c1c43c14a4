#include "eqsing/mpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace eqsing {

std::string default_symbol_name(Var v) {
  if (v == kArcVar) return "c";
  return "g" + std::to_string(v);
}

std::string format_rational(const mpq_class& q) {
  mpq_class r = q;
  r.canonicalize();
  return r.get_str();
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(Var v, unsigned exp) {
  Monomial m;
  if (exp > 0) m.f_.emplace_back(v, exp);
  return m;
}

unsigned Monomial::degree(Var v) const {
  for (const auto& [x, e] : f_)
    if (x == v) return e;
  return 0;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (const auto& f : f_) d += f.second;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  auto i = f_.begin();
  auto j = o.f_.begin();
  while (i != f_.end() || j != o.f_.end()) {
    if (j == o.f_.end() || (i != f_.end() && i->first < j->first)) {
      r.f_.push_back(*i++);
    } else if (i == f_.end() || j->first < i->first) {
      r.f_.push_back(*j++);
    } else {
      r.f_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
  Monomial r;
  auto i = f_.begin();
  auto j = o.f_.begin();
  while (j != o.f_.end()) {
    while (i != f_.end() && i->first < j->first) r.f_.push_back(*i++);
    if (i == f_.end() || i->first != j->first || i->second < j->second) return std::nullopt;
    if (i->second > j->second) r.f_.emplace_back(i->first, i->second - j->second);
    ++i;
    ++j;
  }
  while (i != f_.end()) r.f_.push_back(*i++);
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r;
  auto i = f_.begin();
  auto j = o.f_.begin();
  while (i != f_.end() && j != o.f_.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      r.f_.emplace_back(i->first, std::min(i->second, j->second));
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial Monomial::without(Var v) const {
  Monomial r;
  for (const auto& f : f_)
    if (f.first != v) r.f_.push_back(f);
  return r;
}

int lex_compare(const Monomial& x, const Monomial& y) {
  const auto& a = x.factors();
  const auto& b = y.factors();
  std::size_t i = 0;
  for (; i < a.size() && i < b.size(); ++i) {
    if (a[i].first != b[i].first) return a[i].first < b[i].first ? 1 : -1;
    if (a[i].second != b[i].second) return a[i].second > b[i].second ? 1 : -1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() > b.size() ? 1 : -1;
}

// ---------------------------------------------------------------- MPoly

MPoly::MPoly(const mpq_class& v) {
  if (v != 0) {
    mpq_class c = v;
    c.canonicalize();
    terms_.emplace(Monomial{}, c);
  }
}

MPoly MPoly::symbol(Var v) { return term(1, Monomial::var(v)); }

MPoly MPoly::term(const mpq_class& c, const Monomial& m) {
  MPoly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

mpq_class MPoly::constant() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

std::set<Var> MPoly::variables() const {
  std::set<Var> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) vs.insert(f.first);
  return vs;
}

bool MPoly::mentions(Var v) const {
  for (const auto& [m, c] : terms_)
    if (m.degree(v) > 0) return true;
  return false;
}

unsigned MPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(v));
  return d;
}

Monomial MPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    g = g.gcd(m);
    if (g.is_one()) break;
  }
  return g;
}

void MPoly::add_term(const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  r += o;
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  r -= o;
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r;
  if (is_zero() || o.is_zero()) return r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

MPoly MPoly::scaled(const mpq_class& k) const {
  if (k == 0) return {};
  MPoly r = *this;
  for (auto& [m, c] : r.terms_) c *= k;
  return r;
}

MPoly MPoly::times(const Monomial& mono) const {
  MPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * mono, c);
  return r;
}

MPoly MPoly::divided_by(const Monomial& mono) const {
  MPoly r;
  for (const auto& [m, c] : terms_) {
    auto q = m.divide(mono);
    if (!q) throw std::logic_error("MPoly::divided_by: monomial does not divide");
    r.terms_.emplace_hint(r.terms_.end(), *q, c);
  }
  return r;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& d) const {
  if (d.is_zero()) throw std::domain_error("MPoly::divide_exact: division by zero");
  if (is_zero()) return MPoly{};
  if (d.is_constant()) return scaled(1 / d.constant());
  const auto& [dm, dc] = d.leading();
  MPoly rem = *this;
  MPoly quot;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    auto qm = rm.divide(dm);
    if (!qm) return std::nullopt;
    mpq_class qc = rc / dc;
    MPoly step = term(qc, *qm);
    quot += step;
    rem -= step * d;
  }
  return quot;
}

MPoly MPoly::substitute(Var v, const MPoly& value) const {
  MPoly r;
  std::map<unsigned, MPoly> powers;
  powers[0] = MPoly(1);
  for (const auto& [m, c] : terms_) {
    unsigned e = m.degree(v);
    if (e == 0) {
      r.add_term(m, c);
      continue;
    }
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, pow(value, e)).first;
    r += (it->second * term(c, m.without(v)));
  }
  return r;
}

std::map<unsigned, MPoly> MPoly::collect(Var v) const {
  std::map<unsigned, MPoly> out;
  for (const auto& [m, c] : terms_) out[m.degree(v)].add_term(m.without(v), c);
  return out;
}

double MPoly::evaluate(const std::function<double(Var)>& value) const {
  double sum = 0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (const auto& [v, e] : m.factors()) t *= std::pow(value(v), static_cast<double>(e));
    sum += t;
  }
  return sum;
}

std::string MPoly::to_string(const std::function<std::string(Var)>& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1 && !m.is_one();
    if (!unit) {
      if (mag.get_den() != 1 && !m.is_one())
        os << "(" << format_rational(mag) << ")";
      else
        os << format_rational(mag);
    }
    bool need_star = !unit;
    for (const auto& [v, e] : m.factors()) {
      if (need_star) os << "*";
      os << name(v);
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

MPoly pow(const MPoly& p, unsigned e) {
  MPoly result(1);
  MPoly base = p;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

}  // namespace eqsing
