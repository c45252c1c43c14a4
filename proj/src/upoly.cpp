#include "eqsing/upoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <Eigen/Core>
#include <unsupported/Eigen/Polynomials>

namespace eqsing {

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

UPoly UPoly::monomial(const Scalar& c, unsigned e) {
  UPoly p;
  if (!c.is_zero()) p.terms_.emplace(e, c);
  return p;
}

void UPoly::add(unsigned e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<unsigned> UPoly::order() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<unsigned> UPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

Scalar UPoly::coeff(unsigned e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
  UPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add(e, c);
  return r;
}

UPoly UPoly::operator-(const UPoly& o) const {
  UPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add(e, -c);
  return r;
}

UPoly UPoly::operator*(const UPoly& o) const {
  UPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add(e1 + e2, c1 * c2);
  return r;
}

UPoly UPoly::scaled(const Scalar& k) const {
  if (k.is_zero()) return {};
  UPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c * k);
  return r;
}

UPoly UPoly::shifted(int k) const {
  UPoly r;
  for (const auto& [e, c] : terms_) {
    int ne = static_cast<int>(e) + k;
    if (ne < 0) throw std::domain_error("UPoly::shifted: negative exponent");
    r.terms_.emplace_hint(r.terms_.end(), static_cast<unsigned>(ne), c);
  }
  return r;
}

UPoly UPoly::derivative() const {
  UPoly r;
  for (const auto& [e, c] : terms_)
    if (e > 0) r.terms_.emplace_hint(r.terms_.end(), e - 1, c * Scalar(static_cast<long>(e)));
  return r;
}

Scalar UPoly::evaluate(const Scalar& x) const {
  Scalar acc;
  unsigned prev = 0;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) acc = acc * pow(x, prev - it->first);
    acc += it->second;
    prev = it->first;
    first = false;
  }
  if (!first) acc = acc * pow(x, prev);
  return acc;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw std::domain_error("UPoly::divmod: division by zero");
  UPoly q;
  UPoly r = *this;
  unsigned dd = *d.degree();
  const Scalar& lc = d.leading();
  while (!r.is_zero() && *r.degree() >= dd) {
    unsigned shift = *r.degree() - dd;
    Scalar k = r.leading() / lc;
    q.add(shift, k);
    r = r - d.scaled(k).shifted(static_cast<int>(shift));
  }
  return {q, r};
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return scaled(Scalar(1) / leading());
}

std::string UPoly::to_string(const std::string& var,
                             const std::function<std::string(Var)>& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    const auto& [e, c] = *it;
    std::string cs = c.to_string(name);
    if (e == 0) {
      os << cs;
      continue;
    }
    if (cs != "1") os << "(" << cs << ")*";
    os << var;
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

UPoly gcd(const UPoly& x, const UPoly& y) {
  UPoly a = x, b = y;
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---------------------------------------------------------------- UPolyQ

UPolyQ::UPolyQ(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPolyQ::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPolyQ UPolyQ::monomial(const mpq_class& c, unsigned e) {
  std::vector<mpq_class> v(e + 1, mpq_class(0));
  v[e] = c;
  return UPolyQ(std::move(v));
}

UPolyQ UPolyQ::from_roots(const std::vector<std::pair<mpq_class, unsigned>>& roots) {
  UPolyQ p = monomial(1, 0);
  for (const auto& [r, m] : roots)
    for (unsigned i = 0; i < m; ++i) p = p * UPolyQ({-r, mpq_class(1)});
  return p;
}

UPolyQ UPolyQ::operator+(const UPolyQ& o) const {
  std::vector<mpq_class> v(std::max(c_.size(), o.c_.size()), mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return UPolyQ(std::move(v));
}

UPolyQ UPolyQ::operator-(const UPolyQ& o) const { return *this + o.scaled(-1); }

UPolyQ UPolyQ::operator*(const UPolyQ& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpq_class> v(c_.size() + o.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return UPolyQ(std::move(v));
}

UPolyQ UPolyQ::scaled(const mpq_class& k) const {
  std::vector<mpq_class> v = c_;
  for (auto& x : v) x *= k;
  return UPolyQ(std::move(v));
}

UPolyQ UPolyQ::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return UPolyQ(std::move(v));
}

std::pair<UPolyQ, UPolyQ> UPolyQ::divmod(const UPolyQ& d) const {
  if (d.is_zero()) throw std::domain_error("UPolyQ::divmod: division by zero");
  if (degree() < d.degree()) return {UPolyQ{}, *this};
  std::vector<mpq_class> r = c_;
  std::vector<mpq_class> q(c_.size() - d.c_.size() + 1, mpq_class(0));
  for (int i = degree(); i >= d.degree(); --i) {
    mpq_class k = r[i] / d.leading();
    if (k == 0) continue;
    int shift = i - d.degree();
    q[shift] = k;
    for (int j = 0; j <= d.degree(); ++j) r[shift + j] -= k * d.c_[j];
  }
  return {UPolyQ(std::move(q)), UPolyQ(std::move(r))};
}

UPolyQ UPolyQ::monic() const {
  if (is_zero()) return {};
  return scaled(1 / leading());
}

bool UPolyQ::divides(const UPolyQ& p) const { return p.divmod(*this).second.is_zero(); }

mpq_class UPolyQ::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

long double UPolyQ::evaluate(long double x) const {
  long double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + static_cast<long double>(it->get_d());
  return acc;
}

std::complex<long double> UPolyQ::evaluate(std::complex<long double> x) const {
  std::complex<long double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + static_cast<long double>(it->get_d());
  return acc;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

std::vector<mpq_class> UPolyQ::rational_roots() const {
  std::set<mpq_class> roots;
  if (degree() <= 0) return {};
  // Clear denominators, strip the root at zero, then apply the rational root test.
  mpz_class l = 1;
  for (const auto& c : c_) l = lcm(l, c.get_den());
  std::vector<mpz_class> z;
  for (const auto& c : c_) z.push_back(mpz_class(c * l));
  std::size_t low = 0;
  while (z[low] == 0) ++low;
  if (low > 0) roots.insert(0);
  std::vector<mpz_class> w(z.begin() + static_cast<long>(low), z.end());
  if (w.size() > 1) {
    auto ps = divisors(w.front());
    auto qs = divisors(w.back());
    UPolyQ reduced(std::vector<mpq_class>(w.begin(), w.end()));
    for (const auto& p : ps)
      for (const auto& q : qs)
        for (int sign : {1, -1}) {
          mpq_class cand(p * sign, q);
          cand.canonicalize();
          if (reduced.evaluate(cand) == 0) roots.insert(cand);
        }
  }
  return {roots.begin(), roots.end()};
}

std::vector<std::complex<long double>> UPolyQ::numeric_roots() const {
  std::vector<std::complex<long double>> out;
  if (degree() <= 0) return out;
  Eigen::Matrix<double, Eigen::Dynamic, 1> coeffs(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) coeffs[static_cast<Eigen::Index>(i)] = c_[i].get_d();
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
  solver.compute(coeffs);
  UPolyQ dp = derivative();
  for (const auto& r : solver.roots()) {
    std::complex<long double> z(r.real(), r.imag());
    for (int it = 0; it < 8; ++it) {
      auto d = dp.evaluate(z);
      if (std::abs(d) == 0) break;
      auto step = evaluate(z) / d;
      z -= step;
      if (std::abs(step) < 1e-18L * std::max<long double>(1, std::abs(z))) break;
    }
    out.push_back(z);
  }
  return out;
}

std::string UPolyQ::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = degree(); e >= 0; --e) {
    const mpq_class& c = c_[static_cast<std::size_t>(e)];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << format_rational(mag);
      continue;
    }
    if (mag != 1) {
      if (mag.get_den() != 1)
        os << "(" << format_rational(mag) << ")*";
      else
        os << format_rational(mag) << "*";
    }
    os << var;
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

UPolyQ gcd(const UPolyQ& x, const UPolyQ& y) {
  UPolyQ a = x, b = y;
  while (!b.is_zero()) {
    UPolyQ r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPolyQ squarefree_part(const UPolyQ& p) {
  if (p.degree() <= 0) return p.monic();
  return p.divmod(gcd(p, p.derivative())).first.monic();
}

UPolyQ coprime_part(const UPolyQ& p, const UPolyQ& q) {
  UPolyQ w = p;
  for (;;) {
    UPolyQ g = gcd(w, q);
    if (g.degree() <= 0) return w;
    w = w.divmod(g).first;
  }
}

std::optional<UPolyQ> to_rational(const UPoly& p) {
  if (p.is_zero()) return UPolyQ{};
  std::vector<mpq_class> v(*p.degree() + 1, mpq_class(0));
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_rational()) return std::nullopt;
    v[e] = c.rational();
  }
  return UPolyQ(std::move(v));
}

std::optional<UPolyQ> to_rational(const MPoly& p, Var v) {
  if (p.is_zero()) return UPolyQ{};
  std::vector<mpq_class> out(p.degree(v) + 1, mpq_class(0));
  for (const auto& [m, c] : p.terms()) {
    if (!m.without(v).is_one()) return std::nullopt;
    out[m.degree(v)] = c;
  }
  return UPolyQ(std::move(out));
}

}  // namespace eqsing
