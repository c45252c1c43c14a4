#include "eqsing/scalar.hpp"

#include <stdexcept>

namespace eqsing {

Scalar::Scalar(const MPoly& num, const MPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
  normalize();
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  if (den_.is_constant()) {
    if (den_.constant() != 1) {
      num_ = num_.scaled(1 / den_.constant());
      den_ = MPoly(1);
    }
    return;
  }
  Monomial common = num_.monomial_content().gcd(den_.monomial_content());
  if (!common.is_one()) {
    num_ = num_.divided_by(common);
    den_ = den_.divided_by(common);
  }
  if (auto q = num_.divide_exact(den_)) {
    num_ = std::move(*q);
    den_ = MPoly(1);
    return;
  }
  if (den_.is_constant()) {
    num_ = num_.scaled(1 / den_.constant());
    den_ = MPoly(1);
    return;
  }
  // Make the denominator's leading coefficient 1.
  mpq_class lc = den_.leading().second;
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
}

bool Scalar::is_rational() const { return num_.is_constant() && den_.is_constant(); }

mpq_class Scalar::rational() const {
  if (!is_rational()) throw std::logic_error("Scalar::rational: scalar involves generic symbols");
  return num_.constant() / den_.constant();
}

MPoly Scalar::polynomial() const {
  if (!is_polynomial()) throw std::logic_error("Scalar::polynomial: nonconstant denominator");
  return num_.scaled(1 / den_.constant());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  Scalar r;
  if (den_ == o.den_) {
    r.num_ = num_ + o.num_;
    r.den_ = den_;
  } else if (o.den_.is_constant() && den_.is_constant()) {
    r.num_ = num_.scaled(1 / den_.constant()) + o.num_.scaled(1 / o.den_.constant());
    r.den_ = MPoly(1);
  } else if (auto q = den_.divide_exact(o.den_)) {
    r.num_ = num_ + o.num_ * *q;
    r.den_ = den_;
  } else if (auto q2 = o.den_.divide_exact(den_)) {
    r.num_ = num_ * *q2 + o.num_;
    r.den_ = o.den_;
  } else {
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
  }
  r.normalize();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return {};
  Scalar r;
  if (den_.is_constant() && o.den_.is_constant()) {
    r.num_ = (num_ * o.num_).scaled(1 / (den_.constant() * o.den_.constant()));
    r.den_ = MPoly(1);
    return r;
  }
  // Cross-cancel exact quotients before multiplying out.
  MPoly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  if (!d2.is_constant())
    if (auto q = n1.divide_exact(d2)) {
      n1 = std::move(*q);
      d2 = MPoly(1);
    }
  if (!d1.is_constant())
    if (auto q = n2.divide_exact(d1)) {
      n2 = std::move(*q);
      d1 = MPoly(1);
    }
  r.num_ = n1 * n2;
  r.den_ = d1 * d2;
  r.normalize();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  Scalar inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  inv.normalize();
  return *this * inv;
}

Scalar Scalar::substitute(Var v, const Scalar& value) const {
  if (!mentions(v)) return *this;
  // Substitute into numerator and denominator separately, as power sums.
  auto apply = [&](const MPoly& p) {
    Scalar acc;
    for (const auto& [k, coeff] : p.collect(v)) acc += Scalar(coeff) * pow(value, k);
    return acc;
  };
  return apply(num_) / apply(den_);
}

double Scalar::evaluate(const std::function<double(Var)>& value) const {
  return num_.evaluate(value) / den_.evaluate(value);
}

bool Scalar::operator==(const Scalar& o) const {
  if (den_ == o.den_) return num_ == o.num_;
  return num_ * o.den_ == o.num_ * den_;
}

std::string Scalar::to_string(const std::function<std::string(Var)>& name) const {
  if (den_.is_constant()) return num_.to_string(name);
  return "(" + num_.to_string(name) + ")/(" + den_.to_string(name) + ")";
}

Scalar pow(const Scalar& s, unsigned e) {
  Scalar result(1);
  Scalar base = s;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

}  // namespace eqsing
