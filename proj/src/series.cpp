#include "eqsing/series.hpp"

#include <algorithm>

namespace eqsing {

SeriesT::SeriesT(const UPoly& p, unsigned order) : c_(order) {
  for (const auto& [e, c] : p.terms())
    if (e < order) c_[e] = c;
}

SeriesT SeriesT::operator+(const SeriesT& o) const {
  SeriesT r(std::min(order(), o.order()));
  for (unsigned k = 0; k < r.order(); ++k) r.c_[k] = c_[k] + o.c_[k];
  return r;
}

SeriesT SeriesT::operator-(const SeriesT& o) const {
  SeriesT r(std::min(order(), o.order()));
  for (unsigned k = 0; k < r.order(); ++k) r.c_[k] = c_[k] - o.c_[k];
  return r;
}

SeriesT SeriesT::operator*(const SeriesT& o) const {
  SeriesT r(std::min(order(), o.order()));
  for (unsigned i = 0; i < r.order(); ++i) {
    if (c_[i].is_zero()) continue;
    for (unsigned j = 0; i + j < r.order(); ++j)
      if (!o.c_[j].is_zero()) r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

SeriesT SeriesT::scaled(const Scalar& k) const {
  SeriesT r(order());
  for (unsigned i = 0; i < order(); ++i) r.c_[i] = c_[i] * k;
  return r;
}

SeriesT SeriesT::truncated(unsigned n) const {
  SeriesT r(std::min(n, order()));
  for (unsigned i = 0; i < r.order(); ++i) r.c_[i] = c_[i];
  return r;
}

SeriesT SeriesT::inverse() const {
  if (order() == 0) return *this;
  if (c_[0].is_zero()) throw NonInvertibleSeries("series inverse: zero constant term");
  SeriesT r(order());
  Scalar inv0 = Scalar(1) / c_[0];
  r.c_[0] = inv0;
  for (unsigned k = 1; k < order(); ++k) {
    Scalar acc;
    for (unsigned j = 1; j <= k; ++j)
      if (!c_[j].is_zero()) acc += c_[j] * r.c_[k - j];
    r.c_[k] = -acc * inv0;
  }
  return r;
}

namespace {

/// Exact rational m-th root, if any.
std::optional<mpq_class> rational_root(const mpq_class& q, unsigned m) {
  if (m == 1) return q;
  if (q < 0 && m % 2 == 0) return std::nullopt;
  mpz_class num = abs(q.get_num()), den = q.get_den();
  mpz_class rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), m) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), m) == 0) return std::nullopt;
  mpq_class r(rn, rd);
  if (q < 0) r = -r;
  return r;
}

}  // namespace

SeriesT series_invert_root(const SeriesT& u, unsigned m) {
  if (m == 0) throw std::invalid_argument("series_invert_root: m must be positive");
  if (u.order() == 0) return u;
  const Scalar& u0 = u[0];
  if (u0.is_zero()) throw NonInvertibleSeries("series_invert_root: zero constant term");
  Scalar v0;
  if (m == 1) {
    v0 = u0;
  } else if (u0 == Scalar(1)) {
    v0 = Scalar(1);
  } else if (u0.is_rational()) {
    auto r = rational_root(u0.rational(), m);
    if (!r) throw NonInvertibleSeries("series_invert_root: constant term is not an m-th power in Q");
    v0 = *r;
  } else {
    throw NonInvertibleSeries("series_invert_root: constant term involves generic symbols");
  }
  // From u v' = (1/m) u' v:  v_k = 1/(k u0) sum_{j=1..k} (j/m - (k - j)) u_j v_{k-j}.
  SeriesT v(u.order());
  v[0] = v0;
  Scalar inv_u0 = Scalar(1) / u0;
  mpq_class alpha(1, m);
  for (unsigned k = 1; k < u.order(); ++k) {
    Scalar acc;
    for (unsigned j = 1; j <= k; ++j) {
      if (u[j].is_zero() || v[k - j].is_zero()) continue;
      mpq_class w = alpha * j - static_cast<long>(k - j);
      acc += Scalar(w) * u[j] * v[k - j];
    }
    v[k] = acc * inv_u0 * Scalar(mpq_class(1, k));
  }
  return v;
}

SeriesT compositional_inverse_factor(const SeriesT& v) {
  // Lagrange inversion: [s^n] t(s) = (1/n) [t^{n-1}] v(t)^{-n}.
  unsigned n = v.order();
  SeriesT w(n);
  if (n == 0) return w;
  SeriesT vinv = v.inverse();
  SeriesT power = vinv;
  for (unsigned k = 1; k <= n; ++k) {
    // t = sum_k c_k s^k, and w = t / s so w_{k-1} = c_k.
    w[k - 1] = power[k - 1] * Scalar(mpq_class(1, k));
    if (k < n) power = power * vinv;
  }
  return w;
}

}  // namespace eqsing
