#pragma once

#include <stdexcept>
#include <vector>

#include "eqsing/scalar.hpp"
#include "eqsing/upoly.hpp"

namespace eqsing {

struct NonInvertibleSeries : std::domain_error {
  using std::domain_error::domain_error;
};

/// Truncated power series  sum_{k < order} c_k s^k + O(s^order).
class SeriesT {
 public:
  explicit SeriesT(unsigned order) : c_(order) {}
  SeriesT(const UPoly& p, unsigned order);

  unsigned order() const { return static_cast<unsigned>(c_.size()); }
  const Scalar& operator[](unsigned k) const { return c_[k]; }
  Scalar& operator[](unsigned k) { return c_[k]; }
  const std::vector<Scalar>& coeffs() const { return c_; }

  SeriesT operator+(const SeriesT& o) const;
  SeriesT operator-(const SeriesT& o) const;
  SeriesT operator*(const SeriesT& o) const;
  SeriesT scaled(const Scalar& k) const;
  /// Multiplicative inverse; needs a nonzero constant term.
  SeriesT inverse() const;
  SeriesT truncated(unsigned order) const;

  bool operator==(const SeriesT& o) const { return c_ == o.c_; }

 private:
  std::vector<Scalar> c_;
};

/// v = u^{1/m}, so that x(t) = t^m u(t) equals s^m exactly for s = t v(t).
///
/// The constant term must be nonzero; for m > 1 it must also be the m-th
/// power of a rational number (no algebraic extensions are introduced).
SeriesT series_invert_root(const SeriesT& u, unsigned m);

/// Compositional inverse of s = t v(t): returns w with t = s w(s).
/// Requires v(0) != 0.
SeriesT compositional_inverse_factor(const SeriesT& v);

}  // namespace eqsing
