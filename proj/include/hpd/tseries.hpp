#pragma once

#include <optional>
#include <vector>

#include "hpd/poly.hpp"

namespace hpd {

// Truncated formal power series in the deformation parameter t with
// polynomial coefficients: c_0 + c_1 t + ... + c_N t^N, everything
// beyond t^N dropped.  The truncation order N is fixed per series and
// must agree between operands: arithmetic between different orders (or
// different underlying variable counts) throws.  Order changes only
// happen through the explicit truncate() / derivative_t() calls.
//
// The parameter is treated as real for conjugation purposes: conj()
// conjugates coefficients and leaves t alone.
class TSeries {
 public:
  TSeries(std::size_t n, std::size_t order)
      : n_(n), coeffs_(order + 1, Poly(n)) {}

  static TSeries from_poly(const Poly& p, std::size_t order, std::size_t at = 0);
  static TSeries one(std::size_t n, std::size_t order) {
    return from_poly(Poly::constant(n, GaussianRational(1)), order);
  }

  std::size_t dim() const { return n_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  const Poly& coeff(std::size_t k) const;
  void set_coeff(std::size_t k, const Poly& p);

  bool is_zero() const;
  std::optional<std::size_t> first_nonzero_order() const;

  TSeries operator-() const;
  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend bool operator==(const TSeries& a, const TSeries& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const TSeries& a, const TSeries& b) { return !(a == b); }

  TSeries scaled(const GaussianRational& c) const;
  TSeries times_poly(const Poly& p) const;
  TSeries conj() const;

  // Explicit truncation to a lower (or equal) order.
  TSeries truncate(std::size_t new_order) const;

  // Formal d/dt: drops one order.  Requires order >= 1.
  TSeries derivative_t() const;

  // Multiply by t^k (shifting coefficients up, dropping overflow).
  TSeries shifted(std::size_t k) const;

 private:
  void check_compatible(const TSeries& o) const;

  std::size_t n_;
  std::vector<Poly> coeffs_;
};

// Reciprocal of a series whose t^0 coefficient is a nonzero constant
// polynomial (a unit of the coefficient ring).  Exact; throws on a
// non-unit leading term.  invert(s) * s == 1 up to the common order.
TSeries series_invert(const TSeries& s);

}  // namespace hpd
