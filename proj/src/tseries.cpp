#include "hpd/tseries.hpp"

namespace hpd {

TSeries TSeries::from_poly(const Poly& p, std::size_t order, std::size_t at) {
  TSeries s(p.dim(), order);
  if (at > order) throw Error("series coefficient index beyond truncation order");
  s.coeffs_[at] = p;
  return s;
}

const Poly& TSeries::coeff(std::size_t k) const {
  if (k >= coeffs_.size()) throw Error("series coefficient index beyond truncation order");
  return coeffs_[k];
}

void TSeries::set_coeff(std::size_t k, const Poly& p) {
  if (k >= coeffs_.size()) throw Error("series coefficient index beyond truncation order");
  if (p.dim() != n_) throw Error("series/polynomial dimension mismatch");
  coeffs_[k] = p;
}

bool TSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

std::optional<std::size_t> TSeries::first_nonzero_order() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return k;
  return std::nullopt;
}

void TSeries::check_compatible(const TSeries& o) const {
  if (n_ != o.n_) throw Error("series dimension mismatch");
  if (coeffs_.size() != o.coeffs_.size())
    throw Error("mixed truncation orders in series arithmetic");
}

TSeries TSeries::operator-() const {
  TSeries s(n_, order());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) s.coeffs_[k] = -coeffs_[k];
  return s;
}

TSeries& TSeries::operator+=(const TSeries& o) {
  check_compatible(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
  check_compatible(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  a.check_compatible(b);
  TSeries s(a.n_, a.order());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return s;
}

TSeries TSeries::scaled(const GaussianRational& c) const {
  TSeries s(n_, order());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) s.coeffs_[k] = coeffs_[k].scaled(c);
  return s;
}

TSeries TSeries::times_poly(const Poly& p) const {
  TSeries s(n_, order());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) s.coeffs_[k] = coeffs_[k] * p;
  return s;
}

TSeries TSeries::conj() const {
  TSeries s(n_, order());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) s.coeffs_[k] = coeffs_[k].conj();
  return s;
}

TSeries TSeries::truncate(std::size_t new_order) const {
  if (new_order > order()) throw Error("truncate cannot raise the order");
  TSeries s(n_, new_order);
  for (std::size_t k = 0; k <= new_order; ++k) s.coeffs_[k] = coeffs_[k];
  return s;
}

TSeries TSeries::derivative_t() const {
  if (order() == 0) throw Error("t-derivative requires order >= 1");
  TSeries s(n_, order() - 1);
  for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k)
    s.coeffs_[k] = coeffs_[k + 1].scaled(GaussianRational(static_cast<long>(k + 1)));
  return s;
}

TSeries TSeries::shifted(std::size_t k) const {
  TSeries s(n_, order());
  for (std::size_t j = 0; j + k < coeffs_.size(); ++j) s.coeffs_[j + k] = coeffs_[j];
  return s;
}

TSeries series_invert(const TSeries& s) {
  const Poly& lead = s.coeff(0);
  if (!lead.is_constant() || lead.is_zero())
    throw Error("series reciprocal: leading term is not a unit");
  GaussianRational inv_lead = GaussianRational(1) / lead.constant_value();
  TSeries r(s.dim(), s.order());
  r.set_coeff(0, Poly::constant(s.dim(), inv_lead));
  for (std::size_t k = 1; k <= s.order(); ++k) {
    // lead * r_k = -(sum_{j=1..k} s_j r_{k-j})
    Poly acc(s.dim());
    for (std::size_t j = 1; j <= k; ++j) acc += s.coeff(j) * r.coeff(k - j);
    r.set_coeff(k, (-acc).scaled(inv_lead));
  }
  return r;
}

}  // namespace hpd
