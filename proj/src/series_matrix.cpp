#include "hpd/series_matrix.hpp"

namespace hpd {

SeriesMatrix SeriesMatrix::identity(std::size_t size, std::size_t n, std::size_t order) {
  SeriesMatrix m(size, n, order);
  for (std::size_t i = 0; i < size; ++i) m.set(i, i, TSeries::one(n, order));
  return m;
}

void SeriesMatrix::set(std::size_t i, std::size_t j, const TSeries& v) {
  if (i >= size_ || j >= size_) throw Error("matrix index out of range");
  if (v.dim() != dim() || v.order() != order())
    throw Error("matrix entry dimension/order mismatch");
  entries_[i * size_ + j] = v;
}

SeriesMatrix SeriesMatrix::operator-() const {
  SeriesMatrix m = *this;
  for (auto& e : m.entries_) e = -e;
  return m;
}

SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.size_ != b.size_) throw Error("matrix size mismatch");
  SeriesMatrix m = a;
  for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] += b.entries_[k];
  return m;
}

SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.size_ != b.size_) throw Error("matrix size mismatch");
  SeriesMatrix m = a;
  for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] -= b.entries_[k];
  return m;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.size_ != b.size_) throw Error("matrix size mismatch");
  SeriesMatrix m(a.size_, a.dim(), a.order());
  for (std::size_t i = 0; i < a.size_; ++i) {
    for (std::size_t j = 0; j < a.size_; ++j) {
      TSeries acc(a.dim(), a.order());
      for (std::size_t k = 0; k < a.size_; ++k) acc += a.at(i, k) * b.at(k, j);
      m.set(i, j, acc);
    }
  }
  return m;
}

SeriesMatrix SeriesMatrix::transpose() const {
  SeriesMatrix m(size_, dim(), order());
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) m.set(j, i, at(i, j));
  return m;
}

SeriesMatrix SeriesMatrix::conj() const {
  SeriesMatrix m(size_, dim(), order());
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) m.set(i, j, at(i, j).conj());
  return m;
}

SeriesMatrix SeriesMatrix::truncate(std::size_t new_order) const {
  SeriesMatrix m(size_, dim(), new_order);
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) m.set(i, j, at(i, j).truncate(new_order));
  return m;
}

bool SeriesMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

SeriesMatrix matrix_series_invert(const SeriesMatrix& m) {
  const std::size_t s = m.size(), n = m.dim(), N = m.order();
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      const Poly& c = m.at(i, j).coeff(0);
      bool ok = (i == j) ? (c == Poly::constant(n, GaussianRational(1))) : c.is_zero();
      if (!ok) throw Error("matrix reciprocal: t^0 part is not the identity");
    }
  }
  // Per-order polynomial matrices R_k with R_0 = I,
  // R_k = -sum_{j=1..k} M_j R_{k-j}.
  std::vector<std::vector<Poly>> rk(N + 1, std::vector<Poly>(s * s, Poly(n)));
  for (std::size_t i = 0; i < s; ++i) rk[0][i * s + i] = Poly::constant(n, GaussianRational(1));
  for (std::size_t k = 1; k <= N; ++k) {
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        Poly acc(n);
        for (std::size_t o = 1; o <= k; ++o)
          for (std::size_t l = 0; l < s; ++l)
            acc += m.at(i, l).coeff(o) * rk[k - o][l * s + j];
        rk[k][i * s + j] = -acc;
      }
    }
  }
  SeriesMatrix r(s, n, N);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      TSeries e(n, N);
      for (std::size_t k = 0; k <= N; ++k) e.set_coeff(k, rk[k][i * s + j]);
      r.set(i, j, e);
    }
  }
  return r;
}

}  // namespace hpd
