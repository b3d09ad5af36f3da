#pragma once

#include "hpd/tseries.hpp"

namespace hpd {

// Square matrix of truncated series, all entries sharing one variable
// count and one truncation order.  Used for the deformed-frame
// matrices, whose t^0 part is the identity.
class SeriesMatrix {
 public:
  SeriesMatrix(std::size_t size, std::size_t n, std::size_t order)
      : size_(size), entries_(size * size, TSeries(n, order)) {}

  static SeriesMatrix identity(std::size_t size, std::size_t n, std::size_t order);

  std::size_t size() const { return size_; }
  std::size_t dim() const { return entries_.front().dim(); }
  std::size_t order() const { return entries_.front().order(); }

  const TSeries& at(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
  void set(std::size_t i, std::size_t j, const TSeries& v);

  SeriesMatrix operator-() const;
  friend SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
  friend bool operator==(const SeriesMatrix& a, const SeriesMatrix& b) {
    return a.size_ == b.size_ && a.entries_ == b.entries_;
  }

  SeriesMatrix transpose() const;
  SeriesMatrix conj() const;
  SeriesMatrix truncate(std::size_t new_order) const;
  bool is_zero() const;

 private:
  std::size_t size_;
  std::vector<TSeries> entries_;  // row-major
};

// Inverse of a matrix whose t^0 coefficient is the identity matrix
// (checked; throws otherwise).  Solved order by order, exactly:
// R_0 = I, R_k = -sum_{j=1..k} M_j R_{k-j}.
SeriesMatrix matrix_series_invert(const SeriesMatrix& m);

}  // namespace hpd
