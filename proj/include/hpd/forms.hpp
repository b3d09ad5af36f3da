#pragma once

#include <utility>

#include "hpd/tseries.hpp"

namespace hpd {

// Strictly increasing list of 0-based coordinate indices.
using IdxList = std::vector<std::size_t>;

// Summary of a nonzero residual object: the lowest t-order carrying a
// nonzero coefficient, plus term count and maximum total degree at
// that order.  Used uniformly by the verification report.
struct ResidualSummary {
  bool zero = true;
  std::size_t first_order = 0;
  std::size_t terms = 0;
  std::uint32_t max_degree = 0;
};

// Sign of merging two disjoint increasing index lists into one sorted
// list (counts inversions); returns 0 sign flag via boolean. Shared by
// the form implementations.
int merge_sign(const IdxList& a, const IdxList& b);
// Merge disjoint sorted lists; caller guarantees disjointness.
IdxList merge_lists(const IdxList& a, const IdxList& b);
// Insert idx into sorted list; returns +1/-1 sign of moving the new
// factor from the front to its place, or 0 if idx already present.
int insert_index(IdxList& list, std::size_t idx);

// Differential form of mixed type on the local model: a sum of
// components c_{I,J} dz_I ∧ dz̄_J with truncated-series coefficients,
// stored on the canonical basis (both index lists strictly
// increasing, dz factors before dz̄ factors, zero components absent).
// One container can hold several bidegrees at once — the deformed
// frame covectors and their exterior derivatives genuinely mix types.
class MixedForm {
 public:
  using Key = std::pair<IdxList, IdxList>;

  MixedForm(std::size_t n, std::size_t order) : n_(n), order_(order) {}

  static MixedForm from_series(const TSeries& s) {
    MixedForm f(s.dim(), s.order());
    f.add(IdxList{}, IdxList{}, s);
    return f;
  }

  std::size_t dim() const { return n_; }
  std::size_t order() const { return order_; }
  const std::map<Key, TSeries>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  // Accumulate c on dz_I ∧ dz̄_J (I, J must be strictly increasing).
  void add(const IdxList& I, const IdxList& J, const TSeries& c);
  TSeries component(const IdxList& I, const IdxList& J) const;

  // True when every component has |I| == p and |J| == q.
  bool is_bidegree(std::size_t p, std::size_t q) const;

  MixedForm operator-() const;
  MixedForm& operator+=(const MixedForm& o);
  MixedForm& operator-=(const MixedForm& o);
  friend MixedForm operator+(MixedForm a, const MixedForm& b) { return a += b; }
  friend MixedForm operator-(MixedForm a, const MixedForm& b) { return a -= b; }
  friend bool operator==(const MixedForm& a, const MixedForm& b) {
    return a.n_ == b.n_ && a.order_ == b.order_ && a.comps_ == b.comps_;
  }
  friend bool operator!=(const MixedForm& a, const MixedForm& b) { return !(a == b); }

  MixedForm scaled(const GaussianRational& c) const;
  MixedForm times(const TSeries& s) const;

  // Complex conjugation: c dz_I dz̄_J ↦ conj(c) (−1)^{|I||J|} dz_J dz̄_I,
  // with the series conjugation acting on coefficients (t fixed).
  MixedForm conj() const;

  MixedForm truncate(std::size_t new_order) const;
  MixedForm derivative_t() const;
  // Re-embed at a (higher) order, shifting all coefficients to t^shift.
  MixedForm injected(std::size_t new_order, std::size_t shift = 0) const;

  ResidualSummary residual_summary() const;

 private:
  std::size_t n_, order_;
  std::map<Key, TSeries> comps_;
};

MixedForm wedge(const MixedForm& a, const MixedForm& b);
// Holomorphic exterior derivative: adds a dz factor.
MixedForm del(const MixedForm& f);
// Antiholomorphic exterior derivative: adds a dz̄ factor.
MixedForm delbar(const MixedForm& f);
// Full exterior derivative del + delbar (the container carries the
// mixed-bidegree sum directly).
MixedForm total_d(const MixedForm& f);

// Homotopy operator for the Dolbeault complex in the w variables with
// polynomial coefficients, z treated as parameters: for a ∂̄-closed
// form g with every component of dz̄-degree q >= 1,
//   K(c · dz_I dz̄_J) = (−1)^{|I|} / (m+q) · Σ_r (−1)^{r−1} w_{j_r} c · dz_I dz̄_{J∖j_r}
// termwise over monomials c with w-degree m.  Then ∂̄K(g) = g exactly.
// Throws when g is not ∂̄-closed (reporting the residual summary) or
// when a component with q = 0 is present.
MixedForm dolbeault_homotopy(const MixedForm& g);

// Vector-valued form of type (0,q): a sum of components
// c^v_J ∂/∂z_v ⊗ dz̄_J.  The vector leg always points in holomorphic
// directions; coefficients may involve both z and w.
class TangentForm {
 public:
  using Key = std::pair<std::size_t, IdxList>;

  TangentForm(std::size_t n, std::size_t order) : n_(n), order_(order) {}

  std::size_t dim() const { return n_; }
  std::size_t order() const { return order_; }
  const std::map<Key, TSeries>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  void add(std::size_t v, const IdxList& J, const TSeries& c);
  TSeries component(std::size_t v, const IdxList& J) const;
  bool is_degree(std::size_t q) const;

  TangentForm operator-() const;
  TangentForm& operator+=(const TangentForm& o);
  TangentForm& operator-=(const TangentForm& o);
  friend TangentForm operator+(TangentForm a, const TangentForm& b) { return a += b; }
  friend TangentForm operator-(TangentForm a, const TangentForm& b) { return a -= b; }
  friend bool operator==(const TangentForm& a, const TangentForm& b) {
    return a.n_ == b.n_ && a.order_ == b.order_ && a.comps_ == b.comps_;
  }
  friend bool operator!=(const TangentForm& a, const TangentForm& b) { return !(a == b); }

  TangentForm scaled(const GaussianRational& c) const;
  TangentForm truncate(std::size_t new_order) const;
  TangentForm derivative_t() const;
  TangentForm injected(std::size_t new_order, std::size_t shift = 0) const;

  ResidualSummary residual_summary() const;

 private:
  std::size_t n_, order_;
  std::map<Key, TSeries> comps_;
};

// ∂̄ on vector-valued forms (the vector leg is inert):
// ∂̄(c ∂_v ⊗ dz̄_J) = Σ_b ∂c/∂w_b ∂_v ⊗ dz̄_b∧dz̄_J.
TangentForm delbar(const TangentForm& f);

// Bracket of two (0,1) vector-valued forms:
//   [a, b] = Σ_{i,j} [a_ī, b_j̄]_Lie ⊗ dz̄_i ∧ dz̄_j,
// where a_ī, b_j̄ are the coefficient vector fields (holomorphic
// directions, so only z-derivatives enter the Lie bracket).  Symmetric
// in its two arguments for this degree.  The integrability residual of
// a deformation candidate φ is delbar(φ) + ½ tv_bracket(φ, φ).
TangentForm tv_bracket(const TangentForm& a, const TangentForm& b);

}  // namespace hpd
