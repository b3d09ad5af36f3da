#pragma once

#include <array>

#include "hpd/forms.hpp"

namespace hpd {

// Antisymmetric n×n matrix of polynomials, stored upper-triangular.
// This is the raw coefficient matrix of a bivector candidate; no
// integrability is implied at this level (the validated wrapper below
// adds it), so the Jacobiator can be evaluated on arbitrary
// candidates.
class SigmaMatrix {
 public:
  explicit SigmaMatrix(std::size_t n) : n_(n) {}

  std::size_t dim() const { return n_; }
  // Set entry for i<j (0-based).
  void set(std::size_t i, std::size_t j, const Poly& p);
  // Signed access: at(i,j) = -at(j,i), at(i,i) = 0.
  Poly at(std::size_t i, std::size_t j) const;
  bool is_zero() const;
  bool is_holomorphic() const;

  friend bool operator==(const SigmaMatrix& a, const SigmaMatrix& b) {
    return a.n_ == b.n_ && a.upper_ == b.upper_;
  }

 private:
  std::size_t n_;
  std::map<std::pair<std::size_t, std::size_t>, Poly> upper_;
};

// Bracket convention used throughout the library:
//   {f,g} = Σ_{i,j} σ^{ij} ∂f/∂z_i ∂g/∂z_j   (full double sum),
// so {z_i, z_j} = σ^{ij}.  Every contraction of σ with a 1-form feeds
// the form into the FIRST slot: σ(α)^j = Σ_i σ^{ij} α_i.  With these
// choices the Hamiltonian field H_f = σ(∂f) satisfies H_f(g) = {f,g}
// and f ↦ H_f is a Lie-algebra homomorphism: [H_f, H_g] = H_{f,g}.
Poly poisson_bracket(const SigmaMatrix& s, const Poly& f, const Poly& g);
TSeries poisson_bracket(const SigmaMatrix& s, const TSeries& f, const TSeries& g);

// Jacobiator {f,{g,h}} + {h,{f,g}} + {g,{h,f}}.  Identically zero iff
// the candidate is integrable (it is a trivector, so vanishing on
// coordinate triples decides it).
Poly jacobiator(const SigmaMatrix& s, const Poly& f, const Poly& g, const Poly& h);

// Holomorphic Poisson structure on the local model: a holomorphic
// antisymmetric coefficient matrix with vanishing Jacobiator.  For
// n <= 2 integrability is automatic; for n >= 3 construction verifies
// the Jacobiator on all coordinate triples and throws naming the first
// failing triple (1-based).
class PoissonStructure {
 public:
  PoissonStructure(std::size_t n, SigmaMatrix sigma);

  std::size_t dim() const { return matrix_.dim(); }
  const SigmaMatrix& matrix() const { return matrix_; }
  Poly entry(std::size_t i, std::size_t j) const { return matrix_.at(i, j); }
  bool is_zero() const { return matrix_.is_zero(); }

 private:
  SigmaMatrix matrix_;
};

Poly bracket(const PoissonStructure& sig, const Poly& f, const Poly& g);
TSeries bracket(const PoissonStructure& sig, const TSeries& f, const TSeries& g);

// Hamiltonian vector field of f as a degree-0 tangent form:
// component on ∂/∂z_j is Σ_i σ^{ij} ∂f/∂z_i.
TangentForm hamiltonian(const PoissonStructure& sig, const Poly& f);
std::vector<Poly> hamiltonian_components(const SigmaMatrix& s, const Poly& f);
std::vector<TSeries> hamiltonian_components(const SigmaMatrix& s, const TSeries& f);

// σ paired with two 1-forms: Σ_{ij} σ^{ij} a_i b_j where a_i, b_j are
// the dz-components.  σ is a holomorphic bivector, so any dz̄
// components of the arguments are annihilated.  sigma_pair(∂f, ∂g)
// equals {f,g}.
TSeries sigma_pair(const PoissonStructure& sig, const MixedForm& a, const MixedForm& b);

// Contraction of σ with a (1,1)-form ω = ω_{ik̄} dz_i ∧ dz̄_k:
//   (σ·ω)^j_k̄ = Σ_i σ^{ij} ω_{ik̄},
// a (0,1) tangent form.  For ω = ∂∂̄h this is Σ_k H_{a_k̄} ⊗ dz̄_k with
// a_k̄ = ∂h/∂z̄_k — the first-order deformation attached to ω.
TangentForm contract_sigma_form(const PoissonStructure& sig, const MixedForm& omega);

// Poisson bracket of scalar (0,q) forms with q = 1, as used by the
// order-by-order obstruction convolution:
//   pb_form(a, b) = Σ_{i,j} {a_ī, b_j̄} dz̄_j ∧ dz̄_i.
// The wedge order (second argument's leg first) is the convention
// under which the recursion β_n = ½·homotopy(γ_n), φ_k = σ(∂β_k)
// solves the integrability equation with residual
// delbar(φ) + ½[φ,φ]; see the module tests for the pinning oracles.
// Symmetric in its arguments.
MixedForm pb_form(const PoissonStructure& sig, const MixedForm& a, const MixedForm& b);

// Modular vector field of a bivector coefficient p in dimension 2:
//   X = ∂p/∂z_2 ∂/∂z_1 − ∂p/∂z_1 ∂/∂z_2
// (divergence of the Hamiltonian flow against the coordinate volume).
// The series variant applies the same formula coefficientwise.
TangentForm modular_vf(const PoissonStructure& sig);
std::array<TSeries, 2> modular_vf_series(const TSeries& p);

// ---------------------------------------------------------------------------
// Coordinate-indexed tensors over all 2n directions (z_1..z_n followed
// by z̄_1..z̄_n), treating z and z̄ as independent coordinates.

// Derivative of a series in coordinate direction A (0..2n-1).
TSeries coord_derivative(const TSeries& f, std::size_t A);

// Vector field with components over all 2n coordinate directions.
class CoordVector {
 public:
  CoordVector(std::size_t n, std::size_t order)
      : n_(n), comps_(2 * n, TSeries(n, order)) {}

  std::size_t dim() const { return n_; }
  std::size_t order() const { return comps_.front().order(); }
  const TSeries& at(std::size_t A) const { return comps_[A]; }
  void set(std::size_t A, const TSeries& v);
  // X(f) = Σ_A X^A ∂_A f
  TSeries apply(const TSeries& f) const;
  CoordVector truncate(std::size_t new_order) const;

 private:
  std::size_t n_;
  std::vector<TSeries> comps_;
};

// Antisymmetric bivector over the 2n coordinate directions.
class CoordBivector {
 public:
  CoordBivector(std::size_t n, std::size_t order) : n_(n), order_(order) {}

  static CoordBivector from_sigma(const PoissonStructure& sig, std::size_t order);

  std::size_t dim() const { return n_; }
  std::size_t order() const { return order_; }
  // Accumulate on the A<B slot; A>B accumulates the negation.
  void add(std::size_t A, std::size_t B, const TSeries& c);
  // Signed access.
  TSeries at(std::size_t A, std::size_t B) const;
  const std::map<std::pair<std::size_t, std::size_t>, TSeries>& components() const {
    return comps_;
  }
  bool is_zero() const { return comps_.empty(); }
  CoordBivector truncate(std::size_t new_order) const;
  ResidualSummary residual_summary() const;

  // Bracket induced on functions: {f,g} = Σ_{AB} b^{AB} ∂_A f ∂_B g.
  TSeries induced_bracket(const TSeries& f, const TSeries& g) const;

 private:
  std::size_t n_, order_;
  std::map<std::pair<std::size_t, std::size_t>, TSeries> comps_;
};

// Antisymmetric trivector (the Schouten square lives here).
class CoordTrivector {
 public:
  CoordTrivector(std::size_t n, std::size_t order) : n_(n), order_(order) {}

  void add(std::size_t A, std::size_t B, std::size_t C, const TSeries& c);
  TSeries at(std::size_t A, std::size_t B, std::size_t C) const;
  bool is_zero() const { return comps_.empty(); }
  ResidualSummary residual_summary() const;
  const std::map<std::array<std::size_t, 3>, TSeries>& components() const { return comps_; }

 private:
  std::size_t n_, order_;
  std::map<std::array<std::size_t, 3>, TSeries> comps_;
};

// Lie derivative of a bivector along a vector field:
// (L_X b)^{AB} = X(b^{AB}) − Σ_C b^{CB} ∂_C X^A − Σ_C b^{AC} ∂_C X^B.
CoordBivector lie_derivative(const CoordBivector& b, const CoordVector& X);

// Schouten bracket of a bivector with itself:
// [b,b]^{ABC} = 2 Σ_M (b^{AM} ∂_M b^{BC} + b^{BM} ∂_M b^{CA} + b^{CM} ∂_M b^{AB}),
// which equals 2·Jacobiator(z_A, z_B, z_C) of the induced bracket.
// Zero iff the bivector is integrable.
CoordTrivector schouten_square(const CoordBivector& b);

}  // namespace hpd
