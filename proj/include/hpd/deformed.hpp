#pragma once

#include "hpd/mc.hpp"
#include "hpd/series_matrix.hpp"

namespace hpd {

// Frame of the deformed complex structure attached to a deformation
// candidate φ = Σ t^k φ_k (zero at t^0):
//   X̄_i = ∂/∂z̄_i + Σ_j P[j][i] ∂/∂z_j        with P[j][i] = φ^j_ī,
//   X_i  = ∂/∂z_i + Σ_j Q[j][i] ∂/∂z̄_j        with Q = conj(P),
//   ξ_i  = Σ_j R[i][j] (dz_j − Σ_k P[j][k] dz̄_k),  R = (I − PQ)^{-1},
//   ξ̄_i  = conj(ξ_i),
// chosen so that (ξ, ξ̄) is dual to (X, X̄) up to the truncation order.
// S[i][j] = σ(ξ_i, ξ_j) are the deformed Poisson components.
struct Frame {
  std::size_t n, order;
  SeriesMatrix P, Q, R, Rbar, S;
  std::vector<MixedForm> xi, xibar;
  std::vector<CoordVector> x, xbar;

  Frame(std::size_t n_, std::size_t order_)
      : n(n_),
        order(order_),
        P(n_, n_, order_),
        Q(n_, n_, order_),
        R(n_, n_, order_),
        Rbar(n_, n_, order_),
        S(n_, n_, order_) {}

  Frame truncate(std::size_t new_order) const;
};

// Pairing of a 1-form with a coordinate vector field.
TSeries pair_form_vector(const MixedForm& a, const CoordVector& X);

// Lie bracket of coordinate vector fields.
CoordVector lie_bracket(const CoordVector& X, const CoordVector& Y);

// Builds the frame; requires φ of pure degree (0,1) with vanishing t^0
// coefficient.
Frame build_frame(const PoissonStructure& sig, const TangentForm& phi);

// Frame sanity: duality pairings, commutation of the X̄'s (equivalent
// to the integrability equation for φ), antisymmetry of S, and the
// vanishing of the t¹ coefficient of S − σ.
struct FrameChecks {
  ResidualSummary duality;      // worst pairing defect
  ResidualSummary commutation;  // worst [X̄_i, X̄_j] component
  bool s_antisymmetric = false;
  bool s_t0_is_sigma = false;
  bool s_t1_zero = false;
};
FrameChecks frame_checks(const PoissonStructure& sig, const Frame& f);

// Lie derivative of σ (embedded as a coordinate bivector) along each
// X̄_k; identically zero because each φ_k̄ is a Hamiltonian field.
std::vector<CoordBivector> holomorphicity_residual(const PoissonStructure& sig, const Frame& f);

// The deformed tensor as a coordinate bivector: Σ_{i<j} S[i][j] X_i ∧ X_j
// expanded over the 2n coordinate directions.
CoordBivector sigma_a_bivector(const PoissonStructure& sig, const Frame& f);

// d(γ_U) for γ_U = Σ β̇_ī ξ̄_i, decomposed in the frame basis.  The
// ξ̄∧ξ̄ part is the deformed ∂̄ of the variation class (expected zero),
// the ξ∧ξ part vanishes by integrability, and the mixed part is the
// deformed 2-form ω_a with components W[i][j] on ξ_i ∧ ξ̄_j.  All
// arithmetic runs one order below the deformation order (the
// t-derivative loses one order).
struct OmegaA {
  SeriesMatrix W;       // mixed components, size n, order N-1
  SeriesMatrix Wcoeff;  // coefficient part alone: X_k(β̇_ī) on ξ_k ∧ ξ̄_i
  MixedForm coord;      // ω_a recomposed on the coordinate basis
  MixedForm t0_diff;    // t^0(ω_a) − ∂∂̄h, order 0, expected zero
  ResidualSummary dbar_a;  // ξ̄∧ξ̄ part of dγ_U
  ResidualSummary pure_holomorphic;  // ξ∧ξ part of dγ_U
  ResidualSummary d_closure;         // total_d of the recomposed ω_a

  explicit OmegaA(std::size_t n, std::size_t order)
      : W(n, n, order), Wcoeff(n, n, order), coord(n, order), t0_diff(n, 0) {}
};
OmegaA omega_a(const PoissonStructure& sig, const Frame& f, const DeformationResult& r,
               const Poly& h);

// ∂̄ of the deformed structure on (1,0) vector fields Z = Σ_k u^k X_k:
// the component matrix ξ_j([X̄_i, Z]) on the basis X_j ⊗ ξ̄_i.  At t^0
// this is the flat ∂u^j/∂z̄_i.
SeriesMatrix dbar_a_vector(const Frame& f, const std::vector<TSeries>& u);

// Contraction of the deformed tensor with ω_a against the t-variation
// of the frame, on the basis X_j ⊗ ξ̄_i.  The mixed part of d(γ_U)
// splits into a coefficient part Σ X_k(β̇_ī) ξ_k∧ξ̄_i and a connection
// part Σ β̇_ī ∂ξ̄_i (the ξ̄ are not d-constant beyond t^0).  Three
// matrices are formed, all valid mod t^N:
//   contraction_full[j][i]  = Σ_k S[k][j] W[k][i]      (whole mixed part)
//   contraction_coeff[j][i] = Σ_k S[k][j] X_k(β̇_ī)     (coefficient part)
//   variation[j][i]         = Σ_l R[j][l] (φ̇)^l_ī      (= ξ_j(dX̄_i/dt))
// residual = contraction_coeff − variation is the identity proper and
// vanishes on the whole computed window.  correction =
// contraction_full − contraction_coeff is not zero pointwise, but it
// is exact for the deformed ∂̄: a primitive Z = Σ u^j X_j is built
// order by order with the flat homotopy and verified by substituting
// into dbar_a_vector.  Together: contraction_full and variation agree
// up to an exact term, i.e. they determine the same class.
struct KSResult {
  SeriesMatrix contraction_full;   // size n, order N-1
  SeriesMatrix contraction_coeff;  // size n, order N-1
  SeriesMatrix variation;          // size n, order N-1
  SeriesMatrix residual;           // contraction_coeff − variation
  SeriesMatrix correction;         // contraction_full − contraction_coeff
  std::vector<TSeries> primitive;  // u^j with ∂̄_a(Σ u^j X_j) == correction
  bool residual_zero = false;      // residual == 0 at orders 0..N-1
  bool correction_zero = false;    // correction identically zero
  bool correction_exact = false;   // substitution check on the primitive
  ResidualSummary summary;         // of residual
  ResidualSummary exactness;       // of ∂̄_a(primitive) − correction

  explicit KSResult(std::size_t n, std::size_t order)
      : contraction_full(n, n, order),
        contraction_coeff(n, n, order),
        variation(n, n, order),
        residual(n, n, order),
        correction(n, n, order) {}
};
KSResult ks_identity_residual(const PoissonStructure& sig, const Frame& f,
                              const DeformationResult& r, const OmegaA& oa);

// Rational form with a single polynomial denominator base^power.
// Arithmetic is exact; reduce() cancels the base out of the numerator
// while every coefficient stays exactly divisible.
class LocalizedForm {
 public:
  LocalizedForm(MixedForm num, Poly base, unsigned power);

  const MixedForm& numerator() const { return num_; }
  const Poly& base() const { return base_; }
  unsigned power() const { return power_; }

  void reduce();
  // Exact equality against a polynomial form: num == f · base^power.
  bool equals_polynomial(const MixedForm& f) const;
  // Coefficient of t^k as an order-0 localized form.
  LocalizedForm t_coefficient(std::size_t k) const;

 private:
  MixedForm num_;
  Poly base_;
  unsigned power_;
};

// Division S[0][1] = u · σ^{12} order by order; exact for the genuine
// deformation (the degeneracy locus is preserved).  Records the first
// order where exact division fails, if any, and whether u is a unit.
struct RankLocus {
  TSeries u;
  bool exact = false;
  bool unit = false;
  std::size_t first_failed_order = 0;
  explicit RankLocus(std::size_t n, std::size_t order) : u(n, order) {}
};
RankLocus rank_locus_factor(const PoissonStructure& sig, const Frame& f);

// The localized inverse 2-form Σ_{i<j} 2 c_{ij} ξ_i ∧ ξ_j with c the
// localized inverse of S (n = 2: (2/S₁₂)·ξ₁∧ξ₂ = (2 u^{-1}/σ^{12})·ξ₁∧ξ₂).
// Its t¹ coefficient equals −2·∂∂̄h exactly; t^0 gives the undeformed
// inverse form.
struct PeriodFirstOrder {
  bool t1_matches = false;      // t¹ == −2ω (cross-multiplied, exact)
  bool t0_matches = false;      // t^0 numerator == 2 dz₁∧dz₂ (times u^{-1}(0))
  bool s_t1_zero = false;       // t¹ of every S[i][j] vanishes
  MixedForm t1_diff;            // numerator-level difference, order 0
  explicit PeriodFirstOrder(std::size_t n) : t1_diff(n, 0) {}
};
PeriodFirstOrder period_first_order(const PoissonStructure& sig, const Frame& f, const Poly& h);

// Modular vector field of S₁₂ (dimension 2): its t¹ coefficient
// vanishes because S₁₂ = σ^{12} + O(t²).
struct ModularInvariance {
  std::array<TSeries, 2> field;
  bool t1_zero = false;
  ModularInvariance(std::size_t n, std::size_t order)
      : field{TSeries(n, order), TSeries(n, order)} {}
};
ModularInvariance modular_invariance(const PoissonStructure& sig, const Frame& f);

}  // namespace hpd
