#pragma once

#include "hpd/poisson.hpp"

namespace hpd {

// Input for the order-by-order construction of a one-parameter
// deformation: a holomorphic Poisson structure σ, a potential h (a
// polynomial in z and w whose mixed second derivatives play the role
// of a Kähler-type (1,1)-form ω = ∂∂̄h), and the truncation order N.
struct DeformationInput {
  PoissonStructure sigma;
  Poly h;
  std::size_t order = 4;
};

// Output of the recursion.  Per-order pieces are order-0 forms (plain
// polynomial coefficients); beta/phi are the assembled series
//   β = Σ_{k>=1} t^k β_k,   φ = Σ_{k>=1} t^k φ_k,   φ_k = σ(∂β_k),
// both truncated at t^N.  mc_residual = delbar(φ) + ½[φ,φ] is kept so
// callers can report it; for a correct build it is identically zero.
// first_order_diff is t¹(φ) − σ·(∂∂̄h), also expected zero.
struct DeformationResult {
  std::size_t order = 0;
  std::vector<MixedForm> beta_k;   // β_1..β_N   (index k-1)
  std::vector<MixedForm> gamma_k;  // γ_2..γ_N   (index k-2)
  std::vector<TangentForm> phi_k;  // φ_1..φ_N   (index k-1)
  MixedForm beta;
  TangentForm phi;
  TangentForm mc_residual;
  TangentForm first_order_diff;

  DeformationResult(std::size_t n, std::size_t N)
      : order(N), beta(n, N), phi(n, N), mc_residual(n, N), first_order_diff(n, 0) {}
};

// β_1 = ∂̄h = Σ_k (∂h/∂w_k) dz̄_k as an order-0 (0,1)-form.
MixedForm beta_one(const Poly& h);

// Convenience for scenarios that specify a constant-coefficient ω
// directly: synthesizes h = Σ_{j,k} z_j ω_{jk̄} w_k.
Poly potential_from_constant_omega(std::size_t n,
                                   const std::vector<std::vector<GaussianRational>>& omega);

// Obstruction at order k >= 2 from the lower-order β's:
//   γ_k = Σ_{l=1}^{k-1} pb_form(β_l, β_{k-l}).
// betas holds β_1..β_{k-1} as order-0 forms.
MixedForm gamma_n(const PoissonStructure& sig, const std::vector<MixedForm>& betas);

// Primitive choice β_k = ½ · homotopy(γ_k), so that 2 ∂̄β_k = γ_k.
// The homotopy verifies ∂̄-closure of γ_k (Jacobi guard) and throws
// when it fails.
MixedForm beta_n(const MixedForm& gamma);

// σ(∂β) for a (0,1)-form β: component on ∂_j ⊗ dz̄_i is the j-th
// Hamiltonian component of the coefficient β_ī.
TangentForm sigma_del(const PoissonStructure& sig, const MixedForm& beta);

// Runs the full recursion up to t^N and assembles the outputs.
DeformationResult run_recursion(const DeformationInput& in);

// Closure identities satisfied by the assembled β:
//   ∂̄β = ½ pb_form(β,β)          (checked mod t^{N+1})
//   ∂̄β̇ = pb_form(β̇, β)           (checked mod t^N; the t-derivative
//                                  costs one truncation order)
struct BetaClosure {
  MixedForm closure_residual;  // order N
  MixedForm dot_residual;      // order N-1
  BetaClosure(std::size_t n, std::size_t N)
      : closure_residual(n, N), dot_residual(n, N > 0 ? N - 1 : 0) {}
};
BetaClosure beta_closure_check(const PoissonStructure& sig, const DeformationResult& r);

}  // namespace hpd
