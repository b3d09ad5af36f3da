#include "hpd/mc.hpp"

namespace hpd {

MixedForm beta_one(const Poly& h) {
  return delbar(MixedForm::from_series(TSeries::from_poly(h, 0)));
}

Poly potential_from_constant_omega(std::size_t n,
                                   const std::vector<std::vector<GaussianRational>>& omega) {
  if (omega.size() != n) throw Error("omega matrix must be n x n");
  Poly h(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (omega[j].size() != n) throw Error("omega matrix must be n x n");
    for (std::size_t k = 0; k < n; ++k) {
      if (omega[j][k].is_zero()) continue;
      h += (Poly::variable(n, j) * Poly::variable(n, k, /*anti=*/true)).scaled(omega[j][k]);
    }
  }
  return h;
}

MixedForm gamma_n(const PoissonStructure& sig, const std::vector<MixedForm>& betas) {
  if (betas.empty()) throw Error("gamma_n needs at least beta_1");
  const std::size_t n = sig.dim();
  const std::size_t k = betas.size() + 1;  // target order
  MixedForm out(n, 0);
  for (std::size_t l = 1; l <= k - 1; ++l)
    out += pb_form(sig, betas[l - 1], betas[k - l - 1]);
  return out;
}

MixedForm beta_n(const MixedForm& gamma) {
  return dolbeault_homotopy(gamma).scaled(GaussianRational::fraction(1, 2));
}

TangentForm sigma_del(const PoissonStructure& sig, const MixedForm& beta) {
  const std::size_t n = sig.dim();
  if (!beta.is_bidegree(0, 1)) throw Error("sigma_del expects a (0,1)-form");
  TangentForm out(n, beta.order());
  for (const auto& [key, c] : beta.components()) {
    const std::size_t i = key.second[0];
    auto ham = hamiltonian_components(sig.matrix(), c);
    for (std::size_t j = 0; j < n; ++j) out.add(j, IdxList{i}, ham[j]);
  }
  return out;
}

DeformationResult run_recursion(const DeformationInput& in) {
  const std::size_t n = in.sigma.dim();
  const std::size_t N = in.order;
  if (N < 1) throw Error("recursion order must be at least 1");
  if (in.h.dim() != n) throw Error("potential dimension mismatch");

  DeformationResult r(n, N);

  r.beta_k.push_back(beta_one(in.h));
  r.phi_k.push_back(sigma_del(in.sigma, r.beta_k[0]));

  for (std::size_t k = 2; k <= N; ++k) {
    MixedForm g = gamma_n(in.sigma, r.beta_k);
    MixedForm res = delbar(g);
    if (!res.is_zero()) {
      auto s = res.residual_summary();
      throw Error("order-" + std::to_string(k) +
                  " obstruction is not delbar-closed (Jacobi guard, " +
                  std::to_string(s.terms) + " residual terms)");
    }
    MixedForm b = beta_n(g);
    r.gamma_k.push_back(g);
    r.beta_k.push_back(b);
    r.phi_k.push_back(sigma_del(in.sigma, b));
  }

  for (std::size_t k = 1; k <= N; ++k) {
    r.beta += r.beta_k[k - 1].injected(N, k);
    r.phi += r.phi_k[k - 1].injected(N, k);
  }

  r.mc_residual =
      delbar(r.phi) + tv_bracket(r.phi, r.phi).scaled(GaussianRational::fraction(1, 2));

  // t¹(φ) must equal the contraction of σ with ∂∂̄h.
  MixedForm omega = del(delbar(MixedForm::from_series(TSeries::from_poly(in.h, 0))));
  TangentForm expected = contract_sigma_form(in.sigma, omega);
  TangentForm got(n, 0);
  for (const auto& [key, c] : r.phi.components())
    got.add(key.first, key.second, TSeries::from_poly(c.coeff(1), 0));
  r.first_order_diff = got - expected;

  return r;
}

BetaClosure beta_closure_check(const PoissonStructure& sig, const DeformationResult& r) {
  const std::size_t n = sig.dim();
  const std::size_t N = r.order;
  BetaClosure out(n, N);
  out.closure_residual =
      delbar(r.beta) - pb_form(sig, r.beta, r.beta).scaled(GaussianRational::fraction(1, 2));
  if (N >= 1) {
    MixedForm beta_dot = r.beta.derivative_t();        // order N-1
    MixedForm beta_low = r.beta.truncate(N >= 1 ? N - 1 : 0);
    out.dot_residual = delbar(beta_dot) - pb_form(sig, beta_dot, beta_low);
  }
  return out;
}

}  // namespace hpd
