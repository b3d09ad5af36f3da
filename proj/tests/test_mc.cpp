#include <doctest.h>

#include "gen.hpp"
#include "hpd/mc.hpp"

using namespace hpd;
using hpdtest::Gen;

namespace {

PoissonStructure flat2() {
  SigmaMatrix m(2);
  m.set(0, 1, Poly::constant(2, GaussianRational(1)));
  return PoissonStructure(2, m);
}

PoissonStructure cubic2() {
  SigmaMatrix m(2);
  m.set(0, 1, parse_poly(2, "z1^3 + z2^3 + 1"));
  return PoissonStructure(2, m);
}

DeformationResult run(const PoissonStructure& sig, const std::string& h, std::size_t N) {
  return run_recursion(DeformationInput{sig, parse_poly(2, h), N});
}

TSeries p0(const std::string& text) { return TSeries::from_poly(parse_poly(2, text), 0); }

}  // namespace

TEST_CASE("first stage is the antiholomorphic gradient of the potential") {
  MixedForm b1 = beta_one(parse_poly(2, "z1*w1 + z2*w2"));
  CHECK(b1.component(IdxList{}, IdxList{0}) == p0("z1"));
  CHECK(b1.component(IdxList{}, IdxList{1}) == p0("z2"));
  MixedForm b1c = beta_one(parse_poly(2, "z1*w2 + z2*w1"));
  CHECK(b1c.component(IdxList{}, IdxList{0}) == p0("z2"));
  CHECK(b1c.component(IdxList{}, IdxList{1}) == p0("z1"));
  CHECK(beta_one(parse_poly(2, "z1^3*z2")).is_zero());
}

TEST_CASE("second-order obstruction is the bracket convolution of the first stage") {
  // flat: gamma_2 = -2 dzb1∧dzb2
  PoissonStructure fl = flat2();
  MixedForm b1 = beta_one(parse_poly(2, "z1*w1 + z2*w2"));
  MixedForm g2 = gamma_n(fl, {b1});
  CHECK(g2.component(IdxList{}, IdxList{0, 1}) == p0("-2"));
  // cubic: gamma_2 = +2 p dzb1∧dzb2 with p = z1^3+z2^3+1
  PoissonStructure cu = cubic2();
  MixedForm c2 = gamma_n(cu, {beta_one(parse_poly(2, "z1*w2 + z2*w1"))});
  CHECK(c2.component(IdxList{}, IdxList{0, 1}) == p0("2*z1^3 + 2*z2^3 + 2"));
  // single nonzero component brackets to zero by antisymmetry
  MixedForm solo(2, 0);
  solo.add(IdxList{}, IdxList{0}, p0("z1*z2"));
  CHECK(gamma_n(fl, {solo}).is_zero());
}

TEST_CASE("stage primitive halves the homotopy and closes the obstruction") {
  PoissonStructure fl = flat2();
  MixedForm g2 = gamma_n(fl, {beta_one(parse_poly(2, "z1*w1 + z2*w2"))});
  MixedForm b2 = beta_n(g2);
  CHECK(b2.component(IdxList{}, IdxList{0}) == p0("1/2*w2"));
  CHECK(b2.component(IdxList{}, IdxList{1}) == p0("-1/2*w1"));
  CHECK(delbar(b2).scaled(GaussianRational(2)) == g2);
  CHECK(beta_n(MixedForm(2, 0)).is_zero());
}

TEST_CASE("flat fixture terminates at first order with zero residual") {
  DeformationResult r = run(flat2(), "z1*w1 + z2*w2", 6);
  CHECK(r.mc_residual.is_zero());
  CHECK(r.first_order_diff.is_zero());
  // phi = t·phi_1 exactly: constant rotation coefficients
  CHECK(r.phi.component(1, IdxList{0}) ==
        TSeries::from_poly(Poly::constant(2, GaussianRational(1)), 6, 1));
  CHECK(r.phi.component(0, IdxList{1}) ==
        TSeries::from_poly(Poly::constant(2, GaussianRational(-1)), 6, 1));
  for (std::size_t k = 2; k <= 6; ++k) CHECK(r.phi_k[k - 1].is_zero());
  // beta_2 is purely antiholomorphic, beta_3 vanishes
  CHECK(r.beta_k[1].component(IdxList{}, IdxList{0}) == p0("1/2*w2"));
  CHECK(r.beta_k[1].component(IdxList{}, IdxList{1}) == p0("-1/2*w1"));
  CHECK(r.beta_k[2].is_zero());
}

TEST_CASE("zero sigma yields the zero deformation") {
  SigmaMatrix zm(2);
  DeformationResult r = run(PoissonStructure(2, zm), "z1*w1 + z2*w2", 4);
  CHECK(r.phi.is_zero());
  CHECK(r.mc_residual.is_zero());
  DeformationResult rh = run(flat2(), "0", 4);
  CHECK(rh.phi.is_zero());
  CHECK(rh.mc_residual.is_zero());
}

TEST_CASE("cubic fixture: frozen second stage and residual zero") {
  DeformationResult r = run(cubic2(), "z1*w2 + z2*w1", 5);
  CHECK(r.mc_residual.is_zero());
  CHECK(r.first_order_diff.is_zero());
  // beta_2 = p (w1 dzb2 - w2 dzb1)/2
  CHECK(r.beta_k[1].component(IdxList{}, IdxList{0}) ==
        p0("-1/2*z1^3*w2 - 1/2*z2^3*w2 - 1/2*w2"));
  CHECK(r.beta_k[1].component(IdxList{}, IdxList{1}) ==
        p0("1/2*z1^3*w1 + 1/2*z2^3*w1 + 1/2*w1"));
  // phi_1 matches the contraction of the constant source with sigma
  CHECK(r.phi_k[0].component(0, IdxList{0}) == p0("-z1^3 - z2^3 - 1"));
  CHECK(r.phi_k[0].component(1, IdxList{1}) == p0("z1^3 + z2^3 + 1"));
  // phi_2 = sigma(del beta_2), hand-derived from the product rule
  Poly p = parse_poly(2, "z1^3 + z2^3 + 1");
  Poly w1 = Poly::variable(2, 0, true), w2 = Poly::variable(2, 1, true);
  Poly a = parse_poly(2, "3/2*z2^2"), b = parse_poly(2, "3/2*z1^2");
  CHECK(r.phi_k[1].component(0, IdxList{0}) == TSeries::from_poly(p * a * w2, 0));
  CHECK(r.phi_k[1].component(1, IdxList{0}) == TSeries::from_poly(-(p * b * w2), 0));
  CHECK(r.phi_k[1].component(0, IdxList{1}) == TSeries::from_poly(-(p * a * w1), 0));
  CHECK(r.phi_k[1].component(1, IdxList{1}) == TSeries::from_poly(p * b * w1, 0));
  // every higher stage is genuinely nonzero for this fixture
  for (std::size_t k = 2; k <= 5; ++k) CHECK(!r.phi_k[k - 1].is_zero());
}

TEST_CASE("each stage re-derives as the sigma contraction of its primitive") {
  DeformationResult r = run(cubic2(), "z1*w2 + z2*w1", 4);
  PoissonStructure cu = cubic2();
  for (std::size_t k = 1; k <= 4; ++k)
    CHECK(sigma_del(cu, r.beta_k[k - 1]) == r.phi_k[k - 1]);
}

TEST_CASE("every obstruction stage is delbar-closed") {
  DeformationResult r = run(cubic2(), "z1*w2 + z2*w1", 5);
  for (const MixedForm& gk : r.gamma_k) CHECK(delbar(gk).is_zero());
}

TEST_CASE("independent per-order residual check via plain polynomial arithmetic") {
  DeformationResult r = run(cubic2(), "z1*w2 + z2*w1", 4);
  const std::size_t n = 2;
  // bracket of two order-0 stages, hand-rolled on components:
  // [f du ⊗ dzb_i, g dv ⊗ dzb_j] = (f dg/dz_u dv − g df/dz_v du) ⊗ dzb_i∧dzb_j
  auto stage_bracket = [&](const TangentForm& x, const TangentForm& y) {
    TangentForm out(n, 0);
    for (const auto& [kx, cx] : x.components())
      for (const auto& [ky, cy] : y.components()) {
        const std::size_t u = kx.first, i = kx.second[0];
        const std::size_t v = ky.first, j = ky.second[0];
        if (i == j) continue;
        IdxList J{j};
        const int sign = insert_index(J, i);  // dzb_i∧dzb_j on the sorted basis
        const Poly f = cx.coeff(0), g = cy.coeff(0);
        const Poly fwd = f * g.dz(u);
        const Poly bwd = g * f.dz(v);
        if (!fwd.is_zero())
          out.add(v, J, TSeries::from_poly(fwd.scaled(GaussianRational(sign)), 0));
        if (!bwd.is_zero())
          out.add(u, J, TSeries::from_poly(bwd.scaled(GaussianRational(-sign)), 0));
      }
    return out;
  };
  for (std::size_t k = 1; k <= 4; ++k) {
    TangentForm acc = delbar(r.phi_k[k - 1]);
    for (std::size_t a = 1; a < k; ++a) {
      TangentForm br = stage_bracket(r.phi_k[a - 1], r.phi_k[k - a - 1]);
      acc += br.scaled(GaussianRational::fraction(1, 2));
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("closure identities for the assembled primitive series") {
  for (auto* which : {"flat", "cubic"}) {
    const bool flat = std::string(which) == "flat";
    PoissonStructure sig = flat ? flat2() : cubic2();
    DeformationResult r = run(sig, flat ? "z1*w1 + z2*w2" : "z1*w2 + z2*w1", 4);
    BetaClosure bc = beta_closure_check(sig, r);
    CHECK(bc.closure_residual.is_zero());
    CHECK(bc.dot_residual.is_zero());
  }
}

TEST_CASE("recursion is homogeneous under scaling the potential") {
  // phi_k(s·h) = s^k phi_k(h): evaluating at t -> s·t matches running with s·h
  PoissonStructure cu = cubic2();
  Poly h = parse_poly(2, "z1*w2 + z2*w1");
  DeformationResult r1 = run_recursion({cu, h, 4});
  DeformationResult r2 = run_recursion({cu, h.scaled(GaussianRational(3)), 4});
  GaussianRational s(1);
  for (std::size_t k = 1; k <= 4; ++k) {
    s *= GaussianRational(3);
    CHECK(r2.phi_k[k - 1] == r1.phi_k[k - 1].scaled(s));
    CHECK(r2.beta_k[k - 1] == r1.beta_k[k - 1].scaled(s));
  }
}

TEST_CASE("constant omega input synthesizes the bilinear potential") {
  std::vector<std::vector<GaussianRational>> omega{
      {GaussianRational(0), GaussianRational(1)},
      {GaussianRational(1), GaussianRational(0)}};
  Poly h = potential_from_constant_omega(2, omega);
  CHECK(h == parse_poly(2, "z1*w2 + z2*w1"));
  // del delbar of the synthesized potential reproduces omega entrywise
  MixedForm hess = del(delbar(MixedForm::from_series(TSeries::from_poly(h, 0))));
  CHECK(hess.component(IdxList{0}, IdxList{1}) == TSeries::one(2, 0));
  CHECK(hess.component(IdxList{1}, IdxList{0}) == TSeries::one(2, 0));
  CHECK(hess.component(IdxList{0}, IdxList{0}).is_zero());
}

TEST_CASE("random potentials over random 2d structures stay integrable") {
  Gen g(51);
  for (int rep = 0; rep < 6; ++rep) {
    SigmaMatrix m(2);
    m.set(0, 1, g.poly(2, 2, 2, /*holomorphic_only=*/true));
    PoissonStructure sig(2, m);
    Poly h = g.poly(2, 2, 3);
    DeformationResult r = run_recursion({sig, h, 3});
    CHECK(r.mc_residual.is_zero());
    CHECK(r.first_order_diff.is_zero());
    BetaClosure bc = beta_closure_check(sig, r);
    CHECK(bc.closure_residual.is_zero());
    CHECK(bc.dot_residual.is_zero());
  }
}
