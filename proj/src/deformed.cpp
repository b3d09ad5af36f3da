#include "hpd/deformed.hpp"

#include <algorithm>

namespace hpd {

namespace {

// Merge a series into a residual summary: keep the lowest nonzero
// t-order seen, accumulating term counts at that order.
void fold_series(ResidualSummary& acc, const TSeries& s) {
  auto fo = s.first_nonzero_order();
  if (!fo) return;
  const Poly& p = s.coeff(*fo);
  if (acc.zero || *fo < acc.first_order) {
    acc = ResidualSummary{false, *fo, p.term_count(), p.total_degree()};
  } else if (*fo == acc.first_order) {
    acc.terms += p.term_count();
    acc.max_degree = std::max(acc.max_degree, p.total_degree());
  }
}

std::optional<MixedForm> divide_form(const MixedForm& f, const Poly& d) {
  MixedForm out(f.dim(), f.order());
  for (const auto& [key, c] : f.components()) {
    TSeries q(f.dim(), f.order());
    for (std::size_t k = 0; k <= f.order(); ++k) {
      auto piece = c.coeff(k).divide_exact(d);
      if (!piece) return std::nullopt;
      q.set_coeff(k, *piece);
    }
    out.add(key.first, key.second, q);
  }
  return out;
}

}  // namespace

Frame Frame::truncate(std::size_t new_order) const {
  Frame f(n, new_order);
  f.P = P.truncate(new_order);
  f.Q = Q.truncate(new_order);
  f.R = R.truncate(new_order);
  f.Rbar = Rbar.truncate(new_order);
  f.S = S.truncate(new_order);
  for (std::size_t i = 0; i < n; ++i) {
    f.xi.push_back(xi[i].truncate(new_order));
    f.xibar.push_back(xibar[i].truncate(new_order));
    f.x.push_back(x[i].truncate(new_order));
    f.xbar.push_back(xbar[i].truncate(new_order));
  }
  return f;
}

TSeries pair_form_vector(const MixedForm& a, const CoordVector& X) {
  const std::size_t n = a.dim();
  TSeries out(n, a.order());
  for (const auto& [key, c] : a.components()) {
    const auto& [I, J] = key;
    if (I.size() + J.size() != 1) throw Error("pair_form_vector needs a 1-form");
    const std::size_t A = I.empty() ? n + J[0] : I[0];
    out += c * X.at(A);
  }
  return out;
}

CoordVector lie_bracket(const CoordVector& X, const CoordVector& Y) {
  const std::size_t n = X.dim();
  CoordVector out(n, X.order());
  for (std::size_t A = 0; A < 2 * n; ++A) {
    TSeries c(n, X.order());
    for (std::size_t C = 0; C < 2 * n; ++C) {
      c += X.at(C) * coord_derivative(Y.at(A), C);
      c -= Y.at(C) * coord_derivative(X.at(A), C);
    }
    out.set(A, c);
  }
  return out;
}

Frame build_frame(const PoissonStructure& sig, const TangentForm& phi) {
  const std::size_t n = phi.dim();
  const std::size_t N = phi.order();
  if (sig.dim() != n) throw Error("frame: dimension mismatch between sigma and phi");
  if (!phi.is_degree(1)) throw Error("frame: phi must be of pure form degree (0,1)");
  for (const auto& [key, c] : phi.components()) {
    (void)key;
    if (!c.coeff(0).is_zero()) throw Error("frame: phi must vanish at t^0");
  }

  Frame f(n, N);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) f.P.set(j, i, phi.component(j, IdxList{i}));
  f.Q = f.P.conj();
  f.R = matrix_series_invert(SeriesMatrix::identity(n, n, N) - f.P * f.Q);
  f.Rbar = f.R.conj();

  const SeriesMatrix RP = f.R * f.P;
  const TSeries unit = TSeries::one(n, N);
  for (std::size_t i = 0; i < n; ++i) {
    MixedForm form(n, N);
    CoordVector vec(n, N), barvec(n, N);
    for (std::size_t j = 0; j < n; ++j) {
      form.add(IdxList{j}, IdxList{}, f.R.at(i, j));
      form.add(IdxList{}, IdxList{j}, -RP.at(i, j));
      vec.set(n + j, f.Q.at(j, i));
      barvec.set(j, f.P.at(j, i));
    }
    vec.set(i, unit);
    barvec.set(n + i, unit);
    f.xibar.push_back(form.conj());
    f.xi.push_back(std::move(form));
    f.x.push_back(std::move(vec));
    f.xbar.push_back(std::move(barvec));
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const TSeries s = sigma_pair(sig, f.xi[i], f.xi[j]);
      f.S.set(i, j, s);
      f.S.set(j, i, -s);
    }
  return f;
}

FrameChecks frame_checks(const PoissonStructure& sig, const Frame& f) {
  FrameChecks out;
  const std::size_t n = f.n;
  const TSeries unit = TSeries::one(n, f.order);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      TSeries d1 = pair_form_vector(f.xi[i], f.x[j]);
      TSeries d4 = pair_form_vector(f.xibar[i], f.xbar[j]);
      if (i == j) {
        d1 -= unit;
        d4 -= unit;
      }
      fold_series(out.duality, d1);
      fold_series(out.duality, d4);
      fold_series(out.duality, pair_form_vector(f.xi[i], f.xbar[j]));
      fold_series(out.duality, pair_form_vector(f.xibar[i], f.x[j]));
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const CoordVector b = lie_bracket(f.xbar[i], f.xbar[j]);
      for (std::size_t A = 0; A < 2 * n; ++A) fold_series(out.commutation, b.at(A));
    }

  out.s_antisymmetric = true;
  out.s_t0_is_sigma = true;
  out.s_t1_zero = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(f.S.at(i, j) + f.S.at(j, i)).is_zero()) out.s_antisymmetric = false;
      if (f.S.at(i, j).coeff(0) != sig.entry(i, j)) out.s_t0_is_sigma = false;
      if (f.order >= 1 && !f.S.at(i, j).coeff(1).is_zero()) out.s_t1_zero = false;
    }
  return out;
}

std::vector<CoordBivector> holomorphicity_residual(const PoissonStructure& sig, const Frame& f) {
  const CoordBivector b = CoordBivector::from_sigma(sig, f.order);
  std::vector<CoordBivector> out;
  out.reserve(f.n);
  for (std::size_t k = 0; k < f.n; ++k) out.push_back(lie_derivative(b, f.xbar[k]));
  return out;
}

CoordBivector sigma_a_bivector(const PoissonStructure& sig, const Frame& f) {
  (void)sig;
  const std::size_t n = f.n;
  CoordBivector out(n, f.order);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const TSeries& s = f.S.at(i, j);
      if (s.is_zero()) continue;
      for (std::size_t A = 0; A < 2 * n; ++A)
        for (std::size_t B = A + 1; B < 2 * n; ++B) {
          TSeries c = f.x[i].at(A) * f.x[j].at(B) - f.x[i].at(B) * f.x[j].at(A);
          if (!c.is_zero()) out.add(A, B, s * c);
        }
    }
  return out;
}

OmegaA omega_a(const PoissonStructure& sig, const Frame& f, const DeformationResult& r,
               const Poly& h) {
  (void)sig;
  const std::size_t n = f.n;
  const std::size_t N = r.order;
  if (N < 1) throw Error("omega_a needs order >= 1");
  const std::size_t M = N - 1;
  const Frame ft = f.truncate(M);

  const MixedForm bdot = r.beta.derivative_t();
  MixedForm gamma_u(n, M);
  for (std::size_t i = 0; i < n; ++i)
    gamma_u += ft.xibar[i].times(bdot.component(IdxList{}, IdxList{i}));
  const MixedForm dgamma = total_d(gamma_u);

  // Change of covector basis: frame covectors F = T · (dz, dz̄).
  SeriesMatrix T(2 * n, n, M);
  const SeriesMatrix RP = ft.R * ft.P;
  const SeriesMatrix RbarQ = ft.Rbar * ft.Q;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      T.set(i, j, ft.R.at(i, j));
      T.set(i, n + j, -RP.at(i, j));
      T.set(n + i, j, -RbarQ.at(i, j));
      T.set(n + i, n + j, ft.Rbar.at(i, j));
    }
  const SeriesMatrix Tinv = matrix_series_invert(T);

  OmegaA out(n, M);
  SeriesMatrix holo(n, n, M), anti(n, n, M);
  for (const auto& [key, c] : dgamma.components()) {
    const auto& [I, J] = key;
    std::size_t A, B;
    if (I.size() == 2) {
      A = I[0];
      B = I[1];
    } else if (I.size() == 1) {
      A = I[0];
      B = n + J[0];
    } else {
      A = n + J[0];
      B = n + J[1];
    }
    for (std::size_t U = 0; U < 2 * n; ++U)
      for (std::size_t V = U + 1; V < 2 * n; ++V) {
        const TSeries w = c * (Tinv.at(A, U) * Tinv.at(B, V) - Tinv.at(A, V) * Tinv.at(B, U));
        if (w.is_zero()) continue;
        if (V < n)
          holo.set(U, V, holo.at(U, V) + w);
        else if (U < n)
          out.W.set(U, V - n, out.W.at(U, V - n) + w);
        else
          anti.set(U - n, V - n, anti.at(U - n, V - n) + w);
      }
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      fold_series(out.dbar_a, anti.at(i, j));
      fold_series(out.pure_holomorphic, holo.at(i, j));
    }

  // t^0 comparison with the undeformed form ∂∂̄h.
  const MixedForm h_form = MixedForm::from_series(TSeries::from_poly(h, 0));
  MixedForm w0(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Poly c = out.W.at(i, j).coeff(0);
      if (!c.is_zero()) w0.add(IdxList{i}, IdxList{j}, TSeries::from_poly(c, 0));
    }
  out.t0_diff = w0 - del(delbar(h_form));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.coord += wedge(ft.xi[i], ft.xibar[j]).times(out.W.at(i, j));
  out.d_closure = total_d(out.coord).residual_summary();

  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      out.Wcoeff.set(k, i, ft.x[k].apply(bdot.component(IdxList{}, IdxList{i})));
  return out;
}

SeriesMatrix dbar_a_vector(const Frame& f, const std::vector<TSeries>& u) {
  const std::size_t n = f.n;
  const std::size_t ord = f.order;
  if (u.size() != n) throw Error("dbar_a_vector: component count mismatch");
  CoordVector z(n, ord);
  for (std::size_t A = 0; A < 2 * n; ++A) {
    TSeries acc(n, ord);
    for (std::size_t k = 0; k < n; ++k) acc += u[k] * f.x[k].at(A);
    z.set(A, acc);
  }
  SeriesMatrix out(n, n, ord);
  for (std::size_t i = 0; i < n; ++i) {
    const CoordVector b = lie_bracket(f.xbar[i], z);
    for (std::size_t j = 0; j < n; ++j) out.set(j, i, pair_form_vector(f.xi[j], b));
  }
  return out;
}

KSResult ks_identity_residual(const PoissonStructure& sig, const Frame& f,
                              const DeformationResult& r, const OmegaA& oa) {
  (void)sig;
  const std::size_t n = f.n;
  const std::size_t N = r.order;
  const std::size_t M = N - 1;
  const Frame ft = f.truncate(M);
  const TangentForm phidot = r.phi.derivative_t();

  KSResult out(n, M);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      TSeries full(n, M), coeff(n, M), var(n, M);
      for (std::size_t k = 0; k < n; ++k) {
        full += ft.S.at(k, j) * oa.W.at(k, i);
        coeff += ft.S.at(k, j) * oa.Wcoeff.at(k, i);
      }
      for (std::size_t l = 0; l < n; ++l) var += ft.R.at(j, l) * phidot.component(l, IdxList{i});
      out.contraction_full.set(j, i, full);
      out.contraction_coeff.set(j, i, coeff);
      out.variation.set(j, i, var);
      out.residual.set(j, i, coeff - var);
      out.correction.set(j, i, full - coeff);
    }

  out.residual_zero = true;
  out.correction_zero = true;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      fold_series(out.summary, out.residual.at(j, i));
      if (!out.residual.at(j, i).is_zero()) out.residual_zero = false;
      if (!out.correction.at(j, i).is_zero()) out.correction_zero = false;
    }

  if (out.correction_zero) {
    out.correction_exact = true;
    out.primitive.assign(n, TSeries(n, M));
    return out;
  }

  // Build the primitive order by order: at each t-order the new unknown
  // enters through the flat ∂̄, so the flat homotopy supplies the next
  // coefficient; the substitution at the end validates the whole series.
  std::vector<TSeries> u(n, TSeries(n, M));
  for (std::size_t m = 0; m <= M; ++m) {
    const SeriesMatrix e = dbar_a_vector(ft, u);
    for (std::size_t j = 0; j < n; ++j) {
      MixedForm g(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        const Poly c = (out.correction.at(j, i) - e.at(j, i)).coeff(m);
        if (!c.is_zero()) g.add(IdxList{}, IdxList{i}, TSeries::from_poly(c, 0));
      }
      const MixedForm prim = dolbeault_homotopy(g);
      const Poly uc = prim.component(IdxList{}, IdxList{}).coeff(0);
      if (!uc.is_zero()) u[j].set_coeff(m, u[j].coeff(m) + uc);
    }
  }
  const SeriesMatrix e = dbar_a_vector(ft, u);
  out.correction_exact = true;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const TSeries diff = e.at(j, i) - out.correction.at(j, i);
      fold_series(out.exactness, diff);
      if (!diff.is_zero()) out.correction_exact = false;
    }
  out.primitive = std::move(u);
  return out;
}

LocalizedForm::LocalizedForm(MixedForm num, Poly base, unsigned power)
    : num_(std::move(num)), base_(std::move(base)), power_(power) {
  if (base_.is_zero()) throw Error("localized form: zero denominator base");
}

void LocalizedForm::reduce() {
  while (power_ > 0) {
    auto reduced = divide_form(num_, base_);
    if (!reduced) return;
    num_ = std::move(*reduced);
    --power_;
  }
}

bool LocalizedForm::equals_polynomial(const MixedForm& f) const {
  if (f.dim() != num_.dim() || f.order() != num_.order()) return false;
  Poly bp = Poly::constant(base_.dim(), GaussianRational(1));
  for (unsigned k = 0; k < power_; ++k) bp = bp * base_;
  return (num_ - f.times(TSeries::from_poly(bp, f.order()))).is_zero();
}

LocalizedForm LocalizedForm::t_coefficient(std::size_t k) const {
  MixedForm c(num_.dim(), 0);
  for (const auto& [key, s] : num_.components()) {
    const Poly& p = s.coeff(k);
    if (!p.is_zero()) c.add(key.first, key.second, TSeries::from_poly(p, 0));
  }
  return LocalizedForm(std::move(c), base_, power_);
}

RankLocus rank_locus_factor(const PoissonStructure& sig, const Frame& f) {
  if (f.n != 2) throw Error("rank locus factorization is specific to dimension 2");
  const Poly p = sig.entry(0, 1);
  if (p.is_zero()) throw Error("rank locus factorization needs a nonzero sigma");
  const TSeries& s12 = f.S.at(0, 1);

  RankLocus out(f.n, f.order);
  out.exact = true;
  for (std::size_t k = 0; k <= f.order; ++k) {
    auto q = s12.coeff(k).divide_exact(p);
    if (!q) {
      out.exact = false;
      out.first_failed_order = k;
      break;
    }
    out.u.set_coeff(k, *q);
  }
  out.unit = out.exact && out.u.coeff(0).is_constant() &&
             !out.u.coeff(0).constant_value().is_zero();
  return out;
}

PeriodFirstOrder period_first_order(const PoissonStructure& sig, const Frame& f, const Poly& h) {
  if (f.n != 2) throw Error("period check is specific to dimension 2");
  const std::size_t n = f.n;
  PeriodFirstOrder out(n);

  out.s_t1_zero = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (f.order >= 1 && !f.S.at(i, j).coeff(1).is_zero()) out.s_t1_zero = false;

  const RankLocus rl = rank_locus_factor(sig, f);
  if (!rl.exact || !rl.unit) return out;  // flags stay false: the locus moved

  const TSeries uinv = series_invert(rl.u);
  const MixedForm num = wedge(f.xi[0], f.xi[1]).times(uinv).scaled(GaussianRational(2));
  const Poly p = sig.entry(0, 1);
  const LocalizedForm phi(num, p, 1);

  // t^0: numerator 2 dz_1 ∧ dz_2 (the undeformed localized inverse).
  MixedForm expected0(n, 0);
  expected0.add(IdxList{0, 1}, IdxList{},
                TSeries::from_poly(Poly::constant(n, GaussianRational(2)), 0));
  out.t0_matches =
      (phi.t_coefficient(0).numerator() == expected0);

  // t^1 equals −2 ∂∂̄h: cross-multiplied, num_t1 == −2 (∂∂̄h) p.
  const MixedForm h_form = MixedForm::from_series(TSeries::from_poly(h, 0));
  const MixedForm omega = del(delbar(h_form));
  const MixedForm target = omega.scaled(GaussianRational(-2));
  out.t1_matches = phi.t_coefficient(1).equals_polynomial(target);
  out.t1_diff = phi.t_coefficient(1).numerator() - target.times(TSeries::from_poly(p, 0));
  return out;
}

ModularInvariance modular_invariance(const PoissonStructure& sig, const Frame& f) {
  if (f.n != 2) throw Error("modular field check is specific to dimension 2");
  (void)sig;
  ModularInvariance out(f.n, f.order);
  out.field = modular_vf_series(f.S.at(0, 1));
  out.t1_zero = f.order >= 1 && out.field[0].coeff(1).is_zero() && out.field[1].coeff(1).is_zero();
  return out;
}

}  // namespace hpd
