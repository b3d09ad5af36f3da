#include "hpd/poisson.hpp"

namespace hpd {

void SigmaMatrix::set(std::size_t i, std::size_t j, const Poly& p) {
  if (i >= j || j >= n_) throw Error("sigma entry requires i < j < n");
  if (p.dim() != n_) throw Error("sigma entry dimension mismatch");
  if (p.is_zero())
    upper_.erase({i, j});
  else
    upper_.insert_or_assign({i, j}, p);
}

Poly SigmaMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw Error("sigma index out of range");
  if (i == j) return Poly(n_);
  bool flip = i > j;
  auto it = upper_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == upper_.end()) return Poly(n_);
  return flip ? -it->second : it->second;
}

bool SigmaMatrix::is_zero() const { return upper_.empty(); }

bool SigmaMatrix::is_holomorphic() const {
  for (const auto& [key, p] : upper_)
    if (!p.is_holomorphic()) return false;
  return true;
}

Poly poisson_bracket(const SigmaMatrix& s, const Poly& f, const Poly& g) {
  const std::size_t n = s.dim();
  if (f.dim() != n || g.dim() != n) throw Error("bracket dimension mismatch");
  Poly out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Poly sij = s.at(i, j);
      if (sij.is_zero()) continue;
      out += sij * (f.dz(i) * g.dz(j) - f.dz(j) * g.dz(i));
    }
  }
  return out;
}

TSeries poisson_bracket(const SigmaMatrix& s, const TSeries& f, const TSeries& g) {
  const std::size_t n = s.dim();
  TSeries out(n, f.order());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Poly sij = s.at(i, j);
      if (sij.is_zero()) continue;
      TSeries fi = coord_derivative(f, i), fj = coord_derivative(f, j);
      TSeries gi = coord_derivative(g, i), gj = coord_derivative(g, j);
      out += (fi * gj - fj * gi).times_poly(sij);
    }
  }
  return out;
}

Poly jacobiator(const SigmaMatrix& s, const Poly& f, const Poly& g, const Poly& h) {
  return poisson_bracket(s, f, poisson_bracket(s, g, h)) +
         poisson_bracket(s, h, poisson_bracket(s, f, g)) +
         poisson_bracket(s, g, poisson_bracket(s, h, f));
}

PoissonStructure::PoissonStructure(std::size_t n, SigmaMatrix sigma) : matrix_(std::move(sigma)) {
  if (matrix_.dim() != n) throw Error("sigma matrix dimension mismatch");
  if (!matrix_.is_holomorphic())
    throw Error("sigma entries must be holomorphic (w variables are not allowed)");
  if (n >= 3) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        for (std::size_t c = b + 1; c < n; ++c) {
          Poly j = jacobiator(matrix_, Poly::variable(n, a), Poly::variable(n, b),
                              Poly::variable(n, c));
          if (!j.is_zero())
            throw Error("sigma is not integrable: Jacobiator nonzero on (z" +
                        std::to_string(a + 1) + ", z" + std::to_string(b + 1) + ", z" +
                        std::to_string(c + 1) + ") = " + j.str());
        }
      }
    }
  }
}

Poly bracket(const PoissonStructure& sig, const Poly& f, const Poly& g) {
  return poisson_bracket(sig.matrix(), f, g);
}

TSeries bracket(const PoissonStructure& sig, const TSeries& f, const TSeries& g) {
  return poisson_bracket(sig.matrix(), f, g);
}

std::vector<Poly> hamiltonian_components(const SigmaMatrix& s, const Poly& f) {
  const std::size_t n = s.dim();
  std::vector<Poly> comps(n, Poly(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      Poly sij = s.at(i, j);
      if (!sij.is_zero()) comps[j] += sij * f.dz(i);
    }
  return comps;
}

std::vector<TSeries> hamiltonian_components(const SigmaMatrix& s, const TSeries& f) {
  const std::size_t n = s.dim();
  std::vector<TSeries> comps(n, TSeries(n, f.order()));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      Poly sij = s.at(i, j);
      if (!sij.is_zero()) comps[j] += coord_derivative(f, i).times_poly(sij);
    }
  return comps;
}

TangentForm hamiltonian(const PoissonStructure& sig, const Poly& f) {
  const std::size_t n = sig.dim();
  TangentForm out(n, 0);
  auto comps = hamiltonian_components(sig.matrix(), f);
  for (std::size_t j = 0; j < n; ++j)
    out.add(j, IdxList{}, TSeries::from_poly(comps[j], 0));
  return out;
}

TSeries sigma_pair(const PoissonStructure& sig, const MixedForm& a, const MixedForm& b) {
  const std::size_t n = sig.dim();
  if (a.dim() != n || b.dim() != n) throw Error("sigma_pair dimension mismatch");
  if (a.order() != b.order()) throw Error("sigma_pair order mismatch");
  TSeries out(n, a.order());
  for (std::size_t i = 0; i < n; ++i) {
    TSeries ai = a.component(IdxList{i}, IdxList{});
    if (ai.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      Poly sij = sig.entry(i, j);
      if (sij.is_zero()) continue;
      TSeries bj = b.component(IdxList{j}, IdxList{});
      if (bj.is_zero()) continue;
      out += (ai * bj).times_poly(sij);
    }
  }
  return out;
}

TangentForm contract_sigma_form(const PoissonStructure& sig, const MixedForm& omega) {
  const std::size_t n = sig.dim();
  if (omega.dim() != n) throw Error("contract_sigma_form dimension mismatch");
  if (!omega.is_bidegree(1, 1)) throw Error("contract_sigma_form requires a (1,1)-form");
  TangentForm out(n, omega.order());
  for (const auto& [key, c] : omega.components()) {
    const std::size_t i = key.first[0];
    const std::size_t k = key.second[0];
    for (std::size_t j = 0; j < n; ++j) {
      Poly sij = sig.entry(i, j);
      if (sij.is_zero()) continue;
      out.add(j, IdxList{k}, c.times_poly(sij));
    }
  }
  return out;
}

MixedForm pb_form(const PoissonStructure& sig, const MixedForm& a, const MixedForm& b) {
  const std::size_t n = sig.dim();
  if (a.dim() != n || b.dim() != n) throw Error("pb_form dimension mismatch");
  if (a.order() != b.order()) throw Error("pb_form order mismatch");
  if (!a.is_bidegree(0, 1) || !b.is_bidegree(0, 1))
    throw Error("pb_form requires two (0,1)-forms");
  MixedForm out(n, a.order());
  for (const auto& [ka, ca] : a.components()) {
    const std::size_t i = ka.second[0];
    for (const auto& [kb, cb] : b.components()) {
      const std::size_t j = kb.second[0];
      if (i == j) continue;
      TSeries br = poisson_bracket(sig.matrix(), ca, cb);
      if (br.is_zero()) continue;
      // {a_ī, b_j̄} dz̄_j ∧ dz̄_i
      if (j < i)
        out.add(IdxList{}, IdxList{j, i}, br);
      else
        out.add(IdxList{}, IdxList{i, j}, -br);
    }
  }
  return out;
}

TangentForm modular_vf(const PoissonStructure& sig) {
  if (sig.dim() != 2) throw Error("modular vector field implemented for dimension 2");
  Poly p = sig.entry(0, 1);
  TangentForm out(2, 0);
  out.add(0, IdxList{}, TSeries::from_poly(p.dz(1), 0));
  out.add(1, IdxList{}, TSeries::from_poly(-p.dz(0), 0));
  return out;
}

std::array<TSeries, 2> modular_vf_series(const TSeries& p) {
  if (p.dim() != 2) throw Error("modular vector field implemented for dimension 2");
  return {coord_derivative(p, 1), -coord_derivative(p, 0)};
}

// ---------------------------------------------------------------------------
// coordinate tensors

TSeries coord_derivative(const TSeries& f, std::size_t A) {
  const std::size_t n = f.dim();
  if (A >= 2 * n) throw Error("coordinate direction out of range");
  TSeries out(n, f.order());
  for (std::size_t k = 0; k <= f.order(); ++k)
    out.set_coeff(k, A < n ? f.coeff(k).dz(A) : f.coeff(k).dw(A - n));
  return out;
}

void CoordVector::set(std::size_t A, const TSeries& v) {
  if (A >= comps_.size()) throw Error("coordinate direction out of range");
  if (v.dim() != n_ || v.order() != order()) throw Error("vector component mismatch");
  comps_[A] = v;
}

TSeries CoordVector::apply(const TSeries& f) const {
  TSeries out(n_, order());
  for (std::size_t A = 0; A < comps_.size(); ++A) {
    if (comps_[A].is_zero()) continue;
    out += comps_[A] * coord_derivative(f, A);
  }
  return out;
}

CoordVector CoordVector::truncate(std::size_t new_order) const {
  CoordVector v(n_, new_order);
  for (std::size_t A = 0; A < comps_.size(); ++A) v.set(A, comps_[A].truncate(new_order));
  return v;
}

CoordBivector CoordBivector::from_sigma(const PoissonStructure& sig, std::size_t order) {
  const std::size_t n = sig.dim();
  CoordBivector b(n, order);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Poly p = sig.entry(i, j);
      if (!p.is_zero()) b.add(i, j, TSeries::from_poly(p, order));
    }
  return b;
}

void CoordBivector::add(std::size_t A, std::size_t B, const TSeries& c) {
  if (A >= 2 * n_ || B >= 2 * n_) throw Error("bivector index out of range");
  if (c.dim() != n_ || c.order() != order_) throw Error("bivector component mismatch");
  if (A == B || c.is_zero()) return;
  auto key = (A < B) ? std::make_pair(A, B) : std::make_pair(B, A);
  TSeries v = (A < B) ? c : -c;
  auto [it, inserted] = comps_.emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

TSeries CoordBivector::at(std::size_t A, std::size_t B) const {
  if (A >= 2 * n_ || B >= 2 * n_) throw Error("bivector index out of range");
  if (A == B) return TSeries(n_, order_);
  auto it = comps_.find(A < B ? std::make_pair(A, B) : std::make_pair(B, A));
  if (it == comps_.end()) return TSeries(n_, order_);
  return A < B ? it->second : -it->second;
}

CoordBivector CoordBivector::truncate(std::size_t new_order) const {
  CoordBivector b(n_, new_order);
  for (const auto& [key, c] : comps_) b.add(key.first, key.second, c.truncate(new_order));
  return b;
}

ResidualSummary CoordBivector::residual_summary() const {
  ResidualSummary s;
  bool found = false;
  std::size_t first = 0;
  for (const auto& [key, c] : comps_) {
    auto fo = c.first_nonzero_order();
    if (!fo) continue;
    if (!found || *fo < first) {
      first = *fo;
      found = true;
    }
  }
  if (!found) return s;
  s.zero = false;
  s.first_order = first;
  for (const auto& [key, c] : comps_) {
    const Poly& p = c.coeff(first);
    if (p.is_zero()) continue;
    s.terms += p.term_count();
    s.max_degree = std::max(s.max_degree, p.total_degree());
  }
  return s;
}

TSeries CoordBivector::induced_bracket(const TSeries& f, const TSeries& g) const {
  TSeries out(n_, order_);
  for (const auto& [key, c] : comps_) {
    const auto& [A, B] = key;
    out += c * (coord_derivative(f, A) * coord_derivative(g, B) -
                coord_derivative(f, B) * coord_derivative(g, A));
  }
  return out;
}

void CoordTrivector::add(std::size_t A, std::size_t B, std::size_t C, const TSeries& c) {
  if (!(A < B && B < C)) throw Error("trivector expects sorted distinct indices");
  if (C >= 2 * n_) throw Error("trivector index out of range");
  if (c.is_zero()) return;
  std::array<std::size_t, 3> key{A, B, C};
  auto [it, inserted] = comps_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

TSeries CoordTrivector::at(std::size_t A, std::size_t B, std::size_t C) const {
  auto it = comps_.find(std::array<std::size_t, 3>{A, B, C});
  return it == comps_.end() ? TSeries(n_, order_) : it->second;
}

ResidualSummary CoordTrivector::residual_summary() const {
  ResidualSummary s;
  bool found = false;
  std::size_t first = 0;
  for (const auto& [key, c] : comps_) {
    auto fo = c.first_nonzero_order();
    if (!fo) continue;
    if (!found || *fo < first) {
      first = *fo;
      found = true;
    }
  }
  if (!found) return s;
  s.zero = false;
  s.first_order = first;
  for (const auto& [key, c] : comps_) {
    const Poly& p = c.coeff(first);
    if (p.is_zero()) continue;
    s.terms += p.term_count();
    s.max_degree = std::max(s.max_degree, p.total_degree());
  }
  return s;
}

CoordBivector lie_derivative(const CoordBivector& b, const CoordVector& X) {
  const std::size_t n = b.dim();
  if (X.dim() != n || X.order() != b.order()) throw Error("lie_derivative mismatch");
  CoordBivector out(n, b.order());
  for (std::size_t A = 0; A < 2 * n; ++A) {
    for (std::size_t B = A + 1; B < 2 * n; ++B) {
      TSeries acc = X.apply(b.at(A, B));
      for (std::size_t C = 0; C < 2 * n; ++C) {
        acc -= b.at(C, B) * coord_derivative(X.at(A), C);
        acc -= b.at(A, C) * coord_derivative(X.at(B), C);
      }
      out.add(A, B, acc);
    }
  }
  return out;
}

CoordTrivector schouten_square(const CoordBivector& b) {
  const std::size_t n = b.dim();
  CoordTrivector out(n, b.order());
  for (std::size_t A = 0; A < 2 * n; ++A) {
    for (std::size_t B = A + 1; B < 2 * n; ++B) {
      for (std::size_t C = B + 1; C < 2 * n; ++C) {
        TSeries acc(n, b.order());
        for (std::size_t M = 0; M < 2 * n; ++M) {
          acc += b.at(A, M) * coord_derivative(b.at(B, C), M);
          acc += b.at(B, M) * coord_derivative(b.at(C, A), M);
          acc += b.at(C, M) * coord_derivative(b.at(A, B), M);
        }
        out.add(A, B, C, acc.scaled(GaussianRational(2)));
      }
    }
  }
  return out;
}

}  // namespace hpd
