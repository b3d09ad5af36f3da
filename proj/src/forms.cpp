#include "hpd/forms.hpp"

#include <algorithm>

namespace hpd {

int merge_sign(const IdxList& a, const IdxList& b) {
  // Count inversions between the concatenation a ++ b; parity gives
  // the sign of sorting it.  Lists are strictly increasing; a shared
  // index makes the wedge vanish (caller checks disjointness).
  std::size_t inv = 0;
  for (auto x : b)
    for (auto y : a)
      if (y > x) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

IdxList merge_lists(const IdxList& a, const IdxList& b) {
  IdxList out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

int insert_index(IdxList& list, std::size_t idx) {
  auto it = std::lower_bound(list.begin(), list.end(), idx);
  if (it != list.end() && *it == idx) return 0;
  std::size_t before = static_cast<std::size_t>(it - list.begin());
  list.insert(it, idx);
  return (before % 2 == 0) ? 1 : -1;
}

namespace {

bool disjoint(const IdxList& a, const IdxList& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) return false;
    if (*ia < *ib)
      ++ia;
    else
      ++ib;
  }
  return true;
}

bool strictly_increasing(const IdxList& l, std::size_t n) {
  for (std::size_t k = 0; k < l.size(); ++k) {
    if (l[k] >= n) return false;
    if (k > 0 && l[k] <= l[k - 1]) return false;
  }
  return true;
}

template <typename Map>
ResidualSummary summarize(const Map& comps) {
  ResidualSummary s;
  bool found = false;
  std::size_t first = 0;
  for (const auto& [key, c] : comps) {
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
  for (const auto& [key, c] : comps) {
    const Poly& p = c.coeff(first);
    if (p.is_zero()) continue;
    s.terms += p.term_count();
    s.max_degree = std::max(s.max_degree, p.total_degree());
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// MixedForm

void MixedForm::add(const IdxList& I, const IdxList& J, const TSeries& c) {
  if (!strictly_increasing(I, n_) || !strictly_increasing(J, n_))
    throw Error("form component indices must be strictly increasing and in range");
  if (c.dim() != n_ || c.order() != order_)
    throw Error("form coefficient dimension/order mismatch");
  if (c.is_zero()) return;
  auto key = Key(I, J);
  auto [it, inserted] = comps_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

TSeries MixedForm::component(const IdxList& I, const IdxList& J) const {
  auto it = comps_.find(Key(I, J));
  return it == comps_.end() ? TSeries(n_, order_) : it->second;
}

bool MixedForm::is_bidegree(std::size_t p, std::size_t q) const {
  for (const auto& [key, c] : comps_)
    if (key.first.size() != p || key.second.size() != q) return false;
  return true;
}

MixedForm MixedForm::operator-() const {
  MixedForm f(n_, order_);
  for (const auto& [key, c] : comps_) f.comps_.emplace(key, -c);
  return f;
}

MixedForm& MixedForm::operator+=(const MixedForm& o) {
  if (n_ != o.n_ || order_ != o.order_) throw Error("form dimension/order mismatch");
  for (const auto& [key, c] : o.comps_) add(key.first, key.second, c);
  return *this;
}

MixedForm& MixedForm::operator-=(const MixedForm& o) {
  if (n_ != o.n_ || order_ != o.order_) throw Error("form dimension/order mismatch");
  for (const auto& [key, c] : o.comps_) add(key.first, key.second, -c);
  return *this;
}

MixedForm MixedForm::scaled(const GaussianRational& c) const {
  MixedForm f(n_, order_);
  if (c.is_zero()) return f;
  for (const auto& [key, v] : comps_) f.comps_.emplace(key, v.scaled(c));
  return f;
}

MixedForm MixedForm::times(const TSeries& s) const {
  MixedForm f(n_, order_);
  for (const auto& [key, v] : comps_) f.add(key.first, key.second, v * s);
  return f;
}

MixedForm MixedForm::conj() const {
  MixedForm f(n_, order_);
  for (const auto& [key, v] : comps_) {
    const auto& [I, J] = key;
    GaussianRational sign((I.size() * J.size()) % 2 == 0 ? 1 : -1);
    f.add(J, I, v.conj().scaled(sign));
  }
  return f;
}

MixedForm MixedForm::truncate(std::size_t new_order) const {
  MixedForm f(n_, new_order);
  for (const auto& [key, v] : comps_) f.add(key.first, key.second, v.truncate(new_order));
  return f;
}

MixedForm MixedForm::derivative_t() const {
  MixedForm f(n_, order_ - 1);
  for (const auto& [key, v] : comps_) f.add(key.first, key.second, v.derivative_t());
  return f;
}

MixedForm MixedForm::injected(std::size_t new_order, std::size_t shift) const {
  MixedForm f(n_, new_order);
  for (const auto& [key, v] : comps_) {
    TSeries s(n_, new_order);
    for (std::size_t k = 0; k <= order_ && k + shift <= new_order; ++k)
      s.set_coeff(k + shift, v.coeff(k));
    f.add(key.first, key.second, s);
  }
  return f;
}

ResidualSummary MixedForm::residual_summary() const { return summarize(comps_); }

MixedForm wedge(const MixedForm& a, const MixedForm& b) {
  if (a.dim() != b.dim() || a.order() != b.order())
    throw Error("wedge: dimension/order mismatch");
  MixedForm f(a.dim(), a.order());
  for (const auto& [ka, ca] : a.components()) {
    for (const auto& [kb, cb] : b.components()) {
      const auto& [I1, J1] = ka;
      const auto& [I2, J2] = kb;
      if (!disjoint(I1, I2) || !disjoint(J1, J2)) continue;
      // dz_{I1} dz̄_{J1} dz_{I2} dz̄_{J2}: move dz_{I2} past dz̄_{J1},
      // then sort the two blocks.
      long sgn = ((J1.size() * I2.size()) % 2 == 0) ? 1 : -1;
      sgn *= merge_sign(I1, I2);
      sgn *= merge_sign(J1, J2);
      f.add(merge_lists(I1, I2), merge_lists(J1, J2), (ca * cb).scaled(GaussianRational(sgn)));
    }
  }
  return f;
}

namespace {

// Shared by del/delbar: apply d in either the z or the w block.
MixedForm exterior_derivative(const MixedForm& f, bool anti) {
  MixedForm out(f.dim(), f.order());
  for (const auto& [key, c] : f.components()) {
    const auto& [I, J] = key;
    for (std::size_t v = 0; v < f.dim(); ++v) {
      TSeries dc(f.dim(), f.order());
      bool nonzero = false;
      for (std::size_t k = 0; k <= f.order(); ++k) {
        Poly d = anti ? c.coeff(k).dw(v) : c.coeff(k).dz(v);
        if (!d.is_zero()) {
          dc.set_coeff(k, d);
          nonzero = true;
        }
      }
      if (!nonzero) continue;
      if (!anti) {
        IdxList I2 = I;
        int s = insert_index(I2, v);
        if (s == 0) continue;
        out.add(I2, J, dc.scaled(GaussianRational(s)));
      } else {
        IdxList J2 = J;
        int s = insert_index(J2, v);
        if (s == 0) continue;
        // dz̄_v passes the |I| holomorphic factors first.
        if (I.size() % 2 == 1) s = -s;
        out.add(I, J2, dc.scaled(GaussianRational(s)));
      }
    }
  }
  return out;
}

}  // namespace

MixedForm del(const MixedForm& f) { return exterior_derivative(f, false); }
MixedForm delbar(const MixedForm& f) { return exterior_derivative(f, true); }
MixedForm total_d(const MixedForm& f) { return del(f) + delbar(f); }

MixedForm dolbeault_homotopy(const MixedForm& g) {
  MixedForm res = delbar(g);
  if (!res.is_zero()) {
    auto s = res.residual_summary();
    throw Error("homotopy: input is not delbar-closed (residual at t^" +
                std::to_string(s.first_order) + ", " + std::to_string(s.terms) + " terms)");
  }
  MixedForm out(g.dim(), g.order());
  const std::size_t n = g.dim();
  for (const auto& [key, c] : g.components()) {
    const auto& [I, J] = key;
    const std::size_t q = J.size();
    if (q == 0) throw Error("homotopy: component of antiholomorphic degree 0");
    GaussianRational front_sign(I.size() % 2 == 0 ? 1 : -1);
    for (std::size_t k = 0; k <= g.order(); ++k) {
      const Poly& p = c.coeff(k);
      for (const auto& [mono, coef] : p.terms()) {
        // Weight by w-degree of this monomial plus form degree.
        long weight = static_cast<long>(Poly::w_degree(mono, n) + q);
        GaussianRational w_inv = GaussianRational(1) / GaussianRational(weight);
        for (std::size_t r = 0; r < q; ++r) {
          GaussianRational sgn((r % 2 == 0) ? 1 : -1);
          IdxList J2;
          J2.reserve(q - 1);
          for (std::size_t s = 0; s < q; ++s)
            if (s != r) J2.push_back(J[s]);
          Poly term = Poly::term(n, mono, coef * sgn * w_inv * front_sign)
                          .times_variable(J[r], /*anti=*/true);
          out.add(I, J2, TSeries::from_poly(term, g.order(), k));
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// TangentForm

void TangentForm::add(std::size_t v, const IdxList& J, const TSeries& c) {
  if (v >= n_) throw Error("tangent component vector index out of range");
  if (!strictly_increasing(J, n_))
    throw Error("tangent component indices must be strictly increasing and in range");
  if (c.dim() != n_ || c.order() != order_)
    throw Error("tangent coefficient dimension/order mismatch");
  if (c.is_zero()) return;
  auto key = Key(v, J);
  auto [it, inserted] = comps_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

TSeries TangentForm::component(std::size_t v, const IdxList& J) const {
  auto it = comps_.find(Key(v, J));
  return it == comps_.end() ? TSeries(n_, order_) : it->second;
}

bool TangentForm::is_degree(std::size_t q) const {
  for (const auto& [key, c] : comps_)
    if (key.second.size() != q) return false;
  return true;
}

TangentForm TangentForm::operator-() const {
  TangentForm f(n_, order_);
  for (const auto& [key, c] : comps_) f.comps_.emplace(key, -c);
  return f;
}

TangentForm& TangentForm::operator+=(const TangentForm& o) {
  if (n_ != o.n_ || order_ != o.order_) throw Error("tangent form dimension/order mismatch");
  for (const auto& [key, c] : o.comps_) add(key.first, key.second, c);
  return *this;
}

TangentForm& TangentForm::operator-=(const TangentForm& o) {
  if (n_ != o.n_ || order_ != o.order_) throw Error("tangent form dimension/order mismatch");
  for (const auto& [key, c] : o.comps_) add(key.first, key.second, -c);
  return *this;
}

TangentForm TangentForm::scaled(const GaussianRational& c) const {
  TangentForm f(n_, order_);
  if (c.is_zero()) return f;
  for (const auto& [key, v] : comps_) f.comps_.emplace(key, v.scaled(c));
  return f;
}

TangentForm TangentForm::truncate(std::size_t new_order) const {
  TangentForm f(n_, new_order);
  for (const auto& [key, v] : comps_) f.add(key.first, key.second, v.truncate(new_order));
  return f;
}

TangentForm TangentForm::derivative_t() const {
  TangentForm f(n_, order_ - 1);
  for (const auto& [key, v] : comps_) f.add(key.first, key.second, v.derivative_t());
  return f;
}

TangentForm TangentForm::injected(std::size_t new_order, std::size_t shift) const {
  TangentForm f(n_, new_order);
  for (const auto& [key, v] : comps_) {
    TSeries s(n_, new_order);
    for (std::size_t k = 0; k <= order_ && k + shift <= new_order; ++k)
      s.set_coeff(k + shift, v.coeff(k));
    f.add(key.first, key.second, s);
  }
  return f;
}

ResidualSummary TangentForm::residual_summary() const { return summarize(comps_); }

TangentForm delbar(const TangentForm& f) {
  TangentForm out(f.dim(), f.order());
  for (const auto& [key, c] : f.components()) {
    const auto& [v, J] = key;
    for (std::size_t b = 0; b < f.dim(); ++b) {
      TSeries dc(f.dim(), f.order());
      bool nonzero = false;
      for (std::size_t k = 0; k <= f.order(); ++k) {
        Poly d = c.coeff(k).dw(b);
        if (!d.is_zero()) {
          dc.set_coeff(k, d);
          nonzero = true;
        }
      }
      if (!nonzero) continue;
      IdxList J2 = J;
      int s = insert_index(J2, b);
      if (s == 0) continue;
      out.add(v, J2, dc.scaled(GaussianRational(s)));
    }
  }
  return out;
}

TangentForm tv_bracket(const TangentForm& a, const TangentForm& b) {
  if (a.dim() != b.dim() || a.order() != b.order())
    throw Error("tv_bracket: dimension/order mismatch");
  if (!a.is_degree(1) || !b.is_degree(1))
    throw Error("tv_bracket requires two (0,1) tangent forms");
  TangentForm out(a.dim(), a.order());
  for (const auto& [ka, A] : a.components()) {
    const auto& [u, Ja] = ka;
    const std::size_t i = Ja[0];
    for (const auto& [kb, B] : b.components()) {
      const auto& [v, Jb] = kb;
      const std::size_t j = Jb[0];
      if (i == j) continue;
      IdxList J = (i < j) ? IdxList{i, j} : IdxList{j, i};
      GaussianRational wsign(i < j ? 1 : -1);
      // [A ∂_u, B ∂_v] = A (∂_u B) ∂_v − B (∂_v A) ∂_u
      TSeries dB(a.dim(), a.order());
      TSeries dA(a.dim(), a.order());
      for (std::size_t k = 0; k <= a.order(); ++k) {
        dB.set_coeff(k, B.coeff(k).dz(u));
        dA.set_coeff(k, A.coeff(k).dz(v));
      }
      out.add(v, J, (A * dB).scaled(wsign));
      out.add(u, J, (B * dA).scaled(-wsign));
    }
  }
  return out;
}

}  // namespace hpd
