#pragma once

// Deterministic random generators for the property tests.  Values are
// drawn from the raw mt19937_64 stream via modular reduction so the
// corpus is identical on every platform and run.

#include <random>

#include "hpd/forms.hpp"
#include "hpd/poisson.hpp"

namespace hpdtest {

using namespace hpd;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t raw() { return rng_(); }

  // uniform in [0, m]
  std::size_t upto(std::size_t m) { return static_cast<std::size_t>(rng_() % (m + 1)); }

  // uniform in [lo, hi]
  long integer(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // nonzero small Gaussian rational; occasionally has an imaginary part
  GaussianRational coefficient() {
    mpq_class re(integer(-4, 4), integer(1, 3));
    re.canonicalize();
    mpq_class im(0);
    if (upto(3) == 0) {
      im = mpq_class(integer(-3, 3), integer(1, 2));
      im.canonicalize();
    }
    GaussianRational c(re, im);
    if (c.is_zero()) return GaussianRational(1);
    return c;
  }

  Monomial monomial(std::size_t n, std::uint32_t max_deg, bool holomorphic_only = false) {
    Monomial m(2 * n, 0);
    std::uint32_t budget = static_cast<std::uint32_t>(upto(max_deg));
    for (std::uint32_t d = 0; d < budget; ++d) {
      std::size_t slot = holomorphic_only ? upto(n - 1) : upto(2 * n - 1);
      ++m[slot];
    }
    return m;
  }

  Poly poly(std::size_t n, std::uint32_t max_deg, std::size_t max_terms,
            bool holomorphic_only = false) {
    Poly p(n);
    std::size_t terms = 1 + upto(max_terms - 1);
    for (std::size_t k = 0; k < terms; ++k) {
      p += Poly::term(n, monomial(n, max_deg, holomorphic_only), coefficient());
    }
    return p;
  }

  Poly nonzero_poly(std::size_t n, std::uint32_t max_deg, std::size_t max_terms,
                    bool holomorphic_only = false) {
    for (;;) {
      Poly p = poly(n, max_deg, max_terms, holomorphic_only);
      if (!p.is_zero()) return p;
    }
  }

  TSeries series(std::size_t n, std::size_t order, std::uint32_t max_deg,
                 std::size_t max_terms) {
    TSeries s(n, order);
    for (std::size_t k = 0; k <= order; ++k) {
      if (upto(2) == 0) continue;  // keep some coefficients zero
      s.set_coeff(k, poly(n, max_deg, max_terms));
    }
    return s;
  }

  IdxList index_list(std::size_t n, std::size_t size) {
    IdxList all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    // partial Fisher-Yates, then sort the chosen prefix
    for (std::size_t i = 0; i < size; ++i) {
      std::size_t j = i + upto(n - 1 - i);
      std::swap(all[i], all[j]);
    }
    IdxList out(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(out.begin(), out.end());
    return out;
  }

  MixedForm form(std::size_t n, std::size_t p, std::size_t q, std::size_t order,
                 std::uint32_t max_deg, std::size_t components) {
    MixedForm f(n, order);
    for (std::size_t c = 0; c < components; ++c) {
      f.add(index_list(n, p), index_list(n, q),
            TSeries::from_poly(poly(n, max_deg, 3), order));
    }
    return f;
  }

  TangentForm tangent(std::size_t n, std::size_t q, std::size_t order, std::uint32_t max_deg,
                      std::size_t components) {
    TangentForm f(n, order);
    for (std::size_t c = 0; c < components; ++c) {
      f.add(upto(n - 1), index_list(n, q), TSeries::from_poly(poly(n, max_deg, 3), order));
    }
    return f;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hpdtest
