#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hpd/rational.hpp"

namespace hpd {

// Exponent vector of length 2n over the variables z_1..z_n, w_1..w_n,
// where w_k is the antiholomorphic partner of z_k.  Slot k holds the
// exponent of z_{k+1}; slot n+k holds the exponent of w_{k+1}.
using Monomial = std::vector<std::uint32_t>;

// Graded lexicographic order with z_1 < ... < z_n < w_1 < ... < w_n:
// compare total degree first, then exponents from the largest variable
// (w_n) downward.  This is the canonical term order for storage and
// printing; it is multiplicative, so exact division by leading terms
// is sound.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over the Gaussian rationals in
// z_1..z_n, w_1..w_n.  Zero coefficients are never stored; terms are
// kept in canonical grlex order.  Value type: all operations return
// new polynomials.
class Poly {
 public:
  using TermMap = std::map<Monomial, GaussianRational, GrlexLess>;

  explicit Poly(std::size_t n) : n_(n) {}

  static Poly constant(std::size_t n, const GaussianRational& c);
  // 0-based variable index; anti selects w_{i+1} instead of z_{i+1}.
  static Poly variable(std::size_t n, std::size_t i, bool anti = false);
  static Poly term(std::size_t n, const Monomial& m, const GaussianRational& c);

  std::size_t dim() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  // true when no w variable occurs (the polynomial is holomorphic).
  bool is_holomorphic() const;
  // true when no z variable occurs.
  bool is_antiholomorphic() const;
  std::uint32_t total_degree() const;  // 0 for the zero polynomial
  // coefficient of a monomial (zero when absent)
  GaussianRational coeff(const Monomial& m) const;
  bool is_constant() const;
  GaussianRational constant_value() const;  // coefficient of the empty monomial

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const GaussianRational& c) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Partial derivatives: dz differentiates in z_{i+1}, dw in w_{i+1}
  // (0-based i).
  Poly dz(std::size_t i) const;
  Poly dw(std::size_t i) const;

  // Complex conjugation: swaps the z and w exponent blocks and
  // conjugates every coefficient.  An involution; multiplicative.
  Poly conj() const;

  // Multiply by the single variable monomial (used by the homotopy).
  Poly times_variable(std::size_t i, bool anti) const;

  // Exact division: returns q with *this == q * d, or nullopt when no
  // such polynomial exists.  d must be nonzero.
  std::optional<Poly> divide_exact(const Poly& d) const;

  // w-degree of a monomial (total degree in the w block).
  static std::uint32_t w_degree(const Monomial& m, std::size_t n);

  // Canonical printing: terms in descending grlex order, "3/2*z1^3*w2",
  // coefficient ±1 elided to a sign, bare constants printed as numbers.
  // The output parses back to an equal polynomial.
  std::string str() const;

 private:
  void add_term(const Monomial& m, const GaussianRational& c);

  std::size_t n_;
  TermMap terms_;
};

// Parse a polynomial from the documented grammar:
//   expr     := [sign] term (sign term)*
//   term     := factor ('*' factor)*
//   factor   := rational | 'i' | '(' complex ')' | var ['^' nat]
//   complex  := [sign] rational [sign (rational '*')? 'i'] | [sign] (rational '*')? 'i'
//   rational := nat ['/' nat]
//   var      := ('z'|'w') index        (1-based index, <= n)
// Whitespace is insignificant.  Errors carry a character position.
Poly parse_poly(std::size_t n, const std::string& text);

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t pos() const { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace hpd
