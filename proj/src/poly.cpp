#include "hpd/poly.hpp"

#include <algorithm>
#include <cctype>

namespace hpd {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  std::uint64_t da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db;
  // Same degree: compare from the largest variable (last slot) down.
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return false;
}

Poly Poly::constant(std::size_t n, const GaussianRational& c) {
  Poly p(n);
  if (!c.is_zero()) p.terms_.emplace(Monomial(2 * n, 0), c);
  return p;
}

Poly Poly::variable(std::size_t n, std::size_t i, bool anti) {
  if (i >= n) throw Error("variable index out of range");
  Monomial m(2 * n, 0);
  m[anti ? n + i : i] = 1;
  return term(n, m, GaussianRational(1));
}

Poly Poly::term(std::size_t n, const Monomial& m, const GaussianRational& c) {
  if (m.size() != 2 * n) throw Error("monomial length mismatch");
  Poly p(n);
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

bool Poly::is_holomorphic() const {
  for (const auto& [m, c] : terms_)
    for (std::size_t k = n_; k < 2 * n_; ++k)
      if (m[k] != 0) return false;
  return true;
}

bool Poly::is_antiholomorphic() const {
  for (const auto& [m, c] : terms_)
    for (std::size_t k = 0; k < n_; ++k)
      if (m[k] != 0) return false;
  return true;
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) {
    std::uint32_t s = 0;
    for (auto e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

GaussianRational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational() : it->second;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Monomial(2 * n_, 0);
}

GaussianRational Poly::constant_value() const { return coeff(Monomial(2 * n_, 0)); }

void Poly::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly p(n_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (n_ != o.n_) throw Error("polynomial dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (n_ != o.n_) throw Error("polynomial dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.n_ != b.n_) throw Error("polynomial dimension mismatch");
  Poly p(a.n_);
  Monomial m(2 * a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
      p.add_term(m, ca * cb);
    }
  }
  return p;
}

Poly Poly::scaled(const GaussianRational& c) const {
  Poly p(n_);
  if (c.is_zero()) return p;
  for (const auto& [m, v] : terms_) p.terms_.emplace(m, v * c);
  return p;
}

Poly Poly::dz(std::size_t i) const {
  if (i >= n_) throw Error("dz index out of range");
  Poly p(n_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial d = m;
    d[i] -= 1;
    p.add_term(d, c * GaussianRational(static_cast<long>(m[i])));
  }
  return p;
}

Poly Poly::dw(std::size_t i) const {
  if (i >= n_) throw Error("dw index out of range");
  Poly p(n_);
  for (const auto& [m, c] : terms_) {
    if (m[n_ + i] == 0) continue;
    Monomial d = m;
    d[n_ + i] -= 1;
    p.add_term(d, c * GaussianRational(static_cast<long>(m[n_ + i])));
  }
  return p;
}

Poly Poly::conj() const {
  Poly p(n_);
  for (const auto& [m, c] : terms_) {
    Monomial s(m.size());
    for (std::size_t k = 0; k < n_; ++k) {
      s[k] = m[n_ + k];
      s[n_ + k] = m[k];
    }
    p.terms_.emplace(std::move(s), c.conj());
  }
  return p;
}

Poly Poly::times_variable(std::size_t i, bool anti) const {
  std::size_t slot = anti ? n_ + i : i;
  Poly p(n_);
  for (const auto& [m, c] : terms_) {
    Monomial s = m;
    s[slot] += 1;
    p.terms_.emplace(std::move(s), c);
  }
  return p;
}

std::uint32_t Poly::w_degree(const Monomial& m, std::size_t n) {
  std::uint32_t d = 0;
  for (std::size_t k = n; k < 2 * n; ++k) d += m[k];
  return d;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (n_ != d.n_) throw Error("polynomial dimension mismatch");
  if (d.is_zero()) throw Error("exact division by zero polynomial");
  Poly r = *this;
  Poly q(n_);
  const auto& [dm, dc] = *d.terms_.rbegin();  // leading term of the divisor
  while (!r.terms_.empty()) {
    const auto& [rm, rc] = *r.terms_.rbegin();
    Monomial qm(rm.size());
    bool divides = true;
    for (std::size_t k = 0; k < rm.size(); ++k) {
      if (rm[k] < dm[k]) {
        divides = false;
        break;
      }
      qm[k] = rm[k] - dm[k];
    }
    if (!divides) return std::nullopt;
    Poly t = Poly::term(n_, qm, rc / dc);
    q += t;
    r -= t * d;
  }
  return q;
}

// ---------------------------------------------------------------------------
// printing

namespace {

std::string monomial_str(const Monomial& m, std::size_t n) {
  std::string s;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += (k < n ? "z" : "w") + std::to_string(k < n ? k + 1 : k - n + 1);
    if (m[k] > 1) s += "^" + std::to_string(m[k]);
  }
  return s;
}

// Decide the sign used to join a term into the printed sum; c is made
// "positive" and the returned flag says whether to join with '-'.
bool split_sign(GaussianRational& c) {
  bool neg = false;
  if (!c.is_real() && c.re() == 0) {
    neg = c.im() < 0;
  } else {
    neg = c.re() < 0;
  }
  if (neg) c = -c;
  return neg;
}

}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Descending canonical order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    GaussianRational c = it->second;
    bool neg = split_sign(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono = monomial_str(it->first, n_);
    if (mono.empty()) {
      out += c.str();
    } else if (c == GaussianRational(1)) {
      out += mono;
    } else {
      out += c.str() + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

class Cursor {
 public:
  Cursor(std::size_t n, const std::string& s) : n_(n), s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  mpz_class read_nat() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected number");
    std::string digits;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      digits += s_[pos_++];
    return mpz_class(digits);
  }

  mpq_class read_rational() {
    mpz_class num = read_nat();
    if (accept('/')) {
      mpz_class den = read_nat();
      if (den == 0) fail("zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    return mpq_class(num);
  }

  // '(' re ± [coef*] i ')' with optional leading sign on the real part,
  // or the pure-imaginary alternative '(' [sign] [coef*] i ')'.
  GaussianRational read_paren_complex() {
    expect('(');
    bool re_neg = accept('-');
    if (!re_neg) accept('+');
    if (accept('i')) {
      expect(')');
      return {mpq_class(0), mpq_class(re_neg ? -1 : 1)};
    }
    mpq_class re = read_rational();
    if (accept('*')) {
      expect('i');
      expect(')');
      if (re_neg) re = -re;
      return {mpq_class(0), re};
    }
    if (re_neg) re = -re;
    mpq_class im(0);
    if (peek() == '+' || peek() == '-') {
      bool im_neg = accept('-');
      if (!im_neg) expect('+');
      if (accept('i')) {
        im = 1;
      } else {
        im = read_rational();
        expect('*');
        expect('i');
      }
      if (im_neg) im = -im;
    }
    expect(')');
    return {re, im};
  }

  // factor := rational | 'i' | paren-complex | var ['^' nat]
  // Multiplies the running term coefficient or exponent vector.
  void read_factor(GaussianRational& coeff, Monomial& mono) {
    char c = peek();
    if (c == '(') {
      coeff *= read_paren_complex();
      return;
    }
    if (c == 'i') {
      ++pos_;
      coeff *= GaussianRational::imaginary_unit();
      return;
    }
    if (c == 'z' || c == 'w') {
      ++pos_;
      mpz_class idx = read_nat();
      if (idx < 1 || idx > static_cast<long>(n_)) fail("variable index out of range");
      std::size_t slot = static_cast<std::size_t>(idx.get_si()) - 1 + (c == 'w' ? n_ : 0);
      std::uint32_t exp = 1;
      if (accept('^')) {
        mpz_class e = read_nat();
        if (e < 0 || e > 1000000) fail("exponent out of range");
        exp = static_cast<std::uint32_t>(e.get_ui());
      }
      mono[slot] += exp;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff *= GaussianRational::real(read_rational());
      return;
    }
    fail("expected coefficient or variable");
  }

  Poly parse() {
    Poly out(n_);
    bool first = true;
    while (true) {
      skip_ws();
      if (done()) {
        if (first) fail("empty polynomial");
        break;
      }
      bool neg = false;
      if (accept('-')) {
        neg = true;
      } else if (accept('+')) {
        // explicit plus
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      GaussianRational coeff(1);
      Monomial mono(2 * n_, 0);
      read_factor(coeff, mono);
      while (accept('*')) read_factor(coeff, mono);
      if (neg) coeff = -coeff;
      out += Poly::term(n_, mono, coeff);
      first = false;
    }
    return out;
  }

 private:
  std::size_t n_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::size_t n, const std::string& text) {
  Cursor c(n, text);
  return c.parse();
}

}  // namespace hpd
