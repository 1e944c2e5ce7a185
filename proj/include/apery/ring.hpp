#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace apery {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& p, const Integer& q) { return canonical(Rational(p, q)); }

inline Integer pow_int(Integer b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline Rational pow_int(const Rational& b, long e) {
  Integer num, den;
  unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), ue);
  mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), ue);
  return e < 0 ? make_rational(den, num) : make_rational(num, den);
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

// Dense univariate polynomial c0 + c1 t + ..., trimmed of leading zeros.
template <class R>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c) : Polynomial(R(c)) {}  // NOLINT
  Polynomial(const R& c) {                  // NOLINT
    if (!is_zero(c)) c_.push_back(c);
  }
  explicit Polynomial(std::vector<R> c) : c_(std::move(c)) { trim(); }

  static Polynomial monomial(const R& c, std::size_t deg) {
    std::vector<R> v(deg + 1, R(0));
    v[deg] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial t() { return monomial(R(1), 1); }

  const std::vector<R>& coeffs() const noexcept { return c_; }
  bool zero() const noexcept { return c_.empty(); }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }

  template <class X>
  X eval(const X& x) const {
    X r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + X(c_[i]);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.zero() || b.zero()) return {};
    std::vector<R> r(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  // p(x + s)
  Polynomial shifted(const R& s) const {
    Polynomial r;
    Polynomial lin(std::vector<R>{s, R(1)});
    for (std::size_t i = c_.size(); i-- > 0;) r = r * lin + Polynomial(c_[i]);
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

template <class R>
bool is_zero(const Polynomial<R>& p) {
  return p.zero();
}

template <class R>
Polynomial<R> pow_int(const Polynomial<R>& p, unsigned long e) {
  Polynomial<R> r(R(1)), b = p;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

template <class R>
std::string to_string(const Polynomial<R>& p) {
  if (p.zero()) return "0";
  std::string s;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const R& c = p.coeffs()[i];
    if (is_zero(c)) continue;
    std::string cs = to_string(c);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (!s.empty())
      s += neg ? " - " : " + ";
    else if (neg)
      s += "-";
    if (i == 0 || cs != "1") s += cs;
    if (i >= 1) s += (i == 0 || cs != "1") ? "*t" : "t";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

using IntPoly = Polynomial<Integer>;
using RatPoly = Polynomial<Rational>;

}  // namespace apery
