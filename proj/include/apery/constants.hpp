#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "bigfloat.hpp"
#include "compositions.hpp"

namespace apery {

inline mpfr_prec_t working_precision(int digits, double extra_bits = 0) {
  return bits_for_digits(digits + 10) + static_cast<mpfr_prec_t>(std::ceil(extra_bits)) + 16;
}

inline BigFloat target_error(int digits) {
  BigFloat t(64);
  mpfr_set_si(t.get(), 10, MPFR_RNDD);
  mpfr_pow_si(t.get(), t.get(), -digits, MPFR_RNDD);
  return t;
}

// Bernoulli numbers with B_1 = -1/2, from Σ_{j=0}^{m} C(m+1, j) B_j = 0.
inline Rational bernoulli_number(int k) {
  if (k < 0) throw domain_error("bernoulli_number requires k >= 0");
  static std::vector<Rational> table{Rational(1)};
  static std::mutex mu;
  std::lock_guard lock(mu);
  while (static_cast<int>(table.size()) <= k) {
    const long m = static_cast<long>(table.size());
    if (m >= 3 && m % 2 == 1) {
      table.emplace_back(0);
      continue;
    }
    Rational s(0);
    for (long j = 0; j < m; ++j)
      if (sgn(table[static_cast<std::size_t>(j)]) != 0) s += Rational(binomial(m + 1, j)) * table[static_cast<std::size_t>(j)];
    table.push_back(canonical(-s / Rational(m + 1)));
  }
  return table[static_cast<std::size_t>(k)];
}

inline RatPoly bernoulli_polynomial(int k) {
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
  for (int j = 0; j <= k; ++j) c[static_cast<std::size_t>(k - j)] = Rational(binomial(k, j)) * bernoulli_number(j);
  return RatPoly(std::move(c));
}

inline Rational bernoulli_poly(int k, const Rational& x) { return canonical(bernoulli_polynomial(k).eval(x)); }

namespace detail {
// arctan(1/x) by its alternating series, truncation bounded by the first omitted term.
inline ApproxReal arctan_inv(unsigned long x, mpfr_prec_t prec, const BigFloat& tol) {
  BigFloat sum(prec), term(prec), pw(prec);
  mpfr_set_ui(pw.get(), 1, MPFR_RNDN);
  mpfr_div_ui(pw.get(), pw.get(), x, MPFR_RNDN);  // x^{-(2j+1)}
  const unsigned long x2 = x * x;
  long ops = 0;
  for (unsigned long j = 0;; ++j) {
    mpfr_div_ui(term.get(), pw.get(), 2 * j + 1, MPFR_RNDN);
    if (ebound::less(ebound::abs(term), tol)) {
      BigFloat e = ebound::add(ebound::abs(term), ebound::scale(BigFloat::pow2(-static_cast<long>(prec)), 4.0 * (ops + 4)));
      return ApproxReal(std::move(sum), std::move(e));
    }
    if (j % 2 == 0)
      mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    else
      mpfr_sub(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    mpfr_div_ui(pw.get(), pw.get(), x2, MPFR_RNDN);
    ops += 3;
  }
}
}  // namespace detail

// π = 16 arctan(1/5) − 4 arctan(1/239)
inline ApproxReal pi(int digits) {
  check_digits(digits);
  static std::map<int, ApproxReal> cache;
  static std::mutex mu;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(digits);
    if (it != cache.end()) return it->second;
  }
  const mpfr_prec_t prec = working_precision(digits, 8);
  BigFloat tol = ebound::scale(target_error(digits), 1.0 / 64);
  ApproxReal r = ApproxReal::exact(Rational(16), prec) * detail::arctan_inv(5, prec, tol) -
                 ApproxReal::exact(Rational(4), prec) * detail::arctan_inv(239, prec, tol);
  std::lock_guard lock(mu);
  cache.emplace(digits, r);
  return r;
}

namespace detail {
inline double log2_rising(double s, int n) { return (std::lgamma(s + n) - std::lgamma(s)) / std::log(2.0); }
}  // namespace detail

// Hurwitz ζ(s, a) for integer s >= 2 and rational a > 0, Euler–Maclaurin with the remainder
// bound 4|(s)_{2M}| (2π)^{-2M} (N+a)^{-(s+2M-1)} / (s+2M-1).
inline ApproxReal hurwitz_zeta(int s, const Rational& a, int digits) {
  check_digits(digits);
  if (s < 2) throw domain_error("hurwitz_zeta requires s >= 2");
  if (sgn(a) <= 0) throw domain_error("hurwitz_zeta requires a > 0");
  const double target_l2 = -(digits + 1) * 3.3219280948873623;
  const double ad = a.get_d();
  int N = 8, M = 4;
  auto rem_l2 = [&](int n, int m) {
    return 2.0 + detail::log2_rising(s, 2 * m) - 2.0 * m * std::log2(2 * M_PI) - (s + 2.0 * m - 1) * std::log2(n + ad) -
           std::log2(s + 2.0 * m - 1);
  };
  while (rem_l2(N, M) > target_l2) {
    N += 4;
    M += 4;
  }
  const mpfr_prec_t prec = working_precision(digits, std::log2(N + M + 8.0) + 8);
  BigFloat x(prec), sum(prec), term(prec), aa = BigFloat::from_rational(a, prec);
  for (int k = 0; k < N; ++k) {
    mpfr_add_ui(x.get(), aa.get(), static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_pow_si(term.get(), x.get(), -s, MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  }
  BigFloat xn(prec);
  mpfr_add_ui(xn.get(), aa.get(), static_cast<unsigned long>(N), MPFR_RNDN);
  mpfr_pow_si(term.get(), xn.get(), 1 - s, MPFR_RNDN);
  mpfr_div_si(term.get(), term.get(), s - 1, MPFR_RNDN);
  mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  mpfr_pow_si(term.get(), xn.get(), -s, MPFR_RNDN);
  mpfr_div_ui(term.get(), term.get(), 2, MPFR_RNDN);
  mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  Integer rising(s);  // (s)_{2k-1}
  for (int k = 1; k <= M; ++k) {
    if (k > 1) rising *= Integer(s + 2 * k - 3) * Integer(s + 2 * k - 2);
    Rational c = bernoulli_number(2 * k) * Rational(rising) / Rational(factorial(2 * k));
    BigFloat cf = BigFloat::from_rational(c, prec);
    mpfr_pow_si(term.get(), xn.get(), -(2 * k + s - 1), MPFR_RNDN);
    mpfr_mul(term.get(), term.get(), cf.get(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  }
  // terms are bounded by max(1, a^{-s}); each carries a handful of roundings
  const double mag = std::max(1.0, std::pow(ad, -s)) * 4.0;
  BigFloat err = ebound::add(ebound::from_log2(rem_l2(N, M)),
                             ebound::scale(BigFloat::pow2(-static_cast<long>(prec)), 6.0 * (N + M + 4) * mag));
  return ApproxReal(std::move(sum), std::move(err));
}

inline ApproxReal zeta_int(int s, int digits) {
  check_digits(digits);
  if (s < 2) throw domain_error("zeta_int requires s >= 2");
  if (s % 2 == 0) {
    // ζ(2n) = (−1)^{n+1} B_{2n} (2π)^{2n} / (2 (2n)!)
    Rational c = bernoulli_number(s) * Rational(pow_int(Integer(2), static_cast<unsigned long>(s))) /
                 Rational(Integer(2) * factorial(s));
    if ((s / 2) % 2 == 0) c = -c;
    const int d = std::min(digits + 4, precision_config().digits_cap);
    return canonical(c) * pow_int(pi(d), static_cast<unsigned long>(s));
  }
  return hurwitz_zeta(s, Rational(1), digits);
}

// L(s, χ_3) = 3^{-s} (ζ(s, 1/3) − ζ(s, 2/3))
inline ApproxReal L_chi3(int s, int digits) {
  check_digits(digits);
  const int d = std::min(digits + 2, precision_config().digits_cap);
  ApproxReal diff = hurwitz_zeta(s, Rational(1, 3), d) - hurwitz_zeta(s, Rational(2, 3), d);
  return pow_int(Rational(1, 3), s) * diff;
}

inline ApproxReal sqrt3(int digits) { return sqrt_exact_input(3, working_precision(digits, 8)); }

}  // namespace apery
