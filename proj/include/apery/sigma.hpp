#pragma once

#include <cmath>
#include <vector>

#include "compositions.hpp"
#include "constants.hpp"
#include "lincomb.hpp"

namespace apery {

namespace detail {

inline double log2_factorial(int n) { return std::lgamma(n + 1.0) / std::log(2.0); }

// log2 of an upper bound for Σ_{m>N} C(2m,m)^{-1} m^{-a1} H_{m-1}^{r-1}/(r-1)!  (a1 >= 1, N >= 20)
inline double sigma_truncation_log2(int N, int r) {
  const double m = N + 1.0;
  return 2.0 + 0.5 * std::log2(m) - 2.0 * m - std::log2(m) + (r - 1) * std::log2(1.0 + std::log(m)) -
         log2_factorial(r - 1);
}

inline BigFloat inv_central_binomial(long m, mpfr_prec_t prec) {
  BigFloat r(prec);
  Integer b = binomial(2 * m, m);
  mpfr_set_z(r.get(), b.get_mpz_t(), MPFR_RNDN);
  mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
  return r;
}

}  // namespace detail

// σ(a)_n by the descending recurrence σ(a)_{m-1} = σ(a)_m + m^{-a_r} σ(a^init)_m, all prefixes at once.
inline ApproxReal sigma_tail(const Composition& a, long n, int digits) {
  check_digits(digits);
  if (n < 0) throw domain_error("sigma_tail requires n >= 0");
  const int r = static_cast<int>(a.depth());
  if (r == 0) {
    const mpfr_prec_t prec = working_precision(digits);
    BigFloat v = detail::inv_central_binomial(n, prec);
    BigFloat e = ebound::rounding(v, prec - 1);
    return ApproxReal(std::move(v), std::move(e));
  }
  const double target_l2 = -(digits + 1) * 3.3219280948873623;
  int N = static_cast<int>(std::max<long>(20, n + 2));
  while (detail::sigma_truncation_log2(N, r) > target_l2) N += 4;
  const double harmonic = 1.0 + std::log(static_cast<double>(N));
  const double amplification = std::log2(3.0 * N) + r * std::log2(1.0 + harmonic);
  const mpfr_prec_t prec = working_precision(digits, amplification + 4);

  std::vector<BigFloat> s(static_cast<std::size_t>(r), BigFloat(prec));
  BigFloat base(prec), pw(prec), t(prec), mm(prec);
  for (long m = N; m > n; --m) {
    base = detail::inv_central_binomial(m, prec);
    mpfr_set_si(mm.get(), m, MPFR_RNDN);
    // update deepest prefix first so each uses the previous level at index m
    for (int i = r - 1; i >= 0; --i) {
      const BigFloat& lower = (i == 0) ? base : s[static_cast<std::size_t>(i - 1)];
      mpfr_pow_si(pw.get(), mm.get(), -a[static_cast<std::size_t>(i)], MPFR_RNDN);
      mpfr_mul(t.get(), pw.get(), lower.get(), MPFR_RNDN);
      mpfr_add(s[static_cast<std::size_t>(i)].get(), s[static_cast<std::size_t>(i)].get(), t.get(), MPFR_RNDN);
    }
  }
  BigFloat err = ebound::add(ebound::from_log2(detail::sigma_truncation_log2(N, r)),
                             ebound::from_log2(-static_cast<double>(prec) + amplification + 2));
  return ApproxReal(std::move(s.back()), std::move(err));
}

inline ApproxReal sigma_sum(const CompLinComb<Integer>& l, long n, int digits) {
  const int d = std::min(digits + 4, precision_config().digits_cap);
  ApproxReal total = ApproxReal::exact(Rational(0), working_precision(d));
  for (const auto& [b, c] : l) total = total + Rational(c) * sigma_tail(b, n, d);
  return total;
}

template <class R>
ApproxReal sigma_sum(const CompLinComb<R>& l, long n, int digits) {
  const int d = std::min(digits + 4, precision_config().digits_cap);
  ApproxReal total = ApproxReal::exact(Rational(0), working_precision(d));
  for (const auto& [b, c] : l) total = total + Rational(c) * sigma_tail(b, n, d);
  return total;
}

// Direct ascending nested summation over integer tuples, independent of the recurrence.
inline ApproxReal sigma_oracle(const std::vector<long>& a, long n, int low_digits, long max_terms = 2000000) {
  if (low_digits > 20) throw capability_error("sigma_oracle supports at most 20 digits");
  if (a.empty()) {
    const mpfr_prec_t prec = 192;
    BigFloat v = detail::inv_central_binomial(n, prec);
    BigFloat e = ebound::rounding(v, prec - 1);
    return ApproxReal(std::move(v), std::move(e));
  }
  const int r = static_cast<int>(a.size());
  double growth = -static_cast<double>(a[0]) + (r - 1) + 0.5;
  for (int i = 1; i < r; ++i) growth += std::max<long>(0, -a[static_cast<std::size_t>(i)]);
  auto tail_l2 = [&](long N) {
    const double m = N + 1.0;
    return 2.0 + growth * std::log2(m) - 2.0 * m - detail::log2_factorial(r - 1);
  };
  long N = std::max<long>({20, n + 2, static_cast<long>(2 * std::max(0.0, growth) + 4)});
  const double target_l2 = -(low_digits + 2) * 3.3219280948873623;
  while (tail_l2(N) > target_l2) {
    N += 4;
    if (N > max_terms) throw capability_error("sigma_oracle term budget exceeded");
  }
  const mpfr_prec_t prec = 256;
  // p[j](x) = Σ over chains x > n_{j} > ... > n_{r-1} > n of Π n_i^{-a_i}, for j = 1..r-1; p[r] = 1
  std::vector<BigFloat> p(static_cast<std::size_t>(r) + 1, BigFloat(prec));
  mpfr_set_ui(p[static_cast<std::size_t>(r)].get(), 1, MPFR_RNDN);
  BigFloat total(prec), pw(prec), t(prec), xx(prec), w(prec);
  double maxmag = 1.0;
  for (long x = n + 1; x <= N; ++x) {
    mpfr_set_si(xx.get(), x, MPFR_RNDN);
    mpfr_pow_si(pw.get(), xx.get(), -a[0], MPFR_RNDN);
    w = detail::inv_central_binomial(x, prec);
    mpfr_mul(t.get(), pw.get(), w.get(), MPFR_RNDN);
    mpfr_mul(t.get(), t.get(), p[1].get(), MPFR_RNDN);
    mpfr_add(total.get(), total.get(), t.get(), MPFR_RNDN);
    // advance p[j](x) -> p[j](x+1): add the chains whose leading index is exactly x
    for (int j = 1; j < r; ++j) {
      mpfr_pow_si(pw.get(), xx.get(), -a[static_cast<std::size_t>(j)], MPFR_RNDN);
      mpfr_mul(t.get(), pw.get(), p[static_cast<std::size_t>(j) + 1].get(), MPFR_RNDN);
      mpfr_add(p[static_cast<std::size_t>(j)].get(), p[static_cast<std::size_t>(j)].get(), t.get(), MPFR_RNDN);
      maxmag = std::max(maxmag, std::fabs(p[static_cast<std::size_t>(j)].to_double()));
    }
    maxmag = std::max(maxmag, std::fabs(total.to_double()));
  }
  BigFloat err = ebound::add(ebound::from_log2(tail_l2(N)),
                             ebound::scale(BigFloat::pow2(-static_cast<long>(prec) + 3), maxmag * 6.0 * (N + 1) * (r + 1)));
  return ApproxReal(std::move(total), std::move(err));
}

inline ApproxReal sigma_oracle(const Composition& a, long n, int low_digits) {
  std::vector<long> e(a.entries().begin(), a.entries().end());
  return sigma_oracle(e, n, low_digits);
}

// ----- reduction of integer tuples -----

using PolyLinComb = CompLinComb<RatPoly>;

inline Rational lambda_cd(long c, long d) {
  Rational v = Rational(Integer(2) * factorial(c) * Integer(c + d + 2)) / Rational(factorial(d + 1) * factorial(c - d));
  if ((c - d) % 2) v = -v;
  return canonical(v);
}

namespace detail {

using Tuple = std::vector<long>;

inline void reduce_into(const Tuple& a, const RatPoly& coeff, PolyLinComb& out);

inline void add_reduced(const Tuple& a, const RatPoly& coeff, PolyLinComb& out) {
  if (!coeff.zero()) reduce_into(a, coeff, out);
}

inline void reduce_into(const Tuple& a, const RatPoly& coeff, PolyLinComb& out) {
  const std::size_t r = a.size();
  bool positive = true;
  for (long x : a) positive = positive && x >= 1;
  if (positive) {
    out.add_term(Composition(std::vector<int>(a.begin(), a.end())), coeff);
    return;
  }
  const RatPoly third(Rational(1, 3));
  if (r == 1) {
    // n^c σ(∅)_n = 3σ(−c)_n + Σ_{d<c} λ_{c,d} σ(−d)_n + 2(−1)^{c+1} σ(1)_n
    const long c = -a[0];
    out.add_term(Composition{}, coeff * third * RatPoly::monomial(Rational(1), static_cast<std::size_t>(c)));
    for (long d = 0; d < c; ++d) add_reduced(Tuple{-d}, coeff * third * RatPoly(-lambda_cd(c, d)), out);
    add_reduced(Tuple{1}, coeff * third * RatPoly(Rational((c % 2) ? -2 : 2)), out);
    return;
  }
  if (a[0] >= 1) {
    std::size_t i = 1;
    while (a[i] >= 1) ++i;
    const long c = -a[i];
    const RatPoly B = bernoulli_polynomial(static_cast<int>(c + 1));
    const Rational inv(1, c + 1);
    // Σ_{n_{i+1} < n_i < n_{i-1}} n_i^c = (B_{c+1}(n_{i-1}) − B_{c+1}(n_{i+1}+1)) / (c+1)
    for (long e = 0; e <= B.degree(); ++e) {
      const Rational be = B.coeff(static_cast<std::size_t>(e));
      if (sgn(be) == 0) continue;
      Tuple t;
      for (std::size_t j = 0; j < r; ++j) {
        if (j == i) continue;
        t.push_back(j == i - 1 ? a[j] - e : a[j]);
      }
      add_reduced(t, coeff * RatPoly(canonical(be * inv)), out);
    }
    if (i + 1 < r) {
      const RatPoly Bs = B.shifted(Rational(1));
      for (long e = 0; e <= Bs.degree(); ++e) {
        const Rational be = Bs.coeff(static_cast<std::size_t>(e));
        if (sgn(be) == 0) continue;
        Tuple t;
        for (std::size_t j = 0; j < r; ++j) {
          if (j == i) continue;
          t.push_back(j == i + 1 ? a[j] - e : a[j]);
        }
        add_reduced(t, coeff * RatPoly(canonical(-be * inv)), out);
      }
    } else {
      Tuple t(a.begin(), a.end() - 1);
      add_reduced(t, coeff * (-(B.shifted(Rational(1)) * RatPoly(inv))), out);
    }
    return;
  }
  // leading entry −c with r >= 2
  const long c = -a[0];
  Tuple rest(a.begin() + 1, a.end());
  Tuple merged = rest;
  merged[0] -= c;
  add_reduced(merged, coeff * third, out);
  for (long d = 0; d < c; ++d) {
    Tuple t = rest;
    t.insert(t.begin(), -d);
    add_reduced(t, coeff * third * RatPoly(-lambda_cd(c, d)), out);
  }
  Tuple one = rest;
  one.insert(one.begin(), 1);
  add_reduced(one, coeff * third * RatPoly(Rational((c % 2) ? -2 : 2)), out);
}

}  // namespace detail

inline PolyLinComb reduce_integer_entries(const std::vector<long>& a) {
  if (a.empty()) throw domain_error("reduce_integer_entries requires a non-empty tuple");
  PolyLinComb out;
  detail::reduce_into(a, RatPoly(Rational(1)), out);
  return out;
}

// Σ_b f_b(n) σ(b)_n
inline ApproxReal evaluate(const PolyLinComb& l, long n, int digits) {
  const int d = std::min(digits + 4, precision_config().digits_cap);
  ApproxReal total = ApproxReal::exact(Rational(0), working_precision(d));
  for (const auto& [b, f] : l) total = total + canonical(f.eval(Rational(n))) * sigma_tail(b, n, d);
  return total;
}

}  // namespace apery
