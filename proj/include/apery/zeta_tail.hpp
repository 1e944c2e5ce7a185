#pragma once

#include <cmath>
#include <map>
#include <vector>

#include "compositions.hpp"
#include "constants.hpp"
#include "lincomb.hpp"
#include "sigma.hpp"

namespace apery {

// Symmetric double tails ζ(c)_{m,m} for m in [n, M], computed by descending m with
// ζ(a)_{m-1,m-1} = ζ(a)_{m,m} + Σ_{part ∈ {init, mid, fin}} m^{|part|-|a|} ζ(part)_{m,m}.
class ZetaTailTable {
 public:
  ZetaTailTable(long n, int digits, int max_weight) : n_(n), digits_(digits) {
    check_digits(digits);
    const double target_l2 = -(digits + 2) * 3.3219280948873623;
    M_ = std::max<long>(n + 8, 16);
    for (;;) {
      const double f = amplification(max_weight, M_);
      if (-2.0 * M_ + std::log2(f * 1.7) < target_l2) break;
      M_ += 4;
    }
    const double f = amplification(max_weight, M_);
    prec_ = working_precision(digits, std::log2(12.0 * M_ * f) + 4);
    trunc_l2_ = -2.0 * M_ + std::log2(1.6449340668482264 * 1.01);
    H_ = 1.0 + std::log(static_cast<double>(M_));
  }

  long cutoff() const noexcept { return M_; }

  ApproxReal value(const DualityClass& c, long m) {
    if (m < n_ || m > M_) throw domain_error("tail index outside the table");
    const auto& entry = ensure(c);
    BigFloat v = entry.values[static_cast<std::size_t>(m - n_)];
    BigFloat err = ebound::add(ebound::from_log2(trunc_l2_ + std::log2(entry.factor)),
                               ebound::from_log2(-static_cast<double>(prec_) + std::log2(12.0 * M_ * entry.factor + 1)));
    return ApproxReal(std::move(v), std::move(err));
  }

 private:
  struct Entry {
    std::vector<BigFloat> values;
    double factor = 0;  // error amplification; 0 for the exactly known empty class
  };

  static double amplification(int k, long M) {
    const double H = 1.0 + std::log(static_cast<double>(M));
    double f = 1.0;
    for (int w = 1; w <= k; ++w) f = 1.0 + 3.0 * H * f;
    return f;
  }

  const Entry& ensure(const DualityClass& c) {
    auto it = table_.find(c);
    if (it != table_.end()) return it->second;
    Entry e;
    const std::size_t len = static_cast<std::size_t>(M_ - n_ + 1);
    e.values.assign(len, BigFloat(prec_));
    if (c.weight() == 0) {
      for (long m = n_; m <= M_; ++m) e.values[static_cast<std::size_t>(m - n_)] = detail::inv_central_binomial(m, prec_);
      return table_.emplace(c, std::move(e)).first->second;
    }
    const Composition& a = c.representative();
    const int k = a.weight();
    const Composition parts[3] = {init_part(a), mid_part(a), fin_part(a)};
    std::vector<const Entry*> sub;
    std::vector<int> gaps;
    e.factor = 1.0;
    for (const auto& p : parts) {
      const Entry& pe = ensure(DualityClass(p));
      sub.push_back(&pe);
      gaps.push_back(p.weight() - k);
      e.factor += H_ * pe.factor;
    }
    BigFloat pw(prec_), t(prec_), mm(prec_);
    for (long m = M_; m > n_; --m) {
      BigFloat& cur = e.values[static_cast<std::size_t>(m - 1 - n_)];
      cur = e.values[static_cast<std::size_t>(m - n_)];
      mpfr_set_si(mm.get(), m, MPFR_RNDN);
      for (std::size_t j = 0; j < 3; ++j) {
        mpfr_pow_si(pw.get(), mm.get(), gaps[j], MPFR_RNDN);
        mpfr_mul(t.get(), pw.get(), sub[j]->values[static_cast<std::size_t>(m - n_)].get(), MPFR_RNDN);
        mpfr_add(cur.get(), cur.get(), t.get(), MPFR_RNDN);
      }
    }
    return table_.emplace(c, std::move(e)).first->second;
  }

  long n_;
  int digits_;
  long M_ = 0;
  mpfr_prec_t prec_ = 64;
  double trunc_l2_ = 0;
  double H_ = 1;
  std::map<DualityClass, Entry> table_;
};

inline ApproxReal zeta_sym_tail(const DualityClass& c, long n, int digits) {
  if (n < 0) throw domain_error("zeta_sym_tail requires n >= 0");
  ZetaTailTable table(n, digits, c.weight());
  return table.value(c, n);
}

template <class R>
ApproxReal zeta_sym_sum(const ClassLinComb<R>& l, long n, int digits) {
  int kmax = 0;
  for (const auto& kv : l) kmax = std::max(kmax, kv.first.weight());
  const int d = std::min(digits + 4, precision_config().digits_cap);
  ZetaTailTable table(n, d, kmax);
  ApproxReal total = ApproxReal::exact(Rational(0), working_precision(d));
  for (const auto& [c, x] : l) total = total + canonical(Rational(x)) * table.value(c, n);
  return total;
}

// Multiple zeta value ζ(a) = ζ(a)_{0,0}.
inline ApproxReal mzv(const Composition& a, int digits) { return zeta_sym_tail(DualityClass(a), 0, digits); }

namespace detail {
// log2 of ∫_N^∞ x^{-s}(1+ln x)^j dx
inline double log_moment_integral_log2(long N, double s, int j) {
  const double L = std::log(static_cast<double>(N));
  double sum = 0, fact = 1;
  for (int i = 0; i <= j; ++i) {
    if (i > 0) fact *= (j - i + 1);
    sum += fact * std::pow(1.0 + L, j - i) / std::pow(s - 1.0, i + 1);
  }
  return (-(s - 1.0) * L + std::log(sum)) / std::log(2.0);
}
}  // namespace detail

// Direct ascending evaluation of Σ_{n_1>...>n_r>n} C(n_1+m, m)^{-1} Π n_i^{-a_i}.
inline ApproxReal zeta_double_tail_oracle(const Composition& a, long m, long n, int low_digits, long max_terms = 4000000) {
  if (a.empty() || !a.admissible()) throw domain_error("oracle requires a non-empty admissible composition");
  if (low_digits > 15) throw capability_error("zeta_double_tail_oracle supports at most 15 digits");
  if (m < 0 || n < 0) throw domain_error("tail parameters must be non-negative");
  const int r = static_cast<int>(a.depth());
  const double target_l2 = -(low_digits + 2) * 3.3219280948873623;
  if (r == 1 && m == 0) {
    ApproxReal z = zeta_int(a[0], 30);
    Rational head(0);
    for (long x = 1; x <= n; ++x) head += pow_int(Rational(x), -a[0]);
    return z - ApproxReal::exact(head, z.precision());
  }
  const double s = a[0] + m;
  const double log2_mfact = detail::log2_factorial(static_cast<int>(m));
  auto tail_l2 = [&](long N) {
    return log2_mfact + detail::log_moment_integral_log2(N, s, r - 1) - detail::log2_factorial(r - 1);
  };
  // the integral bound needs the summand to be decreasing beyond N
  long N = std::max<long>({n + 2, 64, static_cast<long>(std::exp((r - 1) / s)) + 2});
  while (tail_l2(N) > target_l2) {
    N = N * 3 / 2;
    if (N > max_terms) throw capability_error("zeta_double_tail_oracle term budget exceeded");
  }
  const mpfr_prec_t prec = 128;
  std::vector<BigFloat> p(static_cast<std::size_t>(r) + 1, BigFloat(prec));
  mpfr_set_ui(p[static_cast<std::size_t>(r)].get(), 1, MPFR_RNDN);
  BigFloat total(prec), pw(prec), t(prec), xx(prec), w(prec);
  double maxmag = 2.0;
  for (long x = n + 1; x <= N; ++x) {
    mpfr_set_si(xx.get(), x, MPFR_RNDN);
    // C(x+m, m)^{-1} = Π_{i=1}^{m} i/(x+i)
    mpfr_set_ui(w.get(), 1, MPFR_RNDN);
    for (long i = 1; i <= m; ++i) {
      mpfr_mul_si(w.get(), w.get(), i, MPFR_RNDN);
      mpfr_div_si(w.get(), w.get(), x + i, MPFR_RNDN);
    }
    mpfr_pow_si(pw.get(), xx.get(), -a[0], MPFR_RNDN);
    mpfr_mul(t.get(), pw.get(), w.get(), MPFR_RNDN);
    mpfr_mul(t.get(), t.get(), p[1].get(), MPFR_RNDN);
    mpfr_add(total.get(), total.get(), t.get(), MPFR_RNDN);
    for (int j = 1; j < r; ++j) {
      mpfr_pow_si(pw.get(), xx.get(), -a[static_cast<std::size_t>(j)], MPFR_RNDN);
      mpfr_mul(t.get(), pw.get(), p[static_cast<std::size_t>(j) + 1].get(), MPFR_RNDN);
      mpfr_add(p[static_cast<std::size_t>(j)].get(), p[static_cast<std::size_t>(j)].get(), t.get(), MPFR_RNDN);
      maxmag = std::max(maxmag, std::fabs(p[static_cast<std::size_t>(j)].to_double()));
    }
  }
  BigFloat err = ebound::add(ebound::from_log2(tail_l2(N)),
                             ebound::scale(BigFloat::pow2(-static_cast<long>(prec) + 3),
                                           maxmag * (2.0 * m + 6.0) * (N + 1) * (r + 1)));
  return ApproxReal(std::move(total), std::move(err));
}

}  // namespace apery
