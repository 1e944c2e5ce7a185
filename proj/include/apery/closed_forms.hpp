#pragma once

#include <map>
#include <string>

#include "constants.hpp"

namespace apery {

// Rational coordinates over {π^{k-1-2r} ζ(2r+1), π^{k-2r} √3 L(2r, χ) : 1 <= r <= (k-1)/2}.
struct ConstantBasisVector {
  int weight = 0;
  std::map<int, Rational> zeta_odd;
  std::map<int, Rational> L_even;

  void add_zeta(int r, const Rational& q) { add(zeta_odd, r, q); }
  void add_L(int r, const Rational& q) { add(L_even, r, q); }

  Rational zeta_coeff(int r) const { return get(zeta_odd, r); }
  Rational L_coeff(int r) const { return get(L_even, r); }

  ConstantBasisVector& operator+=(const ConstantBasisVector& o) {
    for (const auto& [r, q] : o.zeta_odd) add_zeta(r, q);
    for (const auto& [r, q] : o.L_even) add_L(r, q);
    return *this;
  }
  friend ConstantBasisVector operator+(ConstantBasisVector a, const ConstantBasisVector& b) { return a += b; }
  friend ConstantBasisVector operator*(const Rational& s, const ConstantBasisVector& v) {
    ConstantBasisVector r;
    r.weight = v.weight;
    for (const auto& [i, q] : v.zeta_odd) r.add_zeta(i, s * q);
    for (const auto& [i, q] : v.L_even) r.add_L(i, s * q);
    return r;
  }
  friend ConstantBasisVector operator-(const ConstantBasisVector& a, const ConstantBasisVector& b) {
    return a + Rational(-1) * b;
  }
  friend bool operator==(const ConstantBasisVector& a, const ConstantBasisVector& b) {
    return a.zeta_odd == b.zeta_odd && a.L_even == b.L_even;
  }

 private:
  static void add(std::map<int, Rational>& m, int r, const Rational& q) {
    if (sgn(q) == 0) return;
    auto [it, inserted] = m.try_emplace(r, canonical(q));
    if (!inserted) {
      it->second = canonical(it->second + q);
      if (sgn(it->second) == 0) m.erase(it);
    }
  }
  static Rational get(const std::map<int, Rational>& m, int r) {
    auto it = m.find(r);
    return it == m.end() ? Rational(0) : it->second;
  }
};

namespace detail {
inline Rational third_power_over_factorial(int e) {
  // (1/3)^e / e!
  return canonical(Rational(1) / Rational(pow_int(Integer(3), static_cast<unsigned long>(e)) * factorial(e)));
}
inline Rational one_minus_pow(long base, int e) {
  // 1 − base^{-e}
  return canonical(Rational(1) - pow_int(Rational(base), -e));
}
inline int sign_pow(int r) { return (r % 2) ? -1 : 1; }
}  // namespace detail

// σ(2^a, 1, 2^b), a >= 1, b >= 0
inline ConstantBasisVector th7_coeffs(int a, int b) {
  if (a < 1 || b < 0) throw domain_error("th7_coeffs requires a >= 1 and b >= 0");
  ConstantBasisVector v;
  const int k = 2 * a + 2 * b + 1;
  v.weight = k;
  for (int r = a; r <= a + b; ++r) {
    v.add_zeta(r, Rational(binomial(2 * r, 2 * a - 1)) * detail::third_power_over_factorial(k - 1 - 2 * r) *
                      Rational(detail::sign_pow(r)) * detail::one_minus_pow(3, 2 * r));
    v.add_L(r, Rational(binomial(2 * r - 1, 2 * a - 1)) * detail::third_power_over_factorial(k - 2 * r) *
                   Rational(detail::sign_pow(r)));
  }
  for (int r = b + 1; r <= a + b; ++r)
    v.add_zeta(r, -Rational(binomial(2 * r, 2 * b + 1)) * detail::third_power_over_factorial(k - 1 - 2 * r) *
                      Rational(detail::sign_pow(r) * 2) * detail::one_minus_pow(2, 2 * r));
  return v;
}

// σ(2^a, 3, 2^b), a, b >= 0
inline ConstantBasisVector th8_coeffs(int a, int b) {
  if (a < 0 || b < 0) throw domain_error("th8_coeffs requires a, b >= 0");
  ConstantBasisVector v;
  const int k = 2 * a + 2 * b + 3;
  v.weight = k;
  for (int r = std::max(a, 1); r <= a + b + 1; ++r)
    v.add_zeta(r, -Rational(binomial(2 * r, 2 * a)) * detail::third_power_over_factorial(k - 1 - 2 * r) *
                      Rational(detail::sign_pow(r)) * detail::one_minus_pow(2, 2 * r) * detail::one_minus_pow(3, 2 * r));
  for (int r = a + 1; r <= a + b + 1; ++r)
    v.add_L(r, -Rational(binomial(2 * r - 1, 2 * a)) * detail::third_power_over_factorial(k - 2 * r) *
                   Rational(detail::sign_pow(r)) * (Rational(1) + pow_int(Rational(2), 1 - 2 * r)));
  for (int r = b + 1; r <= a + b + 1; ++r)
    v.add_zeta(r, Rational(binomial(2 * r, 2 * b + 2)) * detail::third_power_over_factorial(k - 1 - 2 * r) *
                      Rational(2 * detail::sign_pow(r)));
  return v;
}

// ζ(2^a, 3, 2^b) over {π^{k-1-2r} ζ(2r+1)}
inline ConstantBasisVector zagier_coeffs(int a, int b) {
  if (a < 0 || b < 0) throw domain_error("zagier_coeffs requires a, b >= 0");
  ConstantBasisVector v;
  const int k = 2 * a + 2 * b + 3;
  v.weight = k;
  for (int r = b + 1; r <= a + b + 1; ++r)
    v.add_zeta(r, Rational(2 * detail::sign_pow(r)) * Rational(binomial(2 * r, 2 * b + 2)) / Rational(factorial(k - 2 * r)));
  for (int r = a + 1; r <= a + b + 1; ++r)
    v.add_zeta(r, Rational(-2 * detail::sign_pow(r)) * Rational(binomial(2 * r, 2 * a + 1)) / Rational(factorial(k - 2 * r)) *
                      detail::one_minus_pow(2, 2 * r));
  return v;
}

inline ConstantBasisVector zeta_odd_vector(int k) {
  ConstantBasisVector v;
  v.weight = k;
  v.add_zeta((k - 1) / 2, Rational(1));
  return v;
}

// Numeric value of a constant vector.
inline ApproxReal contract(const ConstantBasisVector& v, int digits) {
  const int d = std::min(digits + 4, precision_config().digits_cap);
  const int k = v.weight;
  ApproxReal p = pi(d);
  ApproxReal s3 = sqrt3(d);
  ApproxReal total = ApproxReal::exact(Rational(0), working_precision(d));
  for (const auto& [r, q] : v.zeta_odd)
    total = total + q * (pow_int(p, static_cast<unsigned long>(k - 1 - 2 * r)) * zeta_int(2 * r + 1, d));
  for (const auto& [r, q] : v.L_even)
    total = total + q * (pow_int(p, static_cast<unsigned long>(k - 2 * r)) * s3 * L_chi3(2 * r, d));
  return total;
}

// c_k with (lhs of the weighted even-composition identity) = c_k ζ(k).
inline Rational bbb_coefficient(int k) {
  if (k < 2 || k % 2) throw domain_error("bbb_coefficient requires even k >= 2");
  Rational sum(0);
  for (int p = 0; p <= k; p += 2) {
    const int q = k - p;
    Rational term = Rational(pow_int(Integer(2), static_cast<unsigned long>(p)) - 2) * bernoulli_number(p) /
                    Rational(factorial(p) * factorial(q + 1));
    term *= pow_int(Rational(2), -(q / 2));
    // (−1)^{p/2−1}
    if ((p / 2 - 1) % 2 != 0) term = -term;
    sum += term;
  }
  Rational pref = Rational(factorial(k)) * pow_int(Rational(2), 1 - k) / (Rational(3) * bernoulli_number(k));
  if ((k / 2 - 1) % 2 != 0) pref = -pref;
  return canonical(pref * sum);
}

inline std::string to_json_string(const Rational& q) { return q.get_str(); }

}  // namespace apery
