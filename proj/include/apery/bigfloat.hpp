#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "ring.hpp"

namespace apery {

class configuration_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class capability_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrecisionConfig {
  int digits_cap = 200;
};

inline PrecisionConfig& precision_config() {
  static PrecisionConfig cfg;
  return cfg;
}

inline void check_digits(int digits) {
  if (digits < 1) throw configuration_error("requested digits must be positive");
  if (digits > precision_config().digits_cap)
    throw configuration_error("requested " + std::to_string(digits) + " digits exceeds the cap of " +
                              std::to_string(precision_config().digits_cap));
}

inline mpfr_prec_t bits_for_digits(double digits) { return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)); }

// RAII wrapper over mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(long x, mpfr_prec_t prec) : BigFloat(prec) { mpfr_set_si(v_, x, MPFR_RNDN); }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  static BigFloat from_rational(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
    return r;
  }
  static BigFloat from_integer(const Integer& z, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
    return r;
  }
  // 2^e rounded to the given precision
  static BigFloat pow2(long e, mpfr_prec_t prec = 64) {
    BigFloat r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

  std::string to_string(int digits) const {
    if (mpfr_zero_p(v_)) return "0";
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", std::max(digits - 1, 0), v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

 private:
  mpfr_t v_;
};

// Upward-rounded helpers for error bounds, all at 64 bits.
namespace ebound {
inline BigFloat zero() { return BigFloat(64); }
inline BigFloat abs(const BigFloat& x) {
  BigFloat r(64);
  mpfr_abs(r.get(), x.get(), MPFR_RNDU);
  return r;
}
inline BigFloat add(const BigFloat& x, const BigFloat& y) {
  BigFloat r(64);
  mpfr_add(r.get(), x.get(), y.get(), MPFR_RNDU);
  return r;
}
inline BigFloat mul(const BigFloat& x, const BigFloat& y) {
  BigFloat r(64);
  mpfr_mul(r.get(), x.get(), y.get(), MPFR_RNDU);
  return r;
}
inline BigFloat div(const BigFloat& x, const BigFloat& y) {
  BigFloat r(64);
  mpfr_div(r.get(), x.get(), y.get(), MPFR_RNDU);
  return r;
}
inline BigFloat scale(const BigFloat& x, double f) {
  BigFloat r(64);
  mpfr_mul_d(r.get(), x.get(), f, MPFR_RNDU);
  return r;
}
inline BigFloat from_log2(double l2) {
  BigFloat r(64);
  mpfr_set_d(r.get(), l2, MPFR_RNDU);
  mpfr_exp2(r.get(), r.get(), MPFR_RNDU);
  return r;
}
// half-ulp bound for a value rounded to nearest at precision p: |x| 2^{-p}
inline BigFloat rounding(const BigFloat& x, mpfr_prec_t p) {
  BigFloat r = abs(x);
  mpfr_mul_2si(r.get(), r.get(), -static_cast<long>(p), MPFR_RNDU);
  return r;
}
inline BigFloat sub_lower(const BigFloat& x, const BigFloat& y) {
  BigFloat r(64);
  mpfr_sub(r.get(), x.get(), y.get(), MPFR_RNDD);
  return r;
}
inline bool less(const BigFloat& x, const BigFloat& y) { return mpfr_less_p(x.get(), y.get()) != 0; }
}  // namespace ebound

// A value with a rigorous bound on its distance to the true quantity.
class ApproxReal {
 public:
  ApproxReal() : value_(64), error_(64) {}
  ApproxReal(BigFloat v, BigFloat err) : value_(std::move(v)), error_(ebound::abs(err)) {}
  static ApproxReal exact(const Rational& q, mpfr_prec_t prec) {
    BigFloat v = BigFloat::from_rational(q, prec);
    BigFloat lo = BigFloat::from_rational(q, prec, MPFR_RNDD);
    BigFloat hi = BigFloat::from_rational(q, prec, MPFR_RNDU);
    BigFloat e(64);
    mpfr_sub(e.get(), hi.get(), lo.get(), MPFR_RNDU);
    return ApproxReal(std::move(v), std::move(e));
  }

  const BigFloat& value() const noexcept { return value_; }
  const BigFloat& error() const noexcept { return error_; }
  mpfr_prec_t precision() const noexcept { return value_.precision(); }
  double to_double() const { return value_.to_double(); }
  double error_double() const { return error_.to_double(); }

  void widen(const BigFloat& extra) { error_ = ebound::add(error_, ebound::abs(extra)); }

  friend ApproxReal operator+(const ApproxReal& a, const ApproxReal& b) {
    const mpfr_prec_t p = std::max(a.precision(), b.precision());
    BigFloat v(p);
    mpfr_add(v.get(), a.value_.get(), b.value_.get(), MPFR_RNDN);
    BigFloat e = ebound::add(ebound::add(a.error_, b.error_), ebound::rounding(v, p));
    return ApproxReal(std::move(v), std::move(e));
  }
  friend ApproxReal operator-(const ApproxReal& a) {
    BigFloat v(a.precision());
    mpfr_neg(v.get(), a.value_.get(), MPFR_RNDN);
    return ApproxReal(std::move(v), a.error_);
  }
  friend ApproxReal operator-(const ApproxReal& a, const ApproxReal& b) { return a + (-b); }
  friend ApproxReal operator*(const ApproxReal& a, const ApproxReal& b) {
    const mpfr_prec_t p = std::max(a.precision(), b.precision());
    BigFloat v(p);
    mpfr_mul(v.get(), a.value_.get(), b.value_.get(), MPFR_RNDN);
    BigFloat e = ebound::add(ebound::mul(ebound::abs(a.value_), b.error_), ebound::mul(ebound::abs(b.value_), a.error_));
    e = ebound::add(e, ebound::mul(a.error_, b.error_));
    e = ebound::add(e, ebound::rounding(v, p));
    return ApproxReal(std::move(v), std::move(e));
  }
  friend ApproxReal operator/(const ApproxReal& a, const ApproxReal& b) {
    BigFloat lower = ebound::sub_lower(ebound::abs(b.value_), b.error_);
    if (lower.sign() <= 0) throw std::domain_error("division by an interval containing zero");
    const mpfr_prec_t p = std::max(a.precision(), b.precision());
    BigFloat v(p);
    mpfr_div(v.get(), a.value_.get(), b.value_.get(), MPFR_RNDN);
    // |a/b - a'/b'| <= (ea + |a'/b'| eb) / (|b'| - eb)
    BigFloat num = ebound::add(a.error_, ebound::mul(ebound::abs(v), b.error_));
    BigFloat e = ebound::add(ebound::div(num, lower), ebound::rounding(v, p));
    return ApproxReal(std::move(v), std::move(e));
  }
  friend ApproxReal operator*(const Rational& q, const ApproxReal& a) {
    return ApproxReal::exact(q, a.precision()) * a;
  }

  std::string to_string(int digits) const { return value_.to_string(digits) + " ± " + error_.to_string(3); }

 private:
  BigFloat value_;
  BigFloat error_;
};

inline ApproxReal pow_int(const ApproxReal& x, unsigned long e) {
  ApproxReal r = ApproxReal::exact(Rational(1), x.precision());
  ApproxReal b = x;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

inline ApproxReal sqrt_exact_input(unsigned long n, mpfr_prec_t prec) {
  BigFloat v(prec);
  mpfr_sqrt_ui(v.get(), n, MPFR_RNDN);
  BigFloat e = ebound::rounding(v, prec);
  return ApproxReal(std::move(v), std::move(e));
}

inline BigFloat abs_difference(const ApproxReal& a, const ApproxReal& b) {
  BigFloat d(std::max(a.precision(), b.precision()));
  mpfr_sub(d.get(), a.value().get(), b.value().get(), MPFR_RNDN);
  return ebound::abs(d);
}

// True when the two enclosures are consistent within tolerance.
inline bool agree(const ApproxReal& a, const ApproxReal& b, const BigFloat& tol) {
  BigFloat slack = ebound::add(ebound::add(a.error(), b.error()), tol);
  return !ebound::less(slack, abs_difference(a, b));
}

inline bool agree_to_digits(const ApproxReal& a, const ApproxReal& b, int digits) {
  BigFloat tol(64);
  mpfr_set_d(tol.get(), std::pow(10.0, -digits), MPFR_RNDU);
  return agree(a, b, tol);
}

}  // namespace apery
