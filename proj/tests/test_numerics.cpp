#include <gtest/gtest.h>

#include <apery/delta.hpp>
#include <apery/identities.hpp>
#include <apery/numerics.hpp>
#include <random>

using namespace apery;

namespace {

Composition C(std::initializer_list<int> e) { return Composition(std::vector<int>(e)); }
DualityClass K(std::initializer_list<int> e) { return DualityClass(C(e)); }

constexpr mpfr_prec_t kRefPrec = 400;

ApproxReal from_mpfr(const std::function<void(mpfr_ptr)>& fill) {
  BigFloat v(kRefPrec);
  fill(v.get());
  return ApproxReal(std::move(v), BigFloat::pow2(-(kRefPrec - 8)));
}

ApproxReal exact(const Rational& q) { return ApproxReal::exact(q, kRefPrec); }

ApproxReal pi_pow(int e, int digits) { return pow_int(pi(digits), static_cast<unsigned long>(e)); }

Rational decimal(const std::string& digits_after_point, const std::string& int_part = "0") {
  Integer den(1);
  for (std::size_t i = 0; i < digits_after_point.size(); ++i) den *= 10;
  return canonical(Rational(Integer(int_part + digits_after_point, 10), den));
}

Composition random_composition(std::mt19937& rng, std::size_t max_depth, int max_entry) {
  const std::size_t r = 1 + rng() % max_depth;
  std::vector<int> e(r);
  for (auto& x : e) x = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_entry));
  return Composition(e);
}

}  // namespace

TEST(Bernoulli, Numbers) {
  EXPECT_EQ(bernoulli_number(0), Rational(1));
  EXPECT_EQ(bernoulli_number(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli_number(2), Rational(1, 6));
  EXPECT_EQ(bernoulli_number(3), Rational(0));
  EXPECT_EQ(bernoulli_number(12), Rational(-691, 2730));
}

TEST(Bernoulli, Faulhaber) {
  EXPECT_EQ(canonical((bernoulli_poly(3, Rational(5)) - bernoulli_poly(3, Rational(1))) / 3), Rational(30));
  for (int c = 0; c <= 8; ++c)
    for (long A = 0; A <= 3; ++A)
      for (long B = A; B <= A + 7; ++B) {
        Rational brute(0);
        for (long n = A; n < B; ++n) brute += pow_int(Rational(n), static_cast<unsigned long>(c));
        if (c == 0 && A == 0) continue;
        const Rational formula =
            canonical((bernoulli_poly(c + 1, Rational(B)) - bernoulli_poly(c + 1, Rational(A))) / (c + 1));
        ASSERT_EQ(formula, canonical(brute)) << c << " " << A << " " << B;
      }
}

TEST(Constants, PiAgainstMpfr) {
  for (int d : {10, 40, 100, 150}) {
    const auto p = pi(d);
    EXPECT_TRUE(agree_to_digits(p, from_mpfr([](mpfr_ptr x) { mpfr_const_pi(x, MPFR_RNDN); }), d)) << d;
    EXPECT_LT(p.error_double(), std::pow(10.0, -d));
  }
}

TEST(Constants, ZetaAgainstMpfr) {
  for (int s = 2; s <= 15; ++s) {
    const auto z = zeta_int(s, 60);
    EXPECT_TRUE(agree_to_digits(z, from_mpfr([s](mpfr_ptr x) { mpfr_zeta_ui(x, static_cast<unsigned long>(s), MPFR_RNDN); }), 60))
        << s;
  }
  EXPECT_TRUE(agree_to_digits(zeta_int(2, 50), Rational(1, 6) * pi_pow(2, 60), 50));
  EXPECT_TRUE(agree_to_digits(zeta_int(4, 50), Rational(1, 90) * pi_pow(4, 60), 50));
}

TEST(Constants, DirichletL) {
  const auto L = L_chi3(2, 40);
  EXPECT_TRUE(agree_to_digits(L, exact(decimal("78130241289648629686718742962")), 28));
  // partial sums of Σ χ(n)/n², with the tail of the paired series bounded by 1/(27 K^2) for K pairs
  long double s = 0;
  const long K = 200000;
  for (long k = 0; k < K; ++k) {
    const long double a = 3.0L * k + 1, b = 3.0L * k + 2;
    s += 1.0L / (a * a) - 1.0L / (b * b);
  }
  EXPECT_NEAR(static_cast<double>(s), L.to_double(), 1.0 / (27.0 * K * K) + 1e-15);
  // σ(3) = (π√3/2) L(2,χ) − (4/3) ζ(3) checked on the independent oracle
  const auto rhs = Rational(1, 2) * pi(40) * sqrt3(40) * L - Rational(4, 3) * zeta_int(3, 40);
  EXPECT_TRUE(agree_to_digits(sigma_oracle(std::vector<long>{3}, 0, 15), rhs, 15));
  EXPECT_TRUE(agree_to_digits(hurwitz_zeta(3, Rational(1), 40), zeta_int(3, 40), 40));
}

TEST(Constants, DigitsCap) {
  EXPECT_THROW(pi(201), configuration_error);
  EXPECT_THROW(sigma_tail(C({2}), 0, 201), configuration_error);
  EXPECT_THROW(sigma_tail(C({2}), 0, 0), configuration_error);
  EXPECT_THROW(sigma_oracle(std::vector<long>{2}, 0, 21), capability_error);
  EXPECT_THROW(zeta_double_tail_oracle(C({2}), 0, 0, 16), capability_error);
  EXPECT_THROW(zeta_double_tail_oracle(C({1, 2}), 0, 0, 10), domain_error);
}

TEST(Sigma, KnownValues) {
  const int d = 40;
  EXPECT_TRUE(agree_to_digits(sigma_tail(C({2}), 0, d), Rational(1, 3) * zeta_int(2, d + 5), d));
  EXPECT_TRUE(agree_to_digits(sigma_tail(C({2, 2}), 0, d), Rational(1, 1944) * pi_pow(4, d + 5), d));
  EXPECT_TRUE(agree_to_digits(sigma_tail(C({4}), 0, d), Rational(17, 3240) * pi_pow(4, d + 5), d));
  const auto combo = Rational(2) * sigma_tail(C({3, 1}), 0, d + 2) + Rational(3) * sigma_tail(C({2, 1, 1}), 0, d + 2);
  EXPECT_TRUE(agree_to_digits(combo, Rational(1, 1620) * pi_pow(4, d + 5), d));
  for (int r = 1; r <= 5; ++r) {
    const auto twos_r = sigma_tail(twos(r), 0, d);
    const Rational c(Integer(1), pow_int(Integer(3), static_cast<unsigned long>(2 * r)) * factorial(2 * r));
    EXPECT_TRUE(agree_to_digits(twos_r, c * pi_pow(2 * r, d + 5), d)) << r;
    // σ(1, 2, …, 2) with r − 1 twos = π^{2r−1} / (3^{2r−1} (2r−1)! √3)
    const auto one_twos = sigma_tail(concat(Composition{1}, twos(r - 1)), 0, d);
    const Rational c1(Integer(1), pow_int(Integer(3), static_cast<unsigned long>(2 * r - 1)) * factorial(2 * r - 1));
    EXPECT_TRUE(agree_to_digits(one_twos, c1 * pi_pow(2 * r - 1, d + 5) / sqrt3(d + 5), d)) << r;
  }
  const auto empty = sigma_tail(Composition{}, 4, 30);
  EXPECT_TRUE(agree_to_digits(empty, exact(Rational(1, 70)), 30));
  EXPECT_TRUE(agree_to_digits(sigma_oracle(std::vector<long>{}, 4, 15), exact(Rational(1, 70)), 15));
}

TEST(Sigma, RecurrenceConsistency) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Composition a = random_composition(rng, 4, 4);
    const long n = 1 + static_cast<long>(rng() % 6);
    const auto lhs = sigma_tail(a, n - 1, 40) - sigma_tail(a, n, 40);
    const Composition head(std::vector<int>(a.entries().begin(), a.entries().end() - 1));
    const auto rhs = pow_int(Rational(n), -a.entries().back()) * sigma_tail(head, n, 40);
    ASSERT_TRUE(agree_to_digits(lhs, rhs, 38)) << to_string(a) << " " << n;
  }
}

TEST(Sigma, AgreesWithOracle) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 30; ++trial) {
    const Composition a = random_composition(rng, 3, 5);
    const long n = static_cast<long>(rng() % 8);
    const auto fast = sigma_tail(a, n, 20);
    const auto slow = sigma_oracle(a, n, 15);
    ASSERT_TRUE(agree_to_digits(fast, slow, 15)) << to_string(a) << " " << n;
  }
}

TEST(ZetaTail, KnownValues) {
  const int d = 40;
  EXPECT_TRUE(agree_to_digits(zeta_sym_tail(K({2}), 0, d), Rational(1, 6) * pi_pow(2, d + 5), d));
  for (long n : {0L, 1L, 5L})
    EXPECT_TRUE(agree_to_digits(zeta_sym_tail(K({2}), n, d), Rational(3) * sigma_tail(C({2}), n, d + 2), d)) << n;
  EXPECT_TRUE(agree_to_digits(zeta_sym_tail(K({3, 1}), 0, d), Rational(1, 360) * pi_pow(4, d + 5), d));
  EXPECT_TRUE(agree_to_digits(mzv(C({3}), d), zeta_int(3, d + 5), d));
  EXPECT_TRUE(agree_to_digits(zeta_sym_tail(DualityClass(Composition{}), 3, d), exact(Rational(1, 20)), d));
}

TEST(ZetaTail, RecurrenceConsistency) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 15; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 6);
    const auto classes = enumerate_classes(k);
    const DualityClass c = classes[rng() % classes.size()];
    const Composition& a = c.representative();
    const long n = 1 + static_cast<long>(rng() % 4);
    const auto lhs = zeta_sym_tail(c, n - 1, 35) - zeta_sym_tail(c, n, 35);
    ApproxReal rhs = exact(Rational(0));
    for (const Composition& part : {init_part(a), mid_part(a), fin_part(a)})
      rhs = rhs + pow_int(Rational(n), part.weight() - k) * zeta_sym_tail(DualityClass(part), n, 35);
    ASSERT_TRUE(agree_to_digits(lhs, rhs, 33)) << to_string(c) << " " << n;
  }
}

TEST(ZetaTail, AgreesWithOracle) {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 5);
    const auto all = enumerate(k, Filter::admissible);
    const Composition a = all[rng() % all.size()];
    const long n = 2 + static_cast<long>(rng() % 5);
    const auto fast = zeta_sym_tail(DualityClass(a), n, 15);
    const auto slow = zeta_double_tail_oracle(a, n, n, 10);
    ASSERT_TRUE(agree_to_digits(fast, slow, 10)) << to_string(a) << " " << n;
  }
}

TEST(ZetaTail, OracleDualityAndBound) {
  const Composition a = C({3, 1});
  EXPECT_TRUE(agree_to_digits(zeta_double_tail_oracle(a, 2, 5, 10), zeta_double_tail_oracle(dual(a), 5, 2, 10), 10));
  EXPECT_TRUE(agree_to_digits(zeta_double_tail_oracle(C({2}), 0, 0, 10), Rational(1, 6) * pi_pow(2, 20), 10));
  for (const auto& [b, m, n] : std::vector<std::tuple<Composition, long, long>>{
           {C({2}), 1, 1}, {C({3, 1}), 2, 5}, {C({2, 2}), 3, 1}, {C({4, 1, 1}), 4, 4}, {C({2, 1}), 3, 0}}) {
    const auto tail = zeta_double_tail_oracle(b, m, n, 10);
    const double factor = (m == 0 ? 1.0 : std::pow(double(m), double(m))) * (n == 0 ? 1.0 : std::pow(double(n), double(n))) /
                          std::pow(double(m + n), double(m + n));
    EXPECT_LE(tail.to_double(), factor * mzv(b, 20).to_double() * (1 + 1e-12)) << to_string(b);
  }
}

TEST(Bounds, TailsDecayLikeFourToTheMinusN) {
  for (const auto& a : {C({2}), C({3, 1}), C({2, 1, 2}), C({1, 1})})
    for (long n : {1L, 3L, 8L}) {
      const double full = sigma_tail(a, 0, 20).to_double();
      EXPECT_LE(sigma_tail(a, n, 20).to_double(), std::pow(4.0, -n) * full * (1 + 1e-12)) << to_string(a);
    }
  for (const auto& c : {K({2}), K({3, 1}), K({2, 2, 2})})
    for (long n : {1L, 4L}) {
      EXPECT_LE(zeta_sym_tail(c, n, 20).to_double(), std::pow(4.0, -n) * zeta_sym_tail(c, 0, 20).to_double() * (1 + 1e-12));
      EXPECT_LE(zeta_sym_tail(c, n, 20).to_double(), std::pow(4.0, -n) * 1.6449340668482264);
    }
}

TEST(Bounds, ErrorBoundsAreSound) {
  auto check = [](const char* what, const std::function<ApproxReal(int)>& f) {
    for (int d : {15, 30}) {
      const auto lo = f(d), hi = f(d + 10);
      EXPECT_LE(lo.error_double(), std::pow(10.0, -d)) << what << " " << d;
      BigFloat diff = abs_difference(lo, hi);
      EXPECT_LE(diff.to_double(), lo.error_double() + hi.error_double()) << what << " " << d;
    }
  };
  check("pi", [](int d) { return pi(d); });
  check("zeta5", [](int d) { return zeta_int(5, d); });
  check("L2", [](int d) { return L_chi3(2, d); });
  check("L4", [](int d) { return L_chi3(4, d); });
  check("sqrt3", [](int d) { return sqrt3(d); });
  check("sigma", [](int d) { return sigma_tail(C({3, 1, 2}), 2, d); });
  check("sigma1", [](int d) { return sigma_tail(C({1, 1, 1}), 0, d); });
  check("zeta_tail", [](int d) { return zeta_sym_tail(K({3, 2, 1}), 1, d); });
  check("hurwitz", [](int d) { return hurwitz_zeta(3, Rational(1, 3), d); });
}

TEST(Reduction, Examples) {
  PolyLinComb zero_lead;
  zero_lead.add_term(C({1, 3, 2}), RatPoly(Rational(2, 3)));
  zero_lead.add_term(C({3, 2}), RatPoly(Rational(1, 3)));
  EXPECT_EQ(reduce_integer_entries({0, 3, 2}), zero_lead);
  EXPECT_EQ(reduce_integer_entries({1, 2}), PolyLinComb(C({1, 2}), RatPoly(Rational(1))));
  EXPECT_EQ(lambda_cd(1, 0), Rational(-6));
  EXPECT_THROW(reduce_integer_entries({}), domain_error);
}

TEST(Reduction, NumericAgainstDirectSums) {
  const std::vector<std::vector<long>> tuples{{-1},    {0},        {-2},      {0, 2},    {0, 3, 2}, {-1, 2},
                                              {2, 0},  {3, -1},    {2, 0, 1}, {3, -2, 2}, {1, 0},  {-1, 0, 2},
                                              {4, -1, -1}};
  for (const auto& a : tuples) {
    const auto red = reduce_integer_entries(a);
    for (const auto& [b, f] : red)
      for (int x : b.entries()) ASSERT_GE(x, 1);
    for (long n : {0L, 1L, 2L}) {
      const auto via = evaluate(red, n, 25);
      const auto direct = sigma_oracle(a, n, 18);
      ASSERT_TRUE(agree_to_digits(via, direct, 18)) << "tuple size " << a.size() << " first " << a[0] << " n " << n;
    }
  }
}

TEST(ZetaSigmaBridge, SpotCheck) {
  for (int k = 2; k <= 6; ++k)
    for (const auto& c : enumerate_classes(k))
      for (long n : {0L, 1L, 3L}) {
        const auto lhs = zeta_sym_tail(c, n, 32);
        const auto rhs = sigma_sum(delta_inductive(c), n, 32);
        ASSERT_TRUE(agree_to_digits(lhs, rhs, 30)) << to_string(c) << " " << n;
      }
}

TEST(ClosedForms, ContractMatchesDirectSums) {
  const int d = 35;
  for (int a = 1; a <= 4; ++a)
    for (int b = 0; 2 * a + 2 * b + 1 <= 9; ++b) {
      const auto direct = sigma_tail(concat(concat(twos(a), Composition{1}), twos(b)), 0, d + 2);
      ASSERT_TRUE(agree_to_digits(contract(th7_coeffs(a, b), d), direct, d)) << a << " " << b;
    }
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; 2 * a + 2 * b + 3 <= 9; ++b) {
      const Composition x = concat(concat(twos(a), Composition{3}), twos(b));
      ASSERT_TRUE(agree_to_digits(contract(th8_coeffs(a, b), d), sigma_tail(x, 0, d + 2), d)) << a << " " << b;
      ASSERT_TRUE(agree_to_digits(contract(zagier_coeffs(a, b), d), mzv(x, d + 2), d)) << a << " " << b;
    }
}

TEST(ClosedForms, BbbCoefficients) {
  EXPECT_EQ(bbb_coefficient(4), Rational(17, 16));
  EXPECT_EQ(bbb_coefficient(6), Rational(163, 128));
  EXPECT_EQ(bbb_coefficient(8), Rational(1373, 1024));
  EXPECT_EQ(bbb_coefficient(10), Rational(11143, 8192));
  EXPECT_EQ(bbb_coefficient(12), Rational(Integer(61835987), Integer(65536) * Integer(691)));
  EXPECT_THROW(bbb_coefficient(5), domain_error);
}

TEST(Identities, RegistryPasses) {
  for (const auto& e : identities::registry()) {
    const auto report = verify_identity(e.name);
    EXPECT_TRUE(report.pass) << e.name << " max residual " << report.max_residual;
    if (e.kind != "report") {
      EXPECT_FALSE(report.checks.empty()) << e.name;
    }
  }
  EXPECT_THROW(verify_identity("no-such-identity"), domain_error);
  EXPECT_THROW(verify_identity("euler", {}, 500), configuration_error);
}
