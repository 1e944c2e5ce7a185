#include <apery/apery.hpp>
#include <apery/identities.hpp>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>

using namespace apery;

namespace {

Composition C(std::initializer_list<int> e) { return Composition(std::vector<int>(e)); }
DualityClass K(std::initializer_list<int> e) { return DualityClass(C(e)); }

CompLinComb<Integer> L(std::initializer_list<std::pair<Composition, long>> terms) {
  CompLinComb<Integer> out;
  for (const auto& [c, m] : terms) out.add_term(c, Integer(m));
  return out;
}

std::vector<std::vector<Integer>> rows_of(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Integer>> m;
  for (const auto& r : rows) {
    std::vector<Integer> row;
    for (long x : r) row.emplace_back(x);
    m.push_back(row);
  }
  return m;
}

bool all_pass(const std::vector<std::pair<std::string, IdentityParams>>& runs, int digits, std::string& detail) {
  bool ok = true;
  for (const auto& [name, params] : runs) {
    const auto rep = verify_identity(name, params, digits);
    if (!rep.pass) {
      ok = false;
      detail += " " + name + "(" + rep.max_residual + ")";
    }
  }
  return ok;
}

bool c1_delta_tables(std::string&) {
  bool ok = delta_inductive(K({2})) == L({{C({2}), 3}});
  ok &= delta_inductive(K({3})) == L({{C({3}), 2}, {C({2, 1}), 3}});
  ok &= delta_inductive(K({4})) == L({{C({4}), 2}, {C({3, 1}), 2}, {C({2, 1, 1}), 3}});
  ok &= delta_inductive(K({3, 1})) == L({{C({3, 1}), 4}, {C({2, 2}), 3}, {C({2, 1, 1}), 6}});
  ok &= delta_inductive(K({2, 2})) == L({{C({4}), 1}, {C({2, 2}), 6}});
  ok &= delta_inductive(K({5})) == L({{C({5}), 2}, {C({4, 1}), 2}, {C({3, 1, 1}), 2}, {C({2, 1, 1, 1}), 3}});
  ok &= delta_inductive(K({4, 1})) ==
        L({{C({4, 1}), 2}, {C({3, 2}), 2}, {C({3, 1, 1}), 6}, {C({2, 2, 1}), 3}, {C({2, 1, 2}), 3}, {C({2, 1, 1, 1}), 9}});
  ok &= delta_inductive(K({3, 2})) ==
        L({{C({4, 1}), 1}, {C({3, 2}), 2}, {C({2, 3}), 3}, {C({2, 2, 1}), 6}, {C({2, 1, 2}), 3}});
  ok &= delta_inductive(K({2, 3})) == L({{C({5}), 1}, {C({3, 2}), 2}, {C({2, 3}), 3}, {C({2, 1, 2}), 3}});
  ok &= delta_explicit(C({3, 3})) == L({{C({2, 1, 2, 1}), 3},
                                        {C({2, 3, 1}), 3},
                                        {C({2, 1, 3}), 3},
                                        {C({2, 4}), 3},
                                        {C({3, 2, 1}), 2},
                                        {C({3, 3}), 2},
                                        {C({5, 1}), 1}});
  for (int k = 0; k <= 12 && ok; ++k)
    for (const auto& c : enumerate_classes(k)) ok &= delta_inductive(c) == delta_explicit(c);
  return ok;
}

bool c2_rank_tables(std::string& detail) {
  const std::vector<std::size_t> alpha_expect{0, 0, 0, 0, 0, 1, 0, 3, 2, 9, 10, 31};
  const std::vector<std::size_t> delta_expect{1, 0, 4, 2, 14, 15, 52};
  bool ok = true;
  for (int k = 1; k <= 12; ++k) {
    const std::size_t r = kernel_basis(alpha_matrix(k).matrix).rank();
    if (r != alpha_expect[static_cast<std::size_t>(k - 1)]) {
      ok = false;
      detail += " alpha k=" + std::to_string(k) + " got " + std::to_string(r);
    }
  }
  for (int k = 6; k <= 12; ++k) {
    const std::size_t r = kernel_basis(delta_k_matrix(k).matrix).rank();
    if (r != delta_expect[static_cast<std::size_t>(k - 6)]) {
      ok = false;
      detail += " delta k=" + std::to_string(k) + " got " + std::to_string(r);
    }
  }
  ClassLinComb<Integer> g;
  for (const auto& [c, m] : std::vector<std::pair<DualityClass, long>>{{K({6}), 2},
                                                                      {K({5, 1}), -2},
                                                                      {K({4, 2}), 4},
                                                                      {K({4, 1, 1}), 1},
                                                                      {K({3, 3}), 1},
                                                                      {K({3, 2, 1}), -2},
                                                                      {K({3, 1, 2}), -1},
                                                                      {K({2, 4}), -2},
                                                                      {K({2, 2, 2}), 1},
                                                                      {K({2, 1, 3}), -2}})
    g.add_term(c, m);
  const auto am = alpha_matrix(6);
  ok &= am.matrix.annihilates(from_class_lincomb(g, am.columns));
  ok &= kernel_basis(am.matrix).rank() == 1;
  return ok;
}

bool c3_th15(std::string& detail) {
  IntersectionLattices lat;
  bool ok = true;
  for (int k = 1; k <= 10; ++k) {
    const auto& m = lat.get(k);
    const auto dm = delta_k_matrix(k);
    const auto d = kernel_basis(dm.matrix);
    bool here = m.rank() == d.rank();
    for (const auto& v : m.vectors) here &= dm.matrix.annihilates(v);
    for (const auto& v : d.vectors) here &= in_kernel(lat.defining_matrix(k), v);
    if (!here) detail += " k=" + std::to_string(k);
    ok &= here;
  }
  return ok;
}

bool c4_numeric_suite(std::string& detail) {
  return all_pass({{"euler", {}},
                   {"zeta3", {}},
                   {"weight4", {}},
                   {"sigma-twos", {{"r", 5}}},
                   {"eu87", {}},
                   {"eu88", {}},
                   {"zucker", {}},
                   {"depth-one", {{"a", 8}}},
                   {"bbb", {}},
                   {"leshchiner", {}},
                   {"all-twos", {{"m", 4}}}},
                  40, detail);
}

bool c5_t1(std::string& detail) {
  return all_pass({{"t1-spotcheck", {{"max-weight", 6}, {"random", 20}}}}, 30, detail);
}

bool c6_closed_forms(std::string& detail) {
  return all_pass({{"th7", {{"max-weight", 9}}},
                   {"th8", {{"max-weight", 9}}},
                   {"zagier", {{"max-weight", 9}}},
                   {"eu127", {}},
                   {"eu128", {}},
                   {"eu129", {}}},
                  35, detail);
}

bool c7_th18(std::string& detail) { return all_pass({{"th18", {}}, {"th17", {}}}, 40, detail); }

bool c8_bbb(std::string&) {
  return bbb_coefficient(4) == Rational(17, 16) && bbb_coefficient(6) == Rational(163, 128) &&
         bbb_coefficient(8) == Rational(1373, 1024) && bbb_coefficient(10) == Rational(11143, 8192) &&
         bbb_coefficient(12) == Rational(Integer(61835987), Integer(65536) * Integer(691));
}

bool c9_delta_submatrices(std::string& detail) {
  bool ok = delta_submatrix(0) == rows_of({{1}});
  ok &= delta_submatrix(2) == rows_of({{3}});
  ok &= delta_submatrix(4) == rows_of({{3, 6}, {0, 1}});
  ok &= delta_submatrix(6) == rows_of({{3, 6, 12, 0}, {0, 1, 2, 0}, {0, 0, 3, 0}, {0, 0, 0, 1}});
  ok &= delta_submatrix(8) == rows_of({{3, 6, 12, 0, 6, 24, 0, 0},
                                       {0, 1, 2, 0, 0, 4, 0, 0},
                                       {0, 0, 3, 0, 0, 6, 0, 0},
                                       {0, 0, 0, 1, 0, 0, 0, 0},
                                       {0, 0, 0, 0, 3, 6, 0, 0},
                                       {0, 0, 0, 0, 0, 1, 0, 4},
                                       {0, 0, 0, 0, 0, 0, 3, 0},
                                       {0, 0, 0, 0, 0, 0, 0, 1}});
  if (!ok) detail += " printed matrices";
  for (int k = 4; k <= 12; k += 2) {
    const auto D = delta_submatrix(k);
    const auto rows = enumerate(k, Filter::even_entries);
    const auto cols = enumerate(k, Filter::self_dual_classes);
    bool here = true;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      here &= D[r][r] == (r % 2 ? 1 : 3);
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const int i = rows[r].entries().back() / 2, j = cols[c].entries().back();
        if ((j != i && j != 2 * i) || c < r) here &= D[r][c] == 0;
      }
    }
    for (int i = 1; i < k / 2; ++i) {
      std::vector<std::vector<Integer>> block;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].entries().back() != 2 * i) continue;
        std::vector<Integer> row;
        for (std::size_t c = 0; c < cols.size(); ++c)
          if (cols[c].entries().back() == i) row.push_back(D[r][c]);
        block.push_back(row);
      }
      here &= block == delta_submatrix(k - 2 * i);
    }
    here &= determinant(ExactMatrix::from_rows(D)) != 0;
    if (!here) detail += " P7 k=" + std::to_string(k);
    ok &= here;
  }
  return ok;
}

bool c10_properties(std::string& detail) {
  bool ok = true;
  // multiplicativity of φ on ⊞ for weights ≤ 6
  std::vector<Composition> comps;
  for (int w = 1; w <= 6; ++w)
    for (const auto& a : all_compositions(w)) comps.push_back(a);
  for (std::size_t i = 0; i < comps.size() && ok; ++i)
    for (std::size_t j = i; j < comps.size(); ++j) {
      const auto prod = boxast(comps[i], comps[j]);
      for (long q = 1; q <= 5; ++q)
        for (long p = 0; p < q; ++p) ok &= phi(p, q, prod) == canonical(phi(p, q, comps[i]) * phi(p, q, comps[j]));
    }
  if (!ok) detail += " EE61";
  // odd-entry bound
  for (int k = 2; k <= 10; ++k)
    for (const auto& c : enumerate_classes(k)) {
      const Composition& a = c.representative();
      const int bound = a.weight() - 2 * a.height();
      for (const auto& [b, m] : delta_inductive(c)) {
        const int odd = static_cast<int>(
            std::count_if(b.entries().begin(), b.entries().end(), [](int x) { return x % 2 != 0; }));
        if (odd > bound) {
          ok = false;
          detail += " TH13 " + to_string(a);
        }
      }
    }
  // distinct columns and coefficient sums
  for (int k = 0; k <= 12; ++k) {
    const auto dm = delta_k_matrix(k);
    std::set<IntVector> seen;
    for (std::size_t j = 0; j < dm.matrix.cols(); ++j) ok &= seen.insert(dm.matrix.column(j)).second;
    for (const auto& v : kernel_basis(dm.matrix).vectors) {
      Integer s(0);
      for (const auto& x : v) s += x;
      ok &= s == 0;
    }
  }
  // duality, word round trip and μ-inversion
  for (int k = 2; k <= 12; ++k)
    for (const auto& a : enumerate(k, Filter::admissible)) {
      ok &= dual(dual(a)) == a && from_word(to_word(a)) == a;
      ok &= mu_invert(mu(CompLinComb<Integer>(a)), k) == CompLinComb<Integer>(a);
    }
  return ok;
}

bool c11_block_determinant(std::string& detail) {
  bool ok = true;
  for (int k = 3; k <= 13; k += 2)
    if (determinant(th7_block_matrix(k)) == 0) {
      ok = false;
      detail += " k=" + std::to_string(k);
    }
  return ok;
}

bool c12_oracles(std::string& detail) {
  bool ok = true;
  std::mt19937 rng(20240);
  for (int t = 0; t < 30; ++t) {
    const std::size_t r = 1 + rng() % 3;
    std::vector<int> e(r);
    for (auto& x : e) x = 1 + static_cast<int>(rng() % 5);
    const Composition a(e);
    const long n = static_cast<long>(rng() % 8);
    if (!agree_to_digits(sigma_tail(a, n, 20), sigma_oracle(a, n, 15), 15)) {
      ok = false;
      detail += " sigma " + to_string(a);
    }
  }
  for (int t = 0; t < 20; ++t) {
    const int k = 2 + static_cast<int>(rng() % 5);
    const auto all = enumerate(k, Filter::admissible);
    const Composition a = all[rng() % all.size()];
    const long n = 2 + static_cast<long>(rng() % 5);
    if (!agree_to_digits(zeta_sym_tail(DualityClass(a), n, 15), zeta_double_tail_oracle(a, n, n, 10), 10)) {
      ok = false;
      detail += " zeta " + to_string(a);
    }
  }
  const Composition a = C({3, 1});
  ok &= agree_to_digits(zeta_double_tail_oracle(a, 2, 5, 10), zeta_double_tail_oracle(dual(a), 5, 2, 10), 10);
  return ok;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria{
      {"delta tables and inductive = explicit through weight 12", c1_delta_tables},
      {"kernel rank tables of alpha_k and delta_k, weight-6 generator", c2_rank_tables},
      {"intersection lattices equal Ker(delta_k) for k <= 10", c3_th15},
      {"numeric identity suite at 40 digits", c4_numeric_suite},
      {"zeta(l)_{n,n} = sigma(delta(l))_n spot check", c5_t1},
      {"closed-form coefficient vectors and weight-5 matrices", c6_closed_forms},
      {"polynomial delta identity and its specializations", c7_th18},
      {"BBB coefficients for k = 4..12", c8_bbb},
      {"Delta_k matrices and block structure", c9_delta_submatrices},
      {"property suites", c10_properties},
      {"block matrix determinant for odd k <= 13", c11_block_determinant},
      {"oracle equivalence", c12_oracles},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = criteria[i].second(detail);
    } catch (const std::exception& e) {
      detail += std::string(" exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " (" << std::fixed
              << std::setprecision(1) << secs << " s)" << detail << std::endl;
  }
  return failures ? 1 : 0;
}
