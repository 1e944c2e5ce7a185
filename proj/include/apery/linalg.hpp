#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "delta.hpp"
#include "lincomb.hpp"

namespace apery {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, Integer(0)) {}
  ExactMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw domain_error("ragged matrix initializer");
      for (long x : row) a_.emplace_back(x);
    }
  }
  static ExactMatrix from_rows(const std::vector<std::vector<Integer>>& rows) {
    ExactMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw domain_error("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  ExactMatrix transposed() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<Integer> apply(const std::vector<Integer>& v) const {
    if (v.size() != cols_) throw domain_error("dimension mismatch in matrix-vector product");
    std::vector<Integer> r(rows_, Integer(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(v[j]) != 0 && sgn((*this)(i, j)) != 0) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  bool annihilates(const std::vector<Integer>& v) const {
    for (const auto& x : apply(v))
      if (sgn(x) != 0) return false;
    return true;
  }

  std::vector<Integer> column(std::size_t j) const {
    std::vector<Integer> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  ExactMatrix select_columns(const std::vector<std::size_t>& idx) const {
    ExactMatrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
    return m;
  }

  ExactMatrix select_rows(std::size_t begin, std::size_t end) const {
    ExactMatrix m(end - begin, cols_);
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i - begin, j) = (*this)(i, j);
    return m;
  }

  friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.cols_ != y.rows_) throw domain_error("dimension mismatch in matrix product");
    ExactMatrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t l = 0; l < x.cols_; ++l) {
        if (sgn(x(i, l)) == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j)
          if (sgn(y(l, j)) != 0) r(i, j) += x(i, l) * y(l, j);
      }
    return r;
  }

  static ExactMatrix vstack(const std::vector<ExactMatrix>& parts, std::size_t cols) {
    std::size_t total = 0;
    for (const auto& p : parts) {
      if (p.cols_ != cols) throw domain_error("vstack column mismatch");
      total += p.rows_;
    }
    ExactMatrix m(total, cols);
    std::size_t off = 0;
    for (const auto& p : parts) {
      std::copy(p.a_.begin(), p.a_.end(), m.a_.begin() + static_cast<long>(off * cols));
      off += p.rows_;
    }
    return m;
  }

  friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

using IntVector = std::vector<Integer>;

struct KernelBasis {
  std::size_t dimension = 0;  // ambient
  std::vector<IntVector> vectors;
  std::size_t rank() const noexcept { return vectors.size(); }
};

// Fraction-free elimination; returns rank and the last pivot (the determinant for full-rank square input).
inline std::pair<std::size_t, Integer> bareiss(ExactMatrix m) {
  const std::size_t R = m.rows(), C = m.cols();
  Integer prev(1);
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && sgn(m(piv, c)) == 0) ++piv;
    if (piv == R) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < C; ++j) std::swap(m(piv, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) {
        m(i, j) = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return {r, sign * prev};
}

inline std::size_t rank_bareiss(const ExactMatrix& m) { return bareiss(m).first; }

inline Integer determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw domain_error("determinant requires a square matrix");
  if (m.rows() == 0) return 1;
  auto [r, last] = bareiss(m);
  return r < m.rows() ? Integer(0) : last;
}

namespace modular {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

inline std::uint64_t power(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = mul(r, b, p);
    b = mul(b, b, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return power(a, p - 2, p); }

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Primes just below 2^31, largest first.
inline std::uint64_t nth_prime(std::size_t i) {
  static std::vector<std::uint64_t> primes;
  static std::mutex mu;
  std::lock_guard lock(mu);
  std::uint64_t candidate = primes.empty() ? (std::uint64_t{1} << 31) - 1 : primes.back() - 2;
  while (primes.size() <= i) {
    while (!is_prime(candidate)) candidate -= 2;
    primes.push_back(candidate);
    candidate -= 2;
  }
  return primes[i];
}

struct Reduced {
  std::uint64_t p = 0;
  std::vector<std::size_t> pivots;
  std::vector<std::uint32_t> rref;  // rank x cols, reduced row echelon form
  std::size_t cols = 0;
};

inline std::uint32_t residue(const Integer& x, std::uint64_t p) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p)));
}

inline Reduced rref(const ExactMatrix& m, std::uint64_t p) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::uint32_t> a(R * C);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) a[i * C + j] = residue(m(i, j), p);
  Reduced out;
  out.p = p;
  out.cols = C;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && a[piv * C + c] == 0) ++piv;
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(a[piv * C + j], a[r * C + j]);
    std::uint32_t* pr = &a[r * C];
    const std::uint64_t inv = inverse(pr[c], p);
    for (std::size_t j = c; j < C; ++j) pr[j] = static_cast<std::uint32_t>(mul(pr[j], inv, p));
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r) continue;
      std::uint32_t* pi = &a[i * C];
      const std::uint64_t f = pi[c];
      if (f == 0) continue;
      const std::uint64_t nf = p - f;
      for (std::size_t j = c; j < C; ++j)
        if (pr[j]) pi[j] = static_cast<std::uint32_t>((pi[j] + nf * pr[j]) % p);
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r * C);
  out.rref = std::move(a);
  return out;
}

// Rank only, forward elimination; skips zero multipliers so sparse inputs stay cheap.
inline std::size_t rank(const ExactMatrix& m, std::uint64_t p) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::uint32_t> a(R * C);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) a[i * C + j] = residue(m(i, j), p);
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && a[piv * C + c] == 0) ++piv;
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = c; j < C; ++j) std::swap(a[piv * C + j], a[r * C + j]);
    std::uint32_t* pr = &a[r * C];
    const std::uint64_t inv = inverse(pr[c], p);
    for (std::size_t j = c; j < C; ++j) pr[j] = static_cast<std::uint32_t>(mul(pr[j], inv, p));
    std::vector<std::size_t> nz;
    for (std::size_t j = c + 1; j < C; ++j)
      if (pr[j]) nz.push_back(j);
    for (std::size_t i = r + 1; i < R; ++i) {
      std::uint32_t* pi = &a[i * C];
      const std::uint64_t f = pi[c];
      if (f == 0) continue;
      const std::uint64_t nf = p - f;
      pi[c] = 0;
      for (std::size_t j : nz) pi[j] = static_cast<std::uint32_t>((pi[j] + nf * pr[j]) % p);
    }
    ++r;
  }
  return r;
}

}  // namespace modular

namespace detail {

// Rational reconstruction of x mod n with |num|, den <= sqrt(n/2).
inline std::optional<Rational> rational_reconstruct(const Integer& x, const Integer& n) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(n / 2).get_mpz_t());
  Integer r0 = n, r1 = x, t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (sgn(t1) == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  return canonical(Rational(r1, t1));
}

inline Integer content(const IntVector& v) {
  Integer g(0);
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

inline void make_primitive(IntVector& v) {
  Integer g = content(v);
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0)
      for (auto& y : v) y = -y;
    break;
  }
}

inline Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

inline void prime_factors(Integer n, std::set<Integer>& out) {
  n = abs(n);
  for (unsigned long p = 2; p < 10000 && n > 1; ++p) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.insert(Integer(p));
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    out.insert(n);
    return;
  }
  Integer d = pollard_rho(n);
  prime_factors(d, out);
  prime_factors(n / d, out);
}

// Left dependency (mod p) among integer vectors, if any: c with Σ c_j v_j ≡ 0, c_j ∈ [0,p).
inline std::optional<std::vector<Integer>> dependency_mod(const std::vector<IntVector>& vs, const Integer& p) {
  const std::size_t d = vs.size();
  if (d == 0) return std::nullopt;
  const std::size_t n = vs[0].size();
  // Gaussian elimination on [V | I] with big-integer residues (p may exceed 64 bits).
  std::vector<std::vector<Integer>> rows(d, std::vector<Integer>(n + d, Integer(0)));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) mpz_fdiv_r(rows[i][j].get_mpz_t(), vs[i][j].get_mpz_t(), p.get_mpz_t());
    rows[i][n + i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < d; ++c) {
    std::size_t piv = r;
    while (piv < d && sgn(rows[piv][c]) == 0) ++piv;
    if (piv == d) continue;
    std::swap(rows[piv], rows[r]);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), rows[r][c].get_mpz_t(), p.get_mpz_t());
    for (auto& x : rows[r]) x = (x * inv) % p;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      Integer f = rows[i][c];
      for (std::size_t j = 0; j < n + d; ++j) {
        rows[i][j] -= f * rows[r][j];
        mpz_fdiv_r(rows[i][j].get_mpz_t(), rows[i][j].get_mpz_t(), p.get_mpz_t());
      }
    }
    ++r;
  }
  if (r == d) return std::nullopt;
  return std::vector<Integer>(rows[r].begin() + static_cast<long>(n), rows[r].end());
}

inline void saturate(std::vector<IntVector>& basis, const std::set<Integer>& primes) {
  for (const auto& p : primes) {
    while (auto dep = dependency_mod(basis, p)) {
      std::size_t j = 0;
      while (sgn((*dep)[j]) == 0) ++j;
      IntVector combo(basis[j].size(), Integer(0));
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (sgn((*dep)[i]) != 0)
          for (std::size_t t = 0; t < combo.size(); ++t) combo[t] += (*dep)[i] * basis[i][t];
      for (auto& x : combo) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
      basis[j] = std::move(combo);
    }
  }
  for (auto& v : basis) make_primitive(v);
}

}  // namespace detail

// Saturated integer basis of Ker(M) ∩ Z^n: multi-modular RREF, rational reconstruction,
// exact verification, then p-saturation at the primes dividing the denominators.
inline KernelBasis kernel_basis(const ExactMatrix& m) {
  const std::size_t C = m.cols();
  KernelBasis kb;
  kb.dimension = C;
  if (C == 0) return kb;
  if (m.rows() == 0) {
    for (std::size_t j = 0; j < C; ++j) {
      IntVector v(C, Integer(0));
      v[j] = 1;
      kb.vectors.push_back(std::move(v));
    }
    return kb;
  }
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> free_cols;
  std::vector<Integer> residues;  // rank x nfree, CRT accumulated
  Integer modulus(1);
  std::size_t prime_index = 0;
  std::size_t next_check = 1;
  std::size_t used = 0;
  for (;;) {
    const std::uint64_t p = modular::nth_prime(prime_index++);
    modular::Reduced red = modular::rref(m, p);
    if (used > 0 && red.pivots != pivots) {
      if (red.pivots.size() < pivots.size() ||
          (red.pivots.size() == pivots.size() && red.pivots > pivots))
        continue;  // unlucky prime
      used = 0;    // earlier primes were unlucky
    }
    if (used == 0) {
      pivots = red.pivots;
      free_cols.clear();
      std::vector<bool> is_piv(C, false);
      for (auto c : pivots) is_piv[c] = true;
      for (std::size_t j = 0; j < C; ++j)
        if (!is_piv[j]) free_cols.push_back(j);
      residues.assign(pivots.size() * free_cols.size(), Integer(0));
      modulus = 1;
    }
    const std::size_t rk = pivots.size(), nf = free_cols.size();
    if (nf == 0) return kb;
    // CRT: x ≡ residues (mod modulus), x ≡ -rref (mod p)
    Integer pz(static_cast<unsigned long>(p));
    Integer inv;
    Integer mm = modulus % pz;
    mpz_invert(inv.get_mpz_t(), mm.get_mpz_t(), pz.get_mpz_t());
    for (std::size_t i = 0; i < rk; ++i)
      for (std::size_t f = 0; f < nf; ++f) {
        std::uint64_t val = red.rref[i * C + free_cols[f]];
        val = val ? p - val : 0;
        Integer& x = residues[i * nf + f];
        Integer diff = Integer(static_cast<unsigned long>(val)) - x;
        Integer t = (diff * inv) % pz;
        if (sgn(t) < 0) t += pz;
        x += modulus * t;
      }
    modulus *= pz;
    ++used;
    if (used < next_check) continue;
    next_check = used * 2;
    bool ok = true;
    std::vector<IntVector> vecs;
    std::set<Integer> primes;
    for (std::size_t f = 0; f < nf && ok; ++f) {
      std::vector<Rational> q(C, Rational(0));
      q[free_cols[f]] = 1;
      for (std::size_t i = 0; i < rk; ++i) {
        auto rr = detail::rational_reconstruct(residues[i * nf + f], modulus);
        if (!rr) {
          ok = false;
          break;
        }
        q[pivots[i]] = *rr;
      }
      if (!ok) break;
      Integer den(1);
      for (const auto& x : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
      IntVector v(C);
      for (std::size_t j = 0; j < C; ++j) v[j] = Integer(q[j] * den);
      if (!m.annihilates(v)) {
        ok = false;
        break;
      }
      if (den > 1) detail::prime_factors(den, primes);
      vecs.push_back(std::move(v));
    }
    if (!ok) continue;
    detail::saturate(vecs, primes);
    kb.vectors = std::move(vecs);
    return kb;
  }
}

inline std::size_t rank(const ExactMatrix& m) { return m.cols() - kernel_basis(m).rank(); }

// Rank modulo two independent primes; both must agree.
inline std::size_t rank_modular(const ExactMatrix& m) {
  std::size_t r1 = modular::rank(m, modular::nth_prime(0));
  std::size_t r2 = modular::rank(m, modular::nth_prime(1));
  if (r1 != r2) {
    std::size_t r3 = modular::rank(m, modular::nth_prime(2));
    return std::max({r1, r2, r3});
  }
  return r1;
}

// Membership of an integer vector in a saturated kernel lattice given by its defining matrix.
inline bool in_kernel(const ExactMatrix& m, const IntVector& v) { return m.annihilates(v); }

// ----- matrices built from the combinatorics -----

struct ClassIndex {
  std::vector<DualityClass> items;
  std::unordered_map<DualityClass, std::size_t> pos;
  void push(const DualityClass& c) {
    pos.emplace(c, items.size());
    items.push_back(c);
  }
};

inline ClassIndex class_index(int k) {
  ClassIndex idx;
  for (const auto& c : enumerate_classes(k)) idx.push(c);
  return idx;
}

// Rows indexed by B_0 ⊔ ... ⊔ B_{k-1} in weight order; row_offsets[k'] marks the start of B_{k'}.
struct AlphaMatrix {
  ExactMatrix matrix;
  ClassIndex columns;
  ClassIndex rows;
  std::vector<std::size_t> row_offsets;
};

inline AlphaMatrix alpha_matrix(int k) {
  if (k < 1) throw domain_error("alpha_matrix requires k >= 1");
  AlphaMatrix am;
  am.columns = class_index(k);
  for (int kp = 0; kp < k; ++kp) {
    am.row_offsets.push_back(am.rows.items.size());
    for (const auto& c : enumerate_classes(kp)) am.rows.push(c);
  }
  am.row_offsets.push_back(am.rows.items.size());
  am.matrix = ExactMatrix(am.rows.items.size(), am.columns.items.size());
  for (std::size_t j = 0; j < am.columns.items.size(); ++j)
    for (const auto& [img, mlt] : alpha_of(am.columns.items[j])) am.matrix(am.rows.pos.at(img), j) += mlt;
  return am;
}

struct DeltaMatrix {
  ExactMatrix matrix;
  std::vector<Composition> rows;
  std::unordered_map<Composition, std::size_t> row_pos;
  ClassIndex columns;
};

inline DeltaMatrix delta_k_matrix(int k) {
  DeltaMatrix dm;
  dm.rows = enumerate(k, Filter::admissible);
  for (std::size_t i = 0; i < dm.rows.size(); ++i) dm.row_pos.emplace(dm.rows[i], i);
  dm.columns = class_index(k);
  dm.matrix = ExactMatrix(dm.rows.size(), dm.columns.items.size());
  for (std::size_t j = 0; j < dm.columns.items.size(); ++j)
    for (const auto& [b, c] : delta_inductive(dm.columns.items[j])) dm.matrix(dm.row_pos.at(b), j) = c;
  return dm;
}

inline ClassLinComb<Integer> to_class_lincomb(const IntVector& v, const ClassIndex& idx) {
  ClassLinComb<Integer> l;
  for (std::size_t j = 0; j < v.size(); ++j) l.add_term(idx.items[j], v[j]);
  return l;
}

inline IntVector from_class_lincomb(const ClassLinComb<Integer>& l, const ClassIndex& idx) {
  IntVector v(idx.items.size(), Integer(0));
  for (const auto& [c, x] : l) v.at(idx.pos.at(c)) = x;
  return v;
}

// M_k built only from M_0 = 0 and the maps α_{k',k}: the lattice of ℓ with α_{k',k}(ℓ) ∈ M_{k'} for all k' < k.
class IntersectionLattices {
 public:
  const KernelBasis& get(int k) {
    while (static_cast<int>(bases_.size()) <= k) extend();
    return bases_[static_cast<std::size_t>(k)];
  }
  const ExactMatrix& defining_matrix(int k) {
    get(k);
    return defining_[static_cast<std::size_t>(k)];
  }

 private:
  // Rows spanning the annihilator of the lattice: ker(P) ∩ Z^n = M_k.
  static ExactMatrix annihilator(const KernelBasis& kb) {
    ExactMatrix kt(kb.vectors.size(), kb.dimension);
    for (std::size_t i = 0; i < kb.vectors.size(); ++i)
      for (std::size_t j = 0; j < kb.dimension; ++j) kt(i, j) = kb.vectors[i][j];
    KernelBasis ann = kernel_basis(kt);
    ExactMatrix p(ann.vectors.size(), kb.dimension);
    for (std::size_t i = 0; i < ann.vectors.size(); ++i)
      for (std::size_t j = 0; j < kb.dimension; ++j) p(i, j) = ann.vectors[i][j];
    return p;
  }

  void extend() {
    const int k = static_cast<int>(bases_.size());
    if (k == 0) {
      KernelBasis kb;
      kb.dimension = 1;
      bases_.push_back(kb);
      defining_.push_back(ExactMatrix{{1}});
      annihilators_.push_back(annihilator(kb));
      return;
    }
    AlphaMatrix am = alpha_matrix(k);
    std::vector<ExactMatrix> blocks;
    for (int kp = 0; kp < k; ++kp) {
      ExactMatrix comp = am.matrix.select_rows(am.row_offsets[static_cast<std::size_t>(kp)],
                                               am.row_offsets[static_cast<std::size_t>(kp) + 1]);
      if (comp.rows() == 0) continue;
      blocks.push_back(annihilators_[static_cast<std::size_t>(kp)] * comp);
    }
    ExactMatrix stacked = ExactMatrix::vstack(blocks, am.matrix.cols());
    KernelBasis kb = kernel_basis(stacked);
    annihilators_.push_back(annihilator(kb));
    defining_.push_back(std::move(stacked));
    bases_.push_back(std::move(kb));
  }

  std::vector<KernelBasis> bases_;
  std::vector<ExactMatrix> defining_;
  std::vector<ExactMatrix> annihilators_;
};

// Block matrix relating the σ-values of weight k to the scaled constant basis.
inline ExactMatrix th7_block_matrix(int k) {
  if (k < 3 || k % 2 == 0) throw domain_error("th7_block_matrix requires odd k >= 3");
  const int h = (k - 1) / 2;
  ExactMatrix m(static_cast<std::size_t>(2 * h), static_cast<std::size_t>(2 * h));
  auto p2 = [](long e) { return pow_int(Integer(2), static_cast<unsigned long>(e)); };
  auto p3 = [](long e) { return pow_int(Integer(3), static_cast<unsigned long>(e)); };
  for (int p = 1; p <= h; ++p)
    for (int q = 1; q <= h; ++q) {
      const auto i = static_cast<std::size_t>(p - 1), j = static_cast<std::size_t>(q - 1), H = static_cast<std::size_t>(h);
      m(i, j) = -binomial(2 * q - 1, 2 * p - 2) * (p2(2 * q - 1) + 1);
      m(i, H + j) = -binomial(2 * q, 2 * p - 2) * (p2(2 * q) - 1) * (p3(2 * q) - 1) +
                    binomial(2 * q, k + 1 - 2 * p) * p2(2 * q + 1) * p3(2 * q);
      m(H + i, j) = binomial(2 * q - 1, k - 2 * p) * p2(2 * q - 1);
      m(H + i, H + j) = -binomial(2 * q, k - 2 * p) * p2(2 * q) * (p3(2 * q) - 1) -
                        Integer(2) * binomial(2 * q, 2 * p - 1) * (p2(2 * q) - 1) * p3(2 * q);
    }
  return m;
}

}  // namespace apery
