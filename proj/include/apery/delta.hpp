#pragma once

#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lincomb.hpp"
#include "stuffle.hpp"

namespace apery {

// Memo for the inductive construction of delta on classes.
class DeltaCache {
 public:
  static DeltaCache& instance() {
    static DeltaCache cache;
    return cache;
  }

  const CompLinComb<Integer>& get(const DualityClass& c) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(c);
      if (it != table_.end()) return it->second;
    }
    CompLinComb<Integer> value = compute(c);
    std::unique_lock lock(mutex_);
    return table_.try_emplace(c, std::move(value)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  CompLinComb<Integer> compute(const DualityClass& c) {
    const int k = c.weight();
    if (k == 0) return CompLinComb<Integer>(Composition{});
    CompLinComb<Integer> image;
    for (const auto& [part, m] : alpha_of(c)) image += get(part).scaled(m);
    return mu_invert(image, k);
  }

  mutable std::shared_mutex mutex_;
  std::unordered_map<DualityClass, CompLinComb<Integer>> table_;
};

inline const CompLinComb<Integer>& delta_inductive(const DualityClass& c) { return DeltaCache::instance().get(c); }

template <class R>
CompLinComb<R> delta_inductive(const ClassLinComb<R>& l) {
  CompLinComb<R> out;
  for (const auto& [cls, c] : l)
    for (const auto& [b, m] : delta_inductive(cls)) out.add_term(b, c * R(m));
  return out;
}

// Closed formula Σ_{i=1}^{k-1} (1 + ε̄_i + ε_{i+1}) ā_{k-i} ⊞ a_i applied to a representative.
inline CompLinComb<Integer> delta_explicit(const Composition& a) {
  if (!a.admissible()) throw domain_error("delta is defined on admissible compositions");
  if (a.empty()) return CompLinComb<Integer>(Composition{});
  const BinaryWord w = to_word(a);
  const std::size_t k = w.size();
  CompLinComb<Integer> out;
  for (std::size_t i = 1; i < k; ++i) {
    BinaryWord suffix(w.begin() + static_cast<long>(i), w.end());
    BinaryWord prefix(w.begin(), w.begin() + static_cast<long>(i));
    Composition ai = from_word(suffix);
    Composition abar = from_word(dual_word(prefix));
    const int coeff = 1 + (1 - w[i - 1]) + w[i];
    for (const auto& [b, m] : boxast(abar, ai)) out.add_term(b, m * coeff);
  }
  return out;
}

inline CompLinComb<Integer> delta_explicit(const DualityClass& c) { return delta_explicit(c.representative()); }

template <class R>
CompLinComb<R> delta_explicit(const ClassLinComb<R>& l) {
  CompLinComb<R> out;
  for (const auto& [cls, c] : l)
    for (const auto& [b, m] : delta_explicit(cls)) out.add_term(b, c * R(m));
  return out;
}

inline CompLinComb<Integer> delta_depth1(int a) {
  if (a < 2) throw domain_error("delta_depth1 requires a >= 2");
  CompLinComb<Integer> out;
  for (int b = 3; b <= a; ++b) out.add_term(concat(Composition{b}, ones(a - b)), 2);
  out.add_term(concat(Composition{2}, ones(a - 2)), 3);
  return out;
}

template <class R>
struct Family {
  ClassLinComb<R> lhs;
  CompLinComb<R> rhs;
};

inline int count_twos(const Composition& b) {
  return static_cast<int>(std::count(b.entries().begin(), b.entries().end(), 2));
}

inline Integer signed_pow(long base, long e) { return pow_int(Integer(base), static_cast<unsigned long>(e)); }

inline Family<Integer> even_alternating(int k) {
  if (k < 0 || k % 2) throw domain_error("even_alternating requires even k >= 0");
  Family<Integer> f;
  for_each_admissible(k, [&](const Composition& a) {
    f.lhs.add_term(DualityClass(a), (a.depth() % 2) ? -1 : 1);
  });
  for (const auto& b : enumerate(k, Filter::even_entries))
    f.rhs.add_term(b, signed_pow(-3, static_cast<long>(b.depth())));
  return f;
}

inline Family<Integer> all_twos(int m) {
  if (m < 0) throw domain_error("all_twos requires m >= 0");
  Family<Integer> f;
  f.lhs.add_term(DualityClass(twos(m)), 1);
  for (const auto& a : all_compositions(2 * m)) {
    const auto& e = a.entries();
    if (!std::all_of(e.begin(), e.end(), [](int x) { return x == 2 || x == 4; })) continue;
    const long s = count_twos(a);
    Integer c = (!a.empty() && a.front() == 2) ? Integer(3) * signed_pow(2, s - 1) : signed_pow(2, s);
    f.rhs.add_term(a, c);
  }
  return f;
}

inline Family<Integer> leshchiner(int k) {
  if (k < 2 || k % 2) throw domain_error("leshchiner requires even k >= 2");
  const int m = k / 2;
  Family<Integer> f;
  for (int b = 2; b <= k; ++b) f.lhs.add_term(DualityClass(concat(Composition{b}, ones(k - b))), (b % 2) ? -1 : 1);
  f.rhs.add_term(twos(m), Integer(3) * signed_pow(-1, m - 1));
  for (int c = 2; c <= m; ++c) f.rhs.add_term(concat(Composition{2 * c}, twos(m - c)), Integer(4) * signed_pow(-1, m - c));
  return f;
}

// δ([a,...,a]) with m copies of a >= 3.
inline Family<Integer> a_repeated(int a, int m) {
  if (a < 3 || m < 1) throw domain_error("a_repeated requires a >= 3 and m >= 1");
  Family<Integer> f;
  f.lhs.add_term(DualityClass(Composition(std::vector<int>(static_cast<std::size_t>(m), a))), 1);
  for (const auto& b : all_compositions(a * m)) {
    const auto& e = b.entries();
    const int b1 = e.front();
    if (!((b1 >= 2 && b1 <= a) || b1 == a + 2)) continue;
    bool ok = true;
    int s = 0;
    std::vector<int> reduced;
    for (std::size_t i = 1; i < e.size(); ++i) {
      const int x = e[i];
      if (x >= a) ++s;
      if (x == 1 || x == 2) reduced.push_back(x);
      else if (x == a + 1) reduced.push_back(1);
      else if (x == a + 2) reduced.push_back(2);
      else if (x != a) ok = false;
    }
    if (!ok) continue;
    const int u = b1 <= a ? a - b1 : a - 2;
    const int v = b1 <= a ? m - 1 - s : m - 2 - s;
    if (v < 0) continue;
    std::vector<int> pattern(static_cast<std::size_t>(u), 1);
    for (int j = 0; j < v; ++j) {
      pattern.push_back(2);
      pattern.insert(pattern.end(), static_cast<std::size_t>(a - 2), 1);
    }
    if (reduced != pattern) continue;
    Integer c = b1 == 2 ? 3 : (b1 <= a ? 2 : 1);
    f.rhs.add_term(b, c);
  }
  return f;
}

inline Family<Integer> height_one(int u, int v) {
  if (u < 1 || v < u) throw domain_error("height_one requires 1 <= u <= v");
  Family<Integer> f;
  f.lhs.add_term(DualityClass(concat(Composition{u + 1}, ones(v - 1))), 1);
  const int k = u + v;
  for (int b1 = 2; b1 <= v + 1 && b1 <= k; ++b1) {
    for (const auto& tail : all_compositions(k - b1)) {
      const auto& e = tail.entries();
      if (!std::all_of(e.begin(), e.end(), [](int x) { return x <= 2; })) continue;
      const int r = 1 + static_cast<int>(e.size());
      if (r < std::max(u, v + 2 - b1)) continue;
      const long s = 2L * r + b1 - u - v - 2;
      Integer c;
      if (b1 == 2) {
        c = Integer(3) * binomial(s, r - u);
      } else {
        c = Integer(2) * binomial(s, r - u);
        if (r >= v) c += Integer(2) * binomial(s, r - v);
      }
      f.rhs.add_term(concat(Composition{b1}, tail), c);
    }
  }
  return f;
}

inline Family<Integer> two_ones_v(int u, int v) {
  if (u < 2 || v < 2) throw domain_error("two_ones_v requires u, v >= 2");
  Family<Integer> f;
  f.lhs.add_term(DualityClass(concat(concat(Composition{2}, ones(u - 2)), Composition{v})), 1);
  for (int b = 3; b <= u; ++b) f.rhs.add_term(concat(concat(Composition{b}, ones(u - b)), Composition{v}), 2);
  for (int b = 3; b <= v; ++b) f.rhs.add_term(concat(concat(Composition{b}, ones(v - b)), Composition{u}), 2);
  f.rhs.add_term(concat(concat(Composition{2}, ones(u - 2)), Composition{v}), 3);
  f.rhs.add_term(concat(concat(Composition{2}, ones(v - 2)), Composition{u}), 3);
  f.rhs.add_term(Composition{u + v}, 1);
  return f;
}

inline IntPoly c_b_poly(const Composition& b) {
  const IntPoly t = IntPoly::t();
  const unsigned long s = static_cast<unsigned long>(count_twos(b));
  const unsigned long d = static_cast<unsigned long>(b.depth());
  IntPoly base = pow_int(t * t - IntPoly(4) * t, d - s);
  if (s % 2) base = -base;
  const IntPoly two_t_1 = IntPoly(2) * t + IntPoly(1);
  if (!b.empty() && b.front() == 2) return base * IntPoly(3) * t * pow_int(two_t_1, s - 1);
  return base * pow_int(two_t_1, s);
}

inline Family<IntPoly> t_family(int k) {
  if (k < 0 || k % 2) throw domain_error("t_family requires even k >= 0");
  Family<IntPoly> f;
  for_each_admissible(k, [&](const Composition& a) {
    IntPoly c = IntPoly::monomial(Integer(1), static_cast<std::size_t>(a.height()));
    if (a.depth() % 2) c = -c;
    f.lhs.add_term(DualityClass(a), c);
  });
  for (const auto& b : enumerate(k, Filter::even_entries)) f.rhs.add_term(b, c_b_poly(b));
  return f;
}

inline Family<Integer> selfdual_t4(int r) {
  if (r < 1) throw domain_error("selfdual_t4 requires r >= 1");
  Family<Integer> f;
  for_each_admissible(2 * r, [&](const Composition& a) {
    Integer c = signed_pow(4, a.height() - 1);
    if (a.depth() % 2) c = -c;
    f.lhs.add_term(DualityClass(a), c);
  });
  f.rhs.add_term(twos(r), signed_pow(-1, r) * signed_pow(3, 2 * r - 1));
  return f;
}

template <class R>
ClassLinComb<R> specialize_lhs(const ClassLinComb<IntPoly>& l, const R& t) {
  return l.template map_coeffs<R>([&](const IntPoly& p) { return p.eval(t); });
}
template <class R>
CompLinComb<R> specialize_rhs(const CompLinComb<IntPoly>& l, const R& t) {
  return l.template map_coeffs<R>([&](const IntPoly& p) { return p.eval(t); });
}

// Δ_k: rows even compositions φ(i), columns self-dual classes ψ(j).
inline std::vector<std::vector<Integer>> delta_submatrix(int k) {
  if (k < 0 || k % 2) throw domain_error("delta_submatrix requires even k >= 0");
  const auto rows = enumerate(k, Filter::even_entries);
  const auto cols = enumerate(k, Filter::self_dual_classes);
  std::vector<std::vector<Integer>> m(rows.size(), std::vector<Integer>(cols.size(), Integer(0)));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const auto& d = delta_inductive(DualityClass(cols[j]));
    for (std::size_t i = 0; i < rows.size(); ++i) m[i][j] = d.coefficient_of(rows[i]);
  }
  return m;
}

}  // namespace apery
