#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lincomb.hpp"

namespace apery {

namespace detail {
inline void stuffle_rec(const std::vector<int>& a, std::size_t i, const std::vector<int>& b, std::size_t j,
                        std::vector<int>& prefix, CompLinComb<Integer>& out) {
  if (i == a.size() && j == b.size()) {
    out.add_term(Composition(prefix), 1);
    return;
  }
  if (i < a.size()) {
    prefix.push_back(a[i]);
    stuffle_rec(a, i + 1, b, j, prefix, out);
    prefix.pop_back();
  }
  if (j < b.size()) {
    prefix.push_back(b[j]);
    stuffle_rec(a, i, b, j + 1, prefix, out);
    prefix.pop_back();
  }
  if (i < a.size() && j < b.size()) {
    prefix.push_back(a[i] + b[j]);
    stuffle_rec(a, i + 1, b, j + 1, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace detail

inline CompLinComb<Integer> stuffle(const Composition& a, const Composition& b) {
  CompLinComb<Integer> out;
  std::vector<int> prefix;
  detail::stuffle_rec(a.entries(), 0, b.entries(), 0, prefix, out);
  return out;
}

template <class R>
CompLinComb<R> stuffle(const CompLinComb<R>& x, const CompLinComb<R>& y) {
  CompLinComb<R> out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      for (const auto& [c, m] : stuffle(a, b)) out.add_term(c, ca * cb * R(m));
  return out;
}

// Adds the leading entries and stuffles the tails; a ⊞ ∅ = ∅ ⊞ a = 0 unless both are empty.
inline CompLinComb<Integer> boxast(const Composition& a, const Composition& b) {
  if (a.empty() && b.empty()) return CompLinComb<Integer>(Composition{});
  if (a.empty() || b.empty()) return {};
  Composition ta(std::vector<int>(a.entries().begin() + 1, a.entries().end()));
  Composition tb(std::vector<int>(b.entries().begin() + 1, b.entries().end()));
  const int head = a.front() + b.front();
  CompLinComb<Integer> out;
  for (const auto& [c, m] : stuffle(ta, tb)) out.add_term(concat(Composition{head}, c), m);
  return out;
}

template <class R>
CompLinComb<R> boxast(const CompLinComb<R>& x, const CompLinComb<R>& y) {
  CompLinComb<R> out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      for (const auto& [c, m] : boxast(a, b)) out.add_term(c, ca * cb * R(m));
  return out;
}

// q^{-a_1} Σ_{q>n_2>...>n_r>p} n_2^{-a_2}...n_r^{-a_r}
inline Rational phi(long p, long q, const Composition& a) {
  if (p < 0 || p >= q) throw domain_error("phi requires 0 <= p < q");
  if (a.empty()) throw domain_error("phi is defined on non-empty compositions");
  const auto& e = a.entries();
  // s[n] = sum over chains of the trailing entries whose leading index equals n
  std::vector<Rational> s(static_cast<std::size_t>(q), Rational(0));
  for (long n = p + 1; n < q; ++n) s[static_cast<std::size_t>(n)] = 1;
  if (e.size() == 1) return pow_int(Rational(q), -e[0]);
  for (std::size_t idx = e.size() - 1; idx >= 1; --idx) {
    std::vector<Rational> next(static_cast<std::size_t>(q), Rational(0));
    Rational below(0);
    for (long n = p + 1; n < q; ++n) {
      // chains whose leading index is n at position idx: n^{-e[idx]} times chains strictly below n
      Rational lead = pow_int(Rational(n), -e[idx]) * (idx + 1 == e.size() ? Rational(1) : below);
      if (idx + 1 < e.size()) below += s[static_cast<std::size_t>(n)];
      next[static_cast<std::size_t>(n)] = lead;
    }
    s = std::move(next);
    if (idx == 1) break;
  }
  Rational total(0);
  for (long n = p + 1; n < q; ++n) total += s[static_cast<std::size_t>(n)];
  return canonical(pow_int(Rational(q), -e[0]) * total);
}

template <class R>
Rational phi(long p, long q, const CompLinComb<R>& l) {
  Rational total(0);
  for (const auto& [a, c] : l) total += Rational(c) * phi(p, q, a);
  return canonical(total);
}

}  // namespace apery
