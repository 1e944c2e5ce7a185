#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "compositions.hpp"
#include "ring.hpp"

namespace apery {

template <class B>
struct basis_order;
template <>
struct basis_order<Composition> {
  using type = canonical_less;
};
template <>
struct basis_order<DualityClass> {
  using type = canonical_class_less;
};

inline int basis_weight(const Composition& a) { return a.weight(); }
inline int basis_weight(const DualityClass& c) { return c.weight(); }

template <class B, class R>
class LinComb {
 public:
  using map_type = std::map<B, R, typename basis_order<B>::type>;

  LinComb() = default;
  LinComb(const B& b, const R& c = R(1)) { add_term(b, c); }  // NOLINT
  LinComb(std::initializer_list<std::pair<B, R>> terms) {
    for (const auto& [b, c] : terms) add_term(b, c);
  }

  const map_type& terms() const noexcept { return terms_; }
  bool zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  R coefficient_of(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? R(0) : it->second;
  }

  std::vector<B> support() const {
    std::vector<B> s;
    for (const auto& kv : terms_) s.push_back(kv.first);
    return s;
  }

  void add_term(const B& b, const R& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const R& s, const LinComb& a) { return a.scaled(s); }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  LinComb scaled(const R& s) const {
    LinComb r;
    if (is_zero(s)) return r;
    for (const auto& [b, c] : terms_) r.add_term(b, s * c);
    return r;
  }

  bool homogeneous(int k) const {
    for (const auto& kv : terms_)
      if (basis_weight(kv.first) != k) return false;
    return true;
  }

  std::map<int, LinComb> grade_split() const {
    std::map<int, LinComb> parts;
    for (const auto& [b, c] : terms_) parts[basis_weight(b)].add_term(b, c);
    return parts;
  }

  R coefficient_sum() const {
    R s(0);
    for (const auto& kv : terms_) s += kv.second;
    return s;
  }

  template <class R2, class F>
  LinComb<B, R2> map_coeffs(F f) const {
    LinComb<B, R2> r;
    for (const auto& [b, c] : terms_) r.add_term(b, f(c));
    return r;
  }

 private:
  map_type terms_;
};

template <class R>
using CompLinComb = LinComb<Composition, R>;
template <class R>
using ClassLinComb = LinComb<DualityClass, R>;

template <class R>
CompLinComb<R> mu(const CompLinComb<R>& l) {
  CompLinComb<R> r;
  for (const auto& [a, c] : l) {
    if (a.empty()) throw domain_error("mu is undefined on the empty composition");
    r.add_term(init_part(a), c);
  }
  return r;
}

// Unique weight-k combination whose image under mu is the target.
template <class R>
CompLinComb<R> mu_invert(const CompLinComb<R>& target, int k) {
  if (k < 2) throw domain_error("mu_k is bijective for k >= 2 only");
  CompLinComb<R> r;
  for (const auto& [b, c] : target) {
    const int kb = b.weight();
    if (kb >= k || !b.admissible())
      throw domain_error("target has no preimage under mu_" + std::to_string(k) + ": " + to_string(b));
    Composition a = b.empty() ? Composition{k} : concat(b, Composition{k - kb});
    r.add_term(a, c);
  }
  return r;
}

inline ClassLinComb<Integer> alpha_of(const DualityClass& c) {
  const Composition& a = c.representative();
  if (a.empty()) throw domain_error("alpha is undefined on the empty class");
  ClassLinComb<Integer> r;
  r.add_term(DualityClass(init_part(a)), 1);
  r.add_term(DualityClass(mid_part(a)), 1);
  r.add_term(DualityClass(fin_part(a)), 1);
  return r;
}

template <class R>
ClassLinComb<R> alpha(const ClassLinComb<R>& l) {
  ClassLinComb<R> r;
  for (const auto& [cls, c] : l)
    for (const auto& [img, m] : alpha_of(cls)) r.add_term(img, c * R(m));
  return r;
}

template <class R>
ClassLinComb<R> class_projection(const CompLinComb<R>& l) {
  ClassLinComb<R> r;
  for (const auto& [a, c] : l) r.add_term(DualityClass(a), c);
  return r;
}

}  // namespace apery
