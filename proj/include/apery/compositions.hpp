#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace apery {

class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int max_weight = 63;

using BinaryWord = std::vector<std::uint8_t>;

class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> e) : entries_(e) { validate(); }
  explicit Composition(std::vector<int> e) : entries_(std::move(e)) { validate(); }

  const std::vector<int>& entries() const noexcept { return entries_; }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::size_t depth() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  int weight() const noexcept { return std::accumulate(entries_.begin(), entries_.end(), 0); }
  int height() const noexcept {
    return static_cast<int>(std::count_if(entries_.begin(), entries_.end(), [](int x) { return x >= 2; }));
  }
  bool admissible() const noexcept { return entries_.empty() || entries_.front() >= 2; }
  int front() const { return entries_.front(); }
  int back() const { return entries_.back(); }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.entries_ <=> b.entries_; }

 private:
  void validate() const {
    long w = 0;
    for (int x : entries_) {
      if (x < 1) throw domain_error("composition entries must be positive");
      w += x;
    }
    if (w > max_weight) throw domain_error("composition weight exceeds 63");
  }
  std::vector<int> entries_;
};

// Weight ascending, then descending lexicographic: (4) < (3,1) < (2,2) < (2,1,1).
struct canonical_less {
  bool operator()(const Composition& a, const Composition& b) const {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return a.entries() > b.entries();
  }
};

inline BinaryWord to_word(const Composition& a) {
  BinaryWord w;
  w.reserve(static_cast<std::size_t>(a.weight()));
  for (int x : a.entries()) {
    w.insert(w.end(), static_cast<std::size_t>(x - 1), 0);
    w.push_back(1);
  }
  return w;
}

inline Composition from_word(const BinaryWord& w) {
  if (!w.empty() && w.back() != 1) throw domain_error("binary word must end in 1");
  std::vector<int> e;
  int run = 1;
  for (auto bit : w) {
    if (bit > 1) throw domain_error("binary word entries must be 0 or 1");
    if (bit == 1) {
      e.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  return Composition(std::move(e));
}

inline BinaryWord dual_word(const BinaryWord& w) {
  BinaryWord d(w.rbegin(), w.rend());
  for (auto& b : d) b ^= 1;
  return d;
}

inline Composition dual(const Composition& a) {
  if (!a.admissible()) throw domain_error("dual requires an admissible composition");
  return from_word(dual_word(to_word(a)));
}

inline bool is_self_dual(const Composition& a) { return dual(a) == a; }

inline Composition init_part(const Composition& a) {
  if (a.empty()) return a;
  std::vector<int> e(a.entries().begin(), a.entries().end() - 1);
  return Composition(std::move(e));
}

inline Composition fin_part(const Composition& a) {
  if (a.empty()) return a;
  const auto& e = a.entries();
  if (e[0] >= 3) {
    std::vector<int> f = e;
    f[0] -= 1;
    return Composition(std::move(f));
  }
  if (e[0] != 2) throw domain_error("fin_part requires an admissible composition");
  auto it = std::find_if(e.begin() + 1, e.end(), [](int x) { return x >= 2; });
  return Composition(std::vector<int>(it, e.end()));
}

inline Composition mid_part(const Composition& a) { return init_part(fin_part(a)); }

class DualityClass {
 public:
  DualityClass() = default;
  explicit DualityClass(const Composition& a) {
    if (!a.admissible()) throw domain_error("duality classes contain admissible compositions only");
    Composition d = dual(a);
    rep_ = (a.entries() >= d.entries()) ? a : d;
  }
  const Composition& representative() const noexcept { return rep_; }
  int weight() const noexcept { return rep_.weight(); }
  bool self_dual() const { return dual(rep_) == rep_; }

  friend bool operator==(const DualityClass&, const DualityClass&) = default;
  friend auto operator<=>(const DualityClass& a, const DualityClass& b) { return a.rep_ <=> b.rep_; }

 private:
  Composition rep_;
};

struct canonical_class_less {
  bool operator()(const DualityClass& a, const DualityClass& b) const {
    return canonical_less{}(a.representative(), b.representative());
  }
};

enum class Filter { admissible, classes, even_entries, self_dual_classes, entries_ge_2, entries_le_2, entries_in_2_3 };

// Visits A_k in descending lexicographic order.
inline void for_each_admissible(int k, const std::function<void(const Composition&)>& f) {
  if (k < 0) throw domain_error("weight must be non-negative");
  if (k > max_weight) throw domain_error("weight exceeds 63");
  if (k == 0) {
    f(Composition{});
    return;
  }
  if (k == 1) return;
  const int mid = k - 2;
  const std::uint64_t count = std::uint64_t{1} << mid;
  BinaryWord w(static_cast<std::size_t>(k), 0);
  w.back() = 1;
  for (std::uint64_t x = 0; x < count; ++x) {
    for (int j = 0; j < mid; ++j) w[static_cast<std::size_t>(1 + j)] = (x >> (mid - 1 - j)) & 1U;
    f(from_word(w));
  }
}

namespace detail {
inline int half_bits(int k) { return k >= 2 ? k / 2 - 1 : 0; }

inline BinaryWord bits_of(std::uint64_t i, int len) {
  BinaryWord w(static_cast<std::size_t>(len));
  for (int j = 0; j < len; ++j) w[static_cast<std::size_t>(j)] = (i >> (len - 1 - j)) & 1U;
  return w;
}
}  // namespace detail

// i-th self-dual class of weight k (word w(i) followed by its dual).
inline Composition self_dual_indexed(int k, std::uint64_t i) {
  if (k % 2 != 0) throw domain_error("self-dual classes exist in even weight only");
  BinaryWord w = detail::bits_of(i, k / 2);
  BinaryWord d = dual_word(w);
  w.insert(w.end(), d.begin(), d.end());
  return from_word(w);
}

// i-th composition of weight k with even entries: the doubled composition of dual(w(i)).
inline Composition even_indexed(int k, std::uint64_t i) {
  if (k % 2 != 0) throw domain_error("even compositions exist in even weight only");
  Composition b = from_word(dual_word(detail::bits_of(i, k / 2)));
  std::vector<int> e = b.entries();
  for (auto& x : e) x *= 2;
  return Composition(std::move(e));
}

inline std::vector<Composition> enumerate(int k, Filter filter) {
  std::vector<Composition> out;
  switch (filter) {
    case Filter::even_entries:
    case Filter::self_dual_classes: {
      if (k % 2 != 0) return out;
      if (k > max_weight) throw domain_error("weight exceeds 63");
      const std::uint64_t n = std::uint64_t{1} << detail::half_bits(k);
      for (std::uint64_t i = 0; i < n; ++i)
        out.push_back(filter == Filter::even_entries ? even_indexed(k, i) : self_dual_indexed(k, i));
      return out;
    }
    case Filter::classes:
      for_each_admissible(k, [&](const Composition& a) {
        if (DualityClass(a).representative() == a) out.push_back(a);
      });
      return out;
    default:
      break;
  }
  for_each_admissible(k, [&](const Composition& a) {
    const auto& e = a.entries();
    bool keep = true;
    switch (filter) {
      case Filter::entries_ge_2:
        keep = std::all_of(e.begin(), e.end(), [](int x) { return x >= 2; });
        break;
      case Filter::entries_le_2:
        keep = std::all_of(e.begin(), e.end(), [](int x) { return x <= 2; });
        break;
      case Filter::entries_in_2_3:
        keep = std::all_of(e.begin(), e.end(), [](int x) { return x == 2 || x == 3; });
        break;
      default:
        break;
    }
    if (keep) out.push_back(a);
  });
  return out;
}

inline std::vector<DualityClass> enumerate_classes(int k) {
  std::vector<DualityClass> out;
  for (const auto& a : enumerate(k, Filter::classes)) out.emplace_back(a);
  return out;
}

// Every composition (not necessarily admissible) of weight k.
inline std::vector<Composition> all_compositions(int k) {
  std::vector<Composition> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  const std::uint64_t n = std::uint64_t{1} << (k - 1);
  for (std::uint64_t x = 0; x < n; ++x) {
    BinaryWord w = detail::bits_of(x, k - 1);
    w.push_back(1);
    out.push_back(from_word(w));
  }
  return out;
}

inline std::string to_string(const Composition& a) {
  if (a.empty()) return "()";
  std::string s;
  for (std::size_t i = 0; i < a.depth(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  return s;
}

inline std::string to_string(const DualityClass& c) {
  std::string s = "[";
  if (!c.representative().empty()) s += to_string(c.representative());
  return s + "]";
}

inline Composition parse_composition(std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '(' || v.front() == '[')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == ')' || v.back() == ']')) v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  std::vector<int> e;
  if (text.empty()) return Composition{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string item(text.substr(pos, next - pos));
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    if (item.empty() || item.size() > 6 || item.find_first_not_of("0123456789") != std::string::npos)
      throw domain_error("cannot parse composition: " + std::string(text));
    e.push_back(std::stoi(item));
    pos = next + 1;
  }
  return Composition(std::move(e));
}

inline Composition concat(const Composition& a, const Composition& b) {
  std::vector<int> e = a.entries();
  e.insert(e.end(), b.entries().begin(), b.entries().end());
  return Composition(std::move(e));
}

inline Composition ones(int n) { return Composition(std::vector<int>(static_cast<std::size_t>(n), 1)); }
inline Composition twos(int n) { return Composition(std::vector<int>(static_cast<std::size_t>(n), 2)); }

}  // namespace apery

template <>
struct std::hash<apery::Composition> {
  std::size_t operator()(const apery::Composition& a) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : a.entries()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

template <>
struct std::hash<apery::DualityClass> {
  std::size_t operator()(const apery::DualityClass& c) const noexcept {
    return std::hash<apery::Composition>{}(c.representative());
  }
};
