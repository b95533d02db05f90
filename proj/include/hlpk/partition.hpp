// Integer partitions, skew shapes, and strip classification.
//
// Partitions are stored as part lists (weakly decreasing, positive, no
// trailing zeros) and indexed 1-based to match the usual combinatorial
// conventions; accessors return 0 beyond the length.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hlpk {

class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw std::invalid_argument("Partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }

  // 1-based part access; 0 beyond the length.
  int part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<std::size_t>(i - 1)];
  }

  int weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  // Number of parts equal to i.
  int mult(int i) const {
    if (i <= 0) return 0;
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
  }

  // n(lambda) = sum_i (i-1) lambda_i.
  long n_stat() const {
    long n = 0;
    for (int i = 1; i <= length(); ++i) n += static_cast<long>(i - 1) * part(i);
    return n;
  }

  // Column counting; O(length + largest part).
  Partition conjugate() const {
    std::vector<int> cols;
    cols.reserve(static_cast<std::size_t>(part(1)));
    for (int j = 1; j <= part(1); ++j) {
      int count = 0;
      for (int i = 1; i <= length(); ++i) {
        if (part(i) >= j)
          ++count;
        else
          break;
      }
      cols.push_back(count);
    }
    Partition out;
    out.parts_ = std::move(cols);
    return out;
  }

  // Componentwise containment: mu subseteq *this.
  bool contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
      if (mu.part(i) > part(i)) return false;
    return true;
  }

  // Multiset comparison mu <= lambda: every multiplicity no larger.
  bool submultiset_of(const Partition& lam) const {
    std::size_t j = 0;
    for (int p : parts_) {
      while (j < lam.parts_.size() && lam.parts_[j] > p) ++j;
      if (j >= lam.parts_.size() || lam.parts_[j] != p) return false;
      ++j;
    }
    return true;
  }

  // Multiset union (sorted merge of part lists).
  Partition multiset_union(const Partition& o) const {
    std::vector<int> merged;
    merged.reserve(parts_.size() + o.parts_.size());
    std::merge(parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end(),
               std::back_inserter(merged), std::greater<int>());
    Partition out;
    out.parts_ = std::move(merged);
    return out;
  }

  // Multiset difference; requires o to be a submultiset.
  Partition multiset_diff(const Partition& o) const {
    if (!o.submultiset_of(*this))
      throw std::invalid_argument("multiset_diff: not a submultiset");
    std::vector<int> out;
    std::size_t j = 0;
    for (int p : parts_) {
      if (j < o.parts_.size() && o.parts_[j] == p) {
        ++j;
        continue;
      }
      out.push_back(p);
    }
    Partition res;
    res.parts_ = std::move(out);
    return res;
  }

  // Dominance order on partitions of equal weight.
  bool dominates(const Partition& o) const {
    long a = 0, b = 0;
    int n = std::max(length(), o.length());
    for (int i = 1; i <= n; ++i) {
      a += part(i);
      b += o.part(i);
      if (a < b) return false;
    }
    return a == b;
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

  // Canonical total order: weight ascending, then lexicographically
  // descending part lists, so within one weight (n) comes before
  // (n-1,1) before ... before (1^n).
  bool operator<(const Partition& o) const {
    int wa = weight(), wb = o.weight();
    if (wa != wb) return wa < wb;
    return std::lexicographical_compare(o.parts_.begin(), o.parts_.end(),
                                        parts_.begin(), parts_.end());
  }

 private:
  std::vector<int> parts_;
};

// ---------------------------------------------------------------------------
// Skew shapes

struct StripKind {
  bool horizontal = false;
  bool vertical = false;
  bool broken_ribbon = false;
  int ribbon_count = 0;  // meaningful only when broken_ribbon
  int height = 0;
  int width = 0;
};

class SkewShape {
 public:
  SkewShape(Partition outer, Partition inner)
      : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
      throw std::invalid_argument("SkewShape: inner not contained in outer");
    outer_conj_ = outer_.conjugate();
    inner_conj_ = inner_.conjugate();
  }

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  const Partition& outer_conj() const { return outer_conj_; }
  const Partition& inner_conj() const { return inner_conj_; }

  int size() const { return outer_.weight() - inner_.weight(); }

  // Cells {(i,j) : 1 <= i <= len(outer), inner_i < j <= outer_i}.
  std::vector<std::pair<int, int>> cells() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= outer_.length(); ++i)
      for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j)
        out.emplace_back(i, j);
    return out;
  }

 private:
  Partition outer_, inner_;
  Partition outer_conj_, inner_conj_;
};

inline bool is_horizontal_strip(const SkewShape& s) {
  // No 2x1 block: conj columns differ by at most 1.
  for (int j = 1; j <= s.outer().part(1); ++j)
    if (s.outer_conj().part(j) > s.inner_conj().part(j) + 1) return false;
  return true;
}

inline bool is_vertical_strip(const SkewShape& s) {
  for (int i = 1; i <= s.outer().length(); ++i)
    if (s.outer().part(i) > s.inner().part(i) + 1) return false;
  return true;
}

inline bool is_broken_ribbon(const SkewShape& s) {
  // No 2x2 block.
  for (int i = 2; i <= s.outer().length(); ++i)
    if (s.outer().part(i) > s.inner().part(i - 1) + 1) return false;
  return true;
}

// Classifies a skew shape; ribbon statistics (component count, height,
// width) are filled in only for broken ribbons.
inline StripKind strip_kind(const SkewShape& s) {
  StripKind k;
  k.horizontal = is_horizontal_strip(s);
  k.vertical = is_vertical_strip(s);
  k.broken_ribbon = is_broken_ribbon(s);
  if (!k.broken_ribbon) return k;

  auto cs = s.cells();
  std::map<std::pair<int, int>, int> comp;
  for (auto& c : cs) comp[c] = -1;
  int ncomp = 0;
  for (auto& c : cs) {
    if (comp[c] != -1) continue;
    // flood fill over edge-adjacent cells
    std::vector<std::pair<int, int>> stack{c};
    comp[c] = ncomp;
    while (!stack.empty()) {
      auto [i, j] = stack.back();
      stack.pop_back();
      const std::pair<int, int> nbrs[4] = {
          {i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}};
      for (auto& nb : nbrs) {
        auto it = comp.find(nb);
        if (it != comp.end() && it->second == -1) {
          it->second = ncomp;
          stack.push_back(nb);
        }
      }
    }
    ++ncomp;
  }
  k.ribbon_count = ncomp;
  // height/width of a component: rows/columns occupied, minus 1
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> rows, cols;
    for (auto& [cell, id] : comp) {
      if (id != c) continue;
      rows.push_back(cell.first);
      cols.push_back(cell.second);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    k.height += static_cast<int>(rows.size()) - 1;
    k.width += static_cast<int>(cols.size()) - 1;
  }
  return k;
}

// ---------------------------------------------------------------------------
// Enumeration

enum class StripFilter { any, horizontal, vertical };

namespace detail {

inline bool strip_matches(const Partition& outer, const Partition& inner,
                          StripFilter f) {
  if (f == StripFilter::any) return true;
  SkewShape s(outer, inner);
  return f == StripFilter::horizontal ? is_horizontal_strip(s)
                                      : is_vertical_strip(s);
}

}  // namespace detail

// All lambda+ containing lambda with |lambda+/lambda| = r, of the requested
// strip kind, in lexicographically descending order.
inline std::vector<Partition> enumerate_supers(const Partition& lam, int r,
                                               StripFilter f = StripFilter::any) {
  if (r < 0) throw std::invalid_argument("enumerate_supers: r < 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  // Row i takes a value in [lam_i, min(prev, lam_i + budget)];
  // descending iteration yields lex-descending output.
  auto rec = [&](auto&& self, int row, int budget, int prev) -> void {
    int lo = lam.part(row);
    int hi = std::min(prev, lo + budget);
    for (int v = hi; v >= lo; --v) {
      if (row > lam.length() && v == 0) {
        if (budget == 0) out.emplace_back(Partition(prefix));
        return;
      }
      prefix.push_back(v);
      self(self, row + 1, budget - (v - lo), v);
      prefix.pop_back();
    }
  };
  rec(rec, 1, r, lam.part(1) + r);
  if (f != StripFilter::any) {
    std::vector<Partition> kept;
    for (auto& p : out)
      if (detail::strip_matches(p, lam, f)) kept.push_back(p);
    out = std::move(kept);
  }
  return out;
}

// All mu- contained in mu with |mu/mu-| = r, of the requested strip kind,
// in lexicographically descending order.
inline std::vector<Partition> enumerate_subs(const Partition& mu, int r,
                                             StripFilter f = StripFilter::any) {
  if (r < 0) throw std::invalid_argument("enumerate_subs: r < 0");
  std::vector<Partition> out;
  if (r > mu.weight()) return out;
  std::vector<int> suffix_sum(static_cast<std::size_t>(mu.length()) + 2, 0);
  for (int i = mu.length(); i >= 1; --i)
    suffix_sum[static_cast<std::size_t>(i)] =
        suffix_sum[static_cast<std::size_t>(i) + 1] + mu.part(i);
  std::vector<int> prefix;
  auto rec = [&](auto&& self, int row, int budget, int prev) -> void {
    if (row > mu.length()) {
      if (budget == 0) out.emplace_back(Partition(prefix));
      return;
    }
    int hi = std::min(mu.part(row), prev);
    for (int v = hi; v >= 0; --v) {
      int nb = budget - (mu.part(row) - v);
      if (nb < 0) break;  // shrinks further as v decreases
      if (nb > suffix_sum[static_cast<std::size_t>(row) + 1]) continue;
      if (v == 0) {
        // all later rows forced empty
        if (nb == suffix_sum[static_cast<std::size_t>(row) + 1])
          out.emplace_back(Partition(prefix));
        break;
      }
      prefix.push_back(v);
      self(self, row + 1, nb, v);
      prefix.pop_back();
    }
  };
  rec(rec, 1, r, mu.part(1));
  if (f != StripFilter::any) {
    std::vector<Partition> kept;
    for (auto& p : out)
      if (detail::strip_matches(mu, p, f)) kept.push_back(p);
    out = std::move(kept);
  }
  return out;
}

// Per-column removal bounds a_j = outer^c_j - max(inner^c_j, outer^c_{j+1});
// only columns with a_j > 0 are reported. Independent choices 0 <= k_j <= a_j
// biject with the nu between inner and outer for which outer/nu is a
// vertical strip.
inline std::map<int, int> strip_removal_bounds(const SkewShape& s) {
  std::map<int, int> out;
  for (int j = 1; j <= s.outer().part(1); ++j) {
    int a = s.outer_conj().part(j) -
            std::max(s.inner_conj().part(j), s.outer_conj().part(j + 1));
    if (a > 0) out[j] = a;
  }
  return out;
}

// All partitions of n, lexicographically descending: (n), (n-1,1), ...
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n < 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.emplace_back(Partition(prefix));
      return;
    }
    for (int v = std::min(rem, maxpart); v >= 1; --v) {
      prefix.push_back(v);
      self(self, rem - v, v);
      prefix.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// ---------------------------------------------------------------------------
// Text syntax: comma-separated parts, empty partition spelled "-".

inline Partition parse_partition(const std::string& text) {
  if (text == "-") return Partition();
  if (text.empty())
    throw std::invalid_argument("partition: empty string (use '-' for the empty partition)");
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ',') ++pos;
    std::string tok = text.substr(start, pos - start);
    if (tok.empty())
      throw std::invalid_argument("partition: empty component at position " +
                                  std::to_string(start));
    for (char ch : tok)
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("partition: bad integer '" + tok +
                                    "' at position " + std::to_string(start));
    if (tok.size() > 9)
      throw std::invalid_argument("partition: part too large at position " +
                                  std::to_string(start));
    long v = std::stol(tok);
    if (v <= 0)
      throw std::invalid_argument("partition: part must be positive at position " +
                                  std::to_string(start));
    if (!parts.empty() && v > parts.back())
      throw std::invalid_argument("partition: parts not weakly decreasing at position " +
                                  std::to_string(start));
    parts.push_back(static_cast<int>(v));
    if (pos < text.size()) ++pos;  // skip comma
  }
  if (!text.empty() && text.back() == ',')
    throw std::invalid_argument("partition: trailing comma");
  return Partition(std::move(parts));
}

inline std::string to_string(const Partition& p) {
  if (p.empty()) return "-";
  std::string out;
  for (int i = 1; i <= p.length(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(p.part(i));
  }
  return out;
}

}  // namespace hlpk
