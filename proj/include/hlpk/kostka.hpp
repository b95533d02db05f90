// Kostka-Foulkes polynomials via the charge statistic.
//
// Semistandard tableaux of shape lambda and content mu are enumerated as
// chains of horizontal strips; each tableau contributes t^charge(w) where
// w is its reading word (rows read right to left, top row first).

#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "intpoly.hpp"
#include "partition.hpp"

namespace hlpk {

// Charge of a word with partition content. Standard subwords are extracted
// repeatedly: take the rightmost 1, then for each successive letter scan
// rightward from the previous pick, wrapping past the end of the word, and
// take the first occurrence met. Within a subword, letter 1 has index 0 and
// letter v+1 inherits the index of v, plus one exactly when the scan
// wrapped (so indices count laps around the word). Charge is the sum of
// all indices over all extracted subwords.
inline long charge_of_word(std::vector<int> w) {
  long total = 0;
  while (!w.empty()) {
    int maxletter = 0;
    for (int x : w) maxletter = std::max(maxletter, x);
    int n = static_cast<int>(w.size());
    std::vector<int> pick(static_cast<std::size_t>(maxletter), -1);
    int cur = -1;
    for (int v = 1; v <= maxletter; ++v) {
      int found = -1;
      if (v == 1) {
        for (int i = n - 1; i >= 0; --i)
          if (w[static_cast<std::size_t>(i)] == v) {
            found = i;
            break;
          }
      } else {
        for (int i = cur + 1; i < n; ++i)
          if (w[static_cast<std::size_t>(i)] == v) {
            found = i;
            break;
          }
        if (found < 0) {
          for (int i = 0; i < cur; ++i)
            if (w[static_cast<std::size_t>(i)] == v) {
              found = i;
              break;
            }
        }
      }
      if (found < 0)
        throw std::invalid_argument("charge_of_word: content is not a partition");
      pick[static_cast<std::size_t>(v - 1)] = found;
      cur = found;
    }
    long idx = 0;
    for (int v = 2; v <= maxletter; ++v) {
      if (pick[static_cast<std::size_t>(v - 1)] <
          pick[static_cast<std::size_t>(v - 2)])
        ++idx;
      total += idx;
    }
    // remove the extracted subword
    std::vector<bool> drop(w.size(), false);
    for (int p : pick) drop[static_cast<std::size_t>(p)] = true;
    std::vector<int> next;
    next.reserve(w.size() - pick.size());
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!drop[i]) next.push_back(w[i]);
    w = std::move(next);
  }
  return total;
}

namespace detail {

// Visit every semistandard tableau of shape lam and content mu, presented
// as a row-major grid of entries; rows are built up as horizontal strips.
template <typename Visit>
inline void foreach_ssyt(const Partition& lam, const Partition& mu, Visit&& visit) {
  if (lam.weight() != mu.weight()) return;
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(lam.length()));
  for (int i = 1; i <= lam.length(); ++i)
    grid[static_cast<std::size_t>(i - 1)].assign(
        static_cast<std::size_t>(lam.part(i)), 0);
  Partition cur;  // shape filled so far
  auto rec = [&](auto&& self, int letter) -> void {
    if (letter > mu.length()) {
      if (cur == lam) visit(grid);
      return;
    }
    for (const Partition& nxt :
         enumerate_supers(cur, mu.part(letter), StripFilter::horizontal)) {
      if (!lam.contains(nxt)) continue;
      Partition prev = cur;
      for (int i = 1; i <= nxt.length(); ++i)
        for (int j = prev.part(i) + 1; j <= nxt.part(i); ++j)
          grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
              letter;
      cur = nxt;
      self(self, letter + 1);
      cur = prev;
    }
  };
  rec(rec, 1);
}

}  // namespace detail

// Reading word of a tableau grid: each row right to left, top row first.
inline std::vector<int> reading_word(const std::vector<std::vector<int>>& grid) {
  std::vector<int> w;
  for (const auto& row : grid)
    for (std::size_t j = row.size(); j-- > 0;) w.push_back(row[j]);
  return w;
}

// K_{lambda,mu}(t) = sum over SSYT of shape lambda, content mu of t^charge.
inline IntPoly kostka_foulkes_raw(const Partition& lam, const Partition& mu) {
  IntPoly out;
  if (lam.weight() != mu.weight()) return out;
  if (!lam.dominates(mu)) return out;
  detail::foreach_ssyt(lam, mu, [&](const std::vector<std::vector<int>>& grid) {
    out += IntPoly::monomial(1, static_cast<int>(charge_of_word(reading_word(grid))));
  });
  return out;
}

}  // namespace hlpk
