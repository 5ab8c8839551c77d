#include "rpys/levenshtein.hpp"

#include <algorithm>
#include <vector>

namespace rpys {

std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::size_t levenshtein_bounded(std::u32string_view a, std::u32string_view b, std::size_t max_distance) {
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (n - m > max_distance) return max_distance + 1;
  if (m == 0) return n;

  const std::size_t k = max_distance;
  const std::size_t big = k + 1;
  std::vector<std::size_t> prev(m + 1, big);
  std::vector<std::size_t> cur(m + 1, big);
  for (std::size_t j = 0; j <= std::min(m, k); ++j) prev[j] = j;

  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t lo = i > k ? i - k : 1;
    const std::size_t hi = std::min(m, i + k);
    cur[0] = i <= k ? i : big;
    if (lo > 1) cur[lo - 1] = big;
    if (hi < m) cur[hi + 1] = big;
    std::size_t row_min = cur[0];
    for (std::size_t j = lo; j <= hi; ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      const std::size_t v = std::min({prev[j] + 1, cur[j - 1] + 1, sub, big});
      cur[j] = v;
      row_min = std::min(row_min, v);
    }
    if (row_min > k) return big;
    std::swap(prev, cur);
  }
  return std::min(prev[m], big);
}

}  // namespace rpys
