#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace histcode {

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

}  // namespace detail

// Unified-diff style change count between two texts: number of deleted plus
// added lines, i.e. (|old| - lcs) + (|new| - lcs) over line sequences.
// Common prefix/suffix are trimmed first; the remainder uses LCS via DP,
// which is fine at method-body sizes.
inline int changed_line_count(std::string_view old_text, std::string_view new_text) {
  std::vector<std::string_view> a = detail::split_lines(old_text);
  std::vector<std::string_view> b = detail::split_lines(new_text);

  std::size_t lo = 0;
  while (lo < a.size() && lo < b.size() && a[lo] == b[lo]) ++lo;
  std::size_t hi = 0;
  while (hi + lo < a.size() && hi + lo < b.size() &&
         a[a.size() - 1 - hi] == b[b.size() - 1 - hi]) {
    ++hi;
  }

  const std::size_t n = a.size() - lo - hi;
  const std::size_t m = b.size() - lo - hi;
  if (n == 0 || m == 0) return static_cast<int>(n + m);

  std::vector<int> prev(m + 1, 0), cur(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      cur[j] = a[lo + i - 1] == b[lo + j - 1] ? prev[j - 1] + 1
                                              : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  const int lcs = prev[m];
  return static_cast<int>(n) - lcs + static_cast<int>(m) - lcs;
}

}  // namespace histcode
