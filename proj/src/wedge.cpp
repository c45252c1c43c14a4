#include "eqsing/wedge.hpp"

namespace eqsing {

std::vector<std::array<unsigned, 2>> pair_indices(unsigned n) {
  std::vector<std::array<unsigned, 2>> out;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) out.push_back({i, j});
  return out;
}

std::vector<std::array<unsigned, 3>> triple_indices(unsigned n) {
  std::vector<std::array<unsigned, 3>> out;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j)
      for (unsigned k = j + 1; k < n; ++k) out.push_back({i, j, k});
  return out;
}

std::size_t pair_position(unsigned i, unsigned j, unsigned n) {
  // Pairs starting with r < i occupy sum_{r<i} (n - 1 - r) slots.
  std::size_t before = static_cast<std::size_t>(i) * (2 * n - i - 1) / 2;
  return before + (j - i - 1);
}

}  // namespace eqsing
