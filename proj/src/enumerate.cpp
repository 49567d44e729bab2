#include "spectile/enumerate.hpp"

#include <stdexcept>

namespace spectile {

TileSetEnumerator::TileSetEnumerator(int n, int m) : n_(n), m_(m) {
  if (n < 1) throw std::invalid_argument("TileSetEnumerator: need n >= 1");
  if (n > m) throw std::invalid_argument("TileSetEnumerator: need n <= m");
  comb_.reserve(static_cast<std::size_t>(n) - 1);
  for (int i = 1; i < n; ++i) comb_.push_back(i);
}

std::optional<TileSet> TileSetEnumerator::next() {
  if (done_) return std::nullopt;
  if (!fresh_) {
    // Advance the (n-1)-combination of {1..m-1} in lexicographic order.
    const int k = n_ - 1;
    int i = k - 1;
    while (i >= 0 && comb_[static_cast<std::size_t>(i)] == m_ - k + i) --i;
    if (i < 0) {
      done_ = true;
      return std::nullopt;
    }
    ++comb_[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      comb_[static_cast<std::size_t>(j)] = comb_[static_cast<std::size_t>(j - 1)] + 1;
  }
  fresh_ = false;
  if (n_ == 1) done_ = true;

  std::vector<long long> elems{0};
  elems.insert(elems.end(), comb_.begin(), comb_.end());
  return TileSet(std::move(elems));
}

unsigned long long TileSetEnumerator::count(int n, int m) {
  if (n < 1 || n > m) throw std::invalid_argument("TileSetEnumerator::count: need 1 <= n <= m");
  // C(m-1, n-1)
  unsigned long long c = 1;
  const int top = m - 1;
  const int k = n - 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<unsigned long long>(top - k + i) / i;
  return c;
}

}  // namespace spectile
