#pragma once

#include <optional>

#include "spectile/tileset.hpp"

namespace spectile {

/**
 * Streams every TileSet with n elements contained in {0..m-1} (0 always
 * included) in lexicographic order of the element vector. Exactly
 * C(m-1, n-1) sets are produced.
 */
class TileSetEnumerator {
 public:
  TileSetEnumerator(int n, int m);  // rejects n < 1 and n > m

  std::optional<TileSet> next();

  static unsigned long long count(int n, int m);

 private:
  int n_;
  int m_;
  std::vector<long long> comb_;  // the nonzero elements
  bool fresh_ = true;
  bool done_ = false;
};

}  // namespace spectile
