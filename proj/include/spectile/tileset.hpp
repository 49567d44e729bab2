#pragma once

#include <string>
#include <vector>

namespace spectile {

/**
 * A finite set of non-negative integers, normalized to contain 0, kept
 * sorted ascending. size() is the number of translates N, span() is
 * max element + 1.
 */
class TileSet {
 public:
  explicit TileSet(std::vector<long long> elements);

  const std::vector<long long>& elements() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  long long max_element() const { return elems_.back(); }
  long long span() const { return elems_.back() + 1; }

  // {k*a : a in this}, k >= 1.
  TileSet scaled(long long k) const;

  bool operator==(const TileSet& o) const { return elems_ == o.elems_; }
  std::string str() const;

 private:
  std::vector<long long> elems_;
};

}  // namespace spectile
