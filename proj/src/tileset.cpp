#include "spectile/tileset.hpp"

#include <algorithm>
#include <stdexcept>

namespace spectile {

TileSet::TileSet(std::vector<long long> elements) : elems_(std::move(elements)) {
  if (elems_.empty()) throw std::invalid_argument("TileSet: empty set");
  std::sort(elems_.begin(), elems_.end());
  if (elems_.front() < 0) throw std::invalid_argument("TileSet: negative element");
  if (elems_.front() != 0) throw std::invalid_argument("TileSet: must contain 0");
  if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
    throw std::invalid_argument("TileSet: duplicate element");
}

TileSet TileSet::scaled(long long k) const {
  if (k < 1) throw std::invalid_argument("TileSet::scaled: factor must be >= 1");
  std::vector<long long> out;
  out.reserve(elems_.size());
  for (long long a : elems_) out.push_back(a * k);
  return TileSet(std::move(out));
}

std::string TileSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(elems_[i]);
  }
  s += '}';
  return s;
}

}  // namespace spectile
