#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace hmaps {

/// Bit-vectors of length <= 63 packed little-endian: coordinate j is bit j.
using Word = std::uint64_t;

inline int weight(Word w) { return std::popcount(w); }
inline int distance(Word a, Word b) { return std::popcount(a ^ b); }
inline Word low_mask(int bits) { return bits >= 64 ? ~Word{0} : (Word{1} << bits) - 1; }

/// Explicit map F_2^k -> F_2^n. images[i] is f(x) for the input x whose
/// bit j is (i >> j) & 1.
struct MapTable {
  int k = 0;
  int n = 0;
  std::vector<Word> images;

  MapTable() = default;
  /// Throws DomainError unless images.size() == 2^k and every image fits in n bits.
  MapTable(int k_, int n_, std::vector<Word> images_);

  Word operator()(Word x) const { return images[static_cast<std::size_t>(x)]; }
  std::size_t size() const { return images.size(); }
};

}  // namespace hmaps
