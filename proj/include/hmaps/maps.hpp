#pragma once

// Explicit maps F_2^k -> F_2^n: standard constructions, the exhaustive
// (a,b)-map verifier, violating-pair counts and distance profiles.
// a and b are integer distances; an (a,b)-map sends every pair at distance
// > a to a pair at distance > b.

#include "hmaps/map_table.hpp"

#include <optional>
#include <vector>

namespace hmaps {

/// x concatenated rho times; n = rho * k.
MapTable repetition_map(int k, int rho);

/// Majority of each 3-bit block; n = k / 3.
MapTable majority_map(int k);

/// Cover F_2^k by radius-`radius` balls (greedy unless `cover` is given) and
/// send each cell to the matching codeword. The result is a (2*radius, b)-map.
/// Throws DomainError if the cover misses a point, the codebook has fewer
/// words than cover cells, or two codewords are within distance b.
MapTable separation_map(int k, int n, int radius, const std::vector<Word>& codebook, int b,
                        std::optional<std::vector<Word>> cover = std::nullopt);

/// Greedy cover: repeatedly the point covering most uncovered points (lowest
/// index on ties) until every point is within `radius` of a centre.
std::vector<Word> greedy_cover(int k, int radius);

/// f(x) = xG; rows[i] is row i of G packed as an n-bit word.
MapTable linear_map(const std::vector<Word>& rows, int n);

/// Linear maps only need weights: |x| > a implies |xG| > b.
bool verify_linear(const std::vector<Word>& rows, int n, int a, int b);

bool verify_map(const MapTable& f, int a, int b);

/// Unordered pairs of S (default all of F_2^k) at distance > a whose images
/// are within distance b.
std::uint64_t count_violating_pairs(const MapTable& f, int a, int b,
                                    const std::optional<std::vector<Word>>& subset = std::nullopt);

struct DistanceProfile {
  int k = 0;
  int n = 0;
  /// profile[a], a = 0..k; kInfinite when no pair is farther than a.
  std::vector<int> profile;
  static constexpr int kInfinite = -1;

  bool is_infinite(int a) const { return profile.at(static_cast<std::size_t>(a)) == kInfinite; }
  /// profile(a) > b, treating infinity as larger than everything.
  bool exceeds(int a, int b) const;
};

DistanceProfile distance_profile(const MapTable& f);

}  // namespace hmaps
