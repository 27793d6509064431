#pragma once

// Point configurations u_1..u_k, v_1..v_n in P^{m-1}(F_2). Points and
// hyperplanes are nonzero m-bit words (bit j = coordinate j); hyperplane w
// contains p iff <w,p> = 0. Z_u, Z_v count contained u- and v-points.

#include "hmaps/map_table.hpp"

#include <optional>
#include <vector>

namespace hmaps {

struct ProjectiveConfig {
  int m = 0;
  std::vector<Word> u;
  std::vector<Word> v;

  int k() const { return static_cast<int>(u.size()); }
  int n() const { return static_cast<int>(v.size()); }
  /// Throws DomainError on zero points, points wider than m bits or m outside [1,22].
  void validate() const;
};

struct HyperplaneStats {
  Word w = 0;
  int z_u = 0;
  int z_v = 0;
};

/// All 2^m - 1 hyperplanes, in increasing w.
std::vector<HyperplaneStats> hyperplane_stats(const ProjectiveConfig& cfg);

/// Rank over F_2 of a list of words.
int f2_rank(std::vector<Word> vectors);

enum class AbVariant {
  Boxtimes,  // all points span; Z_v >= n-b implies k > Z_u >= k-a
  Ltimes,    // u spans;         Z_v >= n-b implies Z_u >= k-a
  Map,       // ltimes and k = m
};

struct AbCheck {
  bool ok = false;
  bool spanning = false;                  // the variant's spanning precondition
  std::optional<HyperplaneStats> witness;  // smallest failing w
};

AbCheck check_ab_condition(const ProjectiveConfig& cfg, int a, int b, AbVariant variant);

/// u = {e1,e2,e3}, v = {e1,e2,e3,e1+e2+e3}, m = 3.
ProjectiveConfig fano_config();

/// Needs k = m and u a basis: row i of the k x n generator holds the
/// u_i-coordinates of v_1..v_n, so f(x) = xG realises the configuration.
std::vector<Word> generator_matrix(const ProjectiveConfig& cfg);

/// Smallest w with Z_v >= n-b and (Z_u < k-a or Z_u = k). Throws DomainError
/// when u and v together do not span F_2^m.
std::optional<HyperplaneStats> find_bad_hyperplane(const ProjectiveConfig& cfg, int a, int b);

}  // namespace hmaps
