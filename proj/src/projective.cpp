#include "hmaps/projective.hpp"

#include "hmaps/exact.hpp"
#include "hmaps/kernels.hpp"

#include <bit>

namespace hmaps {

void ProjectiveConfig::validate() const {
  if (m < 1 || m > 22) throw DomainError("projective dimension m must lie in [1,22]");
  for (const auto* pts : {&u, &v})
    for (Word p : *pts) {
      if (p == 0) throw DomainError("zero vector is not a projective point");
      if (p >> m) throw DomainError("point has more than m coordinates");
    }
}

std::vector<HyperplaneStats> hyperplane_stats(const ProjectiveConfig& cfg) {
  cfg.validate();
  const auto counts = kernels::hyperplane_counts(cfg.m, cfg.u, cfg.v);
  std::vector<HyperplaneStats> out(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) out[i] = {static_cast<Word>(i + 1), counts[i].z_u, counts[i].z_v};
  return out;
}

int f2_rank(std::vector<Word> vectors) {
  int rank = 0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i] == 0) continue;
    ++rank;
    const Word pivot = vectors[i] & (~vectors[i] + 1);  // lowest set bit
    for (std::size_t j = i + 1; j < vectors.size(); ++j)
      if (vectors[j] & pivot) vectors[j] ^= vectors[i];
  }
  return rank;
}

AbCheck check_ab_condition(const ProjectiveConfig& cfg, int a, int b, AbVariant variant) {
  cfg.validate();
  const int k = cfg.k(), n = cfg.n();
  AbCheck res;
  if (variant == AbVariant::Boxtimes) {
    std::vector<Word> all = cfg.u;
    all.insert(all.end(), cfg.v.begin(), cfg.v.end());
    res.spanning = f2_rank(all) == cfg.m;
  } else {
    res.spanning = f2_rank(cfg.u) == cfg.m && (variant != AbVariant::Map || k == cfg.m);
  }
  if (!res.spanning) return res;
  for (const auto& s : hyperplane_stats(cfg)) {
    if (s.z_v < n - b) continue;
    const bool good = s.z_u >= k - a && (variant != AbVariant::Boxtimes || s.z_u < k);
    if (!good) {
      res.witness = s;
      return res;
    }
  }
  res.ok = true;
  return res;
}

ProjectiveConfig fano_config() { return ProjectiveConfig{3, {1, 2, 4}, {1, 2, 4, 7}}; }

std::vector<Word> generator_matrix(const ProjectiveConfig& cfg) {
  cfg.validate();
  const int k = cfg.k();
  if (k != cfg.m || f2_rank(cfg.u) != k) throw DomainError("generator export needs u to be a basis (k = m)");
  // Solve v_j = sum_i c_ij u_i by elimination on [u | identity].
  std::vector<Word> basis = cfg.u, combo(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = Word{1} << i;
  std::vector<int> pivot_bit(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    for (int r = i; r < k; ++r) {
      if (basis[static_cast<std::size_t>(r)] == 0) continue;
      std::swap(basis[ui], basis[static_cast<std::size_t>(r)]);
      std::swap(combo[ui], combo[static_cast<std::size_t>(r)]);
      break;
    }
    pivot_bit[ui] = std::countr_zero(basis[ui]);
    for (int r = 0; r < k; ++r) {
      const auto ur = static_cast<std::size_t>(r);
      if (r != i && ((basis[ur] >> pivot_bit[ui]) & 1)) {
        basis[ur] ^= basis[ui];
        combo[ur] ^= combo[ui];
      }
    }
  }
  // Now basis[i] is a single bit e_{pivot_bit[i]} = sum over combo[i] of u's.
  std::vector<Word> rows(static_cast<std::size_t>(k), 0);
  for (std::size_t j = 0; j < cfg.v.size(); ++j) {
    Word coeffs = 0;
    for (int i = 0; i < k; ++i)
      if ((cfg.v[j] >> pivot_bit[static_cast<std::size_t>(i)]) & 1) coeffs ^= combo[static_cast<std::size_t>(i)];
    for (int i = 0; i < k; ++i)
      if ((coeffs >> i) & 1) rows[static_cast<std::size_t>(i)] |= Word{1} << j;
  }
  return rows;
}

std::optional<HyperplaneStats> find_bad_hyperplane(const ProjectiveConfig& cfg, int a, int b) {
  cfg.validate();
  std::vector<Word> all = cfg.u;
  all.insert(all.end(), cfg.v.begin(), cfg.v.end());
  if (f2_rank(all) != cfg.m) throw DomainError("points lie in a common hyperplane");
  const int k = cfg.k(), n = cfg.n();
  for (const auto& s : hyperplane_stats(cfg))
    if (s.z_v >= n - b && (s.z_u < k - a || s.z_u == k)) return s;
  return std::nullopt;
}

}  // namespace hmaps
