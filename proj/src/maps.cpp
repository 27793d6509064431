#include "hmaps/maps.hpp"

#include "hmaps/exact.hpp"
#include "hmaps/kernels.hpp"

#include <algorithm>
#include <numeric>

namespace hmaps {

MapTable::MapTable(int k_, int n_, std::vector<Word> images_) : k(k_), n(n_), images(std::move(images_)) {
  if (k < 0 || k > 30) throw DomainError("map input length k must lie in [0,30]");
  if (n < 0 || n > 63) throw DomainError("map output length n must lie in [0,63]");
  if (images.size() != (std::size_t{1} << k)) throw DomainError("map table must have 2^k images");
  const Word mask = low_mask(n);
  for (Word w : images)
    if (w & ~mask) throw DomainError("map image wider than n bits");
}

namespace {

void check_pair_scan(int k) {
  if (k > 14) throw DomainError("exhaustive pair scans are limited to k <= 14");
}

std::vector<Word> full_domain(int k) {
  std::vector<Word> d(std::size_t{1} << k);
  std::iota(d.begin(), d.end(), Word{0});
  return d;
}

}  // namespace

MapTable repetition_map(int k, int rho) {
  if (k < 0 || rho < 1 || static_cast<long>(k) * rho > 63)
    throw DomainError("repetition map needs k >= 0, rho >= 1, rho*k <= 63");
  std::vector<Word> img(std::size_t{1} << k);
  for (Word x = 0; x < img.size(); ++x) {
    Word y = 0;
    for (int r = 0; r < rho; ++r) y |= x << (r * k);
    img[x] = y;
  }
  return MapTable(k, rho * k, std::move(img));
}

MapTable majority_map(int k) {
  if (k < 0 || k % 3 != 0) throw DomainError("majority map needs k divisible by 3");
  const int n = k / 3;
  std::vector<Word> img(std::size_t{1} << k);
  for (Word x = 0; x < img.size(); ++x) {
    Word y = 0;
    for (int i = 0; i < n; ++i)
      if (weight((x >> (3 * i)) & 7) >= 2) y |= Word{1} << i;
    img[x] = y;
  }
  return MapTable(k, n, std::move(img));
}

std::vector<Word> greedy_cover(int k, int radius) {
  if (k < 0 || k > 14) throw DomainError("cover construction limited to k <= 14");
  if (radius < 0) throw DomainError("cover radius must be nonnegative");
  const std::size_t N = std::size_t{1} << k;
  std::vector<Word> ball;
  for (Word z = 0; z < N; ++z)
    if (weight(z) <= radius) ball.push_back(z);
  std::vector<std::uint8_t> covered(N, 0);
  std::vector<std::size_t> gain(N, ball.size());
  std::vector<Word> centres;
  std::size_t left = N;
  while (left > 0) {
    const auto best = static_cast<Word>(std::max_element(gain.begin(), gain.end()) - gain.begin());
    centres.push_back(best);
    for (Word z : ball) {
      const Word p = best ^ z;
      if (covered[p]) continue;
      covered[p] = 1;
      --left;
      for (Word z2 : ball) --gain[p ^ z2];
    }
  }
  return centres;
}

MapTable separation_map(int k, int n, int radius, const std::vector<Word>& codebook, int b,
                        std::optional<std::vector<Word>> cover) {
  if (k < 0 || k > 14) throw DomainError("separation map limited to k <= 14");
  if (n < 0 || n > 63) throw DomainError("output length must lie in [0,63]");
  if (radius < 0) throw DomainError("cover radius must be nonnegative");
  const Word mask = low_mask(n);
  for (std::size_t i = 0; i < codebook.size(); ++i) {
    if (codebook[i] & ~mask) throw DomainError("codeword wider than n bits");
    for (std::size_t j = i + 1; j < codebook.size(); ++j)
      if (distance(codebook[i], codebook[j]) <= b)
        throw DomainError("codewords " + std::to_string(i) + " and " + std::to_string(j) +
                          " are within distance b");
  }
  const std::vector<Word> centres = cover ? *cover : greedy_cover(k, radius);
  if (centres.size() > codebook.size()) throw DomainError("codebook smaller than the cover");
  for (Word c : centres)
    if (c >= (Word{1} << k)) throw DomainError("cover centre outside F_2^k");

  std::vector<Word> img(std::size_t{1} << k);
  for (Word x = 0; x < img.size(); ++x) {
    auto it = std::find_if(centres.begin(), centres.end(), [&](Word c) { return distance(c, x) <= radius; });
    if (it == centres.end()) throw DomainError("cover misses a point of F_2^k");
    img[x] = codebook[static_cast<std::size_t>(it - centres.begin())];
  }
  return MapTable(k, n, std::move(img));
}

MapTable linear_map(const std::vector<Word>& rows, int n) {
  const int k = static_cast<int>(rows.size());
  if (k > 30) throw DomainError("generator has too many rows");
  std::vector<Word> img(std::size_t{1} << k, 0);
  // f(x) = f(x minus its lowest bit) ^ row of that bit.
  for (Word x = 1; x < img.size(); ++x)
    img[x] = img[x & (x - 1)] ^ rows[static_cast<std::size_t>(std::countr_zero(x))];
  return MapTable(k, n, std::move(img));
}

bool verify_linear(const std::vector<Word>& rows, int n, int a, int b) {
  const MapTable f = linear_map(rows, n);
  for (Word x = 1; x < f.size(); ++x)
    if (weight(x) > a && weight(f(x)) <= b) return false;
  return true;
}

bool verify_map(const MapTable& f, int a, int b) { return count_violating_pairs(f, a, b) == 0; }

std::uint64_t count_violating_pairs(const MapTable& f, int a, int b,
                                    const std::optional<std::vector<Word>>& subset) {
  check_pair_scan(f.k);
  if (!subset) return kernels::count_violating_pairs(f, a, b, full_domain(f.k));
  std::vector<Word> s = *subset;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (Word x : s)
    if (x >= f.size()) throw DomainError("subset element outside F_2^k");
  return kernels::count_violating_pairs(f, a, b, s);
}

bool DistanceProfile::exceeds(int a, int b) const {
  if (a < 0) a = 0;
  if (a >= k) return true;
  return is_infinite(a) || profile[static_cast<std::size_t>(a)] > b;
}

DistanceProfile distance_profile(const MapTable& f) {
  if (f.k > 12) throw DomainError("distance profile limited to k <= 12");
  const auto by_w = kernels::min_image_distance_by_input_distance(f);
  DistanceProfile p{f.k, f.n, std::vector<int>(static_cast<std::size_t>(f.k) + 1, DistanceProfile::kInfinite)};
  int run = kernels::kNoPair;
  for (int a = f.k; a >= 0; --a) {
    p.profile[static_cast<std::size_t>(a)] = run == kernels::kNoPair ? DistanceProfile::kInfinite : run;
    run = std::min(run, by_w[static_cast<std::size_t>(a)]);
  }
  return p;
}

}  // namespace hmaps
