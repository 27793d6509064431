#include "hmaps/exact.hpp"

#include <map>
#include <memory>

namespace hmaps {

Rat make_rat(const Int& p, const Int& q) {
  if (q == 0) throw DomainError("rational with zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Int parse_int(const std::string& s) {
  std::string body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  if (!all_digits(body)) throw DomainError("not an integer: '" + s + "'");
  Int v(body, 10);
  return neg ? Int(-v) : v;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  if (auto slash = text.find('/'); slash != std::string::npos) {
    return make_rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole = whole.substr(1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || (!frac.empty() && !all_digits(frac)))
      throw DomainError("not a number: '" + text + "'");
    Int den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Int num = Int(whole, 10) * den + (frac.empty() ? Int(0) : Int(frac, 10));
    return make_rat(neg ? Int(-num) : num, den);
  }
  return make_rat(parse_int(text));
}

std::string to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Int pow2(unsigned e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

Int binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BinomialTable::BinomialTable(int n) : n_(n), rows_(static_cast<std::size_t>(n) + 1) {
  if (n < 0) throw DomainError("BinomialTable: negative size");
  for (int m = 0; m <= n; ++m) {
    auto& row = rows_[m];
    row.resize(static_cast<std::size_t>(m) + 1);
    row[0] = 1;
    row[m] = 1;
    for (int k = 1; k < m; ++k) row[k] = rows_[m - 1][k - 1] + rows_[m - 1][k];
  }
}

const Int& BinomialTable::operator()(int m, int k) const {
  if (m < 0 || m > n_ || k < 0 || k > m) throw DomainError("BinomialTable: index out of range");
  return rows_[m][k];
}

Int krawtchouk(int n, int j, int x) {
  if (n < 0 || j < 0 || j > n || x < 0 || x > n)
    throw DomainError("krawtchouk: need 0 <= j,x <= n");
  Int sum = 0;
  for (int k = 0; k <= j; ++k) {
    Int term = binomial(x, k) * binomial(n - x, j - k);
    if (k % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

KrawtchoukTable::KrawtchoukTable(int n) : n_(n) {
  if (n < 0) throw DomainError("KrawtchoukTable: negative n");
  const auto N = static_cast<std::size_t>(n) + 1;
  values_.resize(N * N);
  BinomialTable c(n);
  auto C = [&](int m, int k) -> Int { return (k < 0 || k > m) ? Int(0) : c(m, k); };
  for (int x = 0; x <= n; ++x) {
    for (int j = 0; j <= n; ++j) {
      Int sum = 0;
      for (int k = 0; k <= j; ++k) {
        if (k > x || j - k > n - x) continue;
        Int term = C(x, k) * C(n - x, j - k);
        if (k % 2) sum -= term;
        else sum += term;
      }
      values_[index(j, x)] = std::move(sum);
    }
  }
}

const KrawtchoukTable& KrawtchoukTable::of(int n) {
  thread_local std::map<int, std::unique_ptr<KrawtchoukTable>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<KrawtchoukTable>(n);
  return *slot;
}

SpectrumPoly::SpectrumPoly(int n_, std::vector<Rat> c) : n(n_), coeffs(std::move(c)) {
  if (n < 0 || coeffs.size() != static_cast<std::size_t>(n) + 1)
    throw DomainError("SpectrumPoly: need exactly n+1 coefficients");
}

SpectrumPoly SpectrumPoly::zero(int n) {
  return SpectrumPoly(n, std::vector<Rat>(static_cast<std::size_t>(n) + 1, Rat(0)));
}

SpectrumPoly SpectrumPoly::delta(int n) {
  return SpectrumPoly(n, std::vector<Rat>(static_cast<std::size_t>(n) + 1, Rat(1)));
}

std::vector<Rat> SpectrumPoly::values() const {
  std::vector<Rat> out;
  out.reserve(coeffs.size());
  for (int x = 0; x <= n; ++x) out.push_back(evaluate_spectrum(*this, x));
  return out;
}

Rat evaluate_spectrum(const SpectrumPoly& p, int x) {
  if (x < 0 || x > p.n) throw DomainError("evaluate_spectrum: x outside [0,n]");
  const auto& K = KrawtchoukTable::of(p.n);
  Rat sum = 0;
  for (int j = 0; j <= p.n; ++j) {
    if (p.coeffs[j] == 0) continue;
    sum += p.coeffs[j] * Rat(K(j, x));
  }
  return sum / Rat(pow2(static_cast<unsigned>(p.n)));
}

SpectrumPoly spectrum_of_values(int n, std::span<const Rat> values) {
  if (n < 0 || values.size() != static_cast<std::size_t>(n) + 1)
    throw DomainError("spectrum_of_values: need exactly n+1 values");
  const auto& K = KrawtchoukTable::of(n);
  std::vector<Rat> c(values.size());
  for (int j = 0; j <= n; ++j) {
    Rat sum = 0;
    for (int x = 0; x <= n; ++x) {
      if (values[x] == 0) continue;
      sum += values[x] * Rat(K(x, j));
    }
    c[j] = sum;
  }
  return SpectrumPoly(n, std::move(c));
}

}  // namespace hmaps
