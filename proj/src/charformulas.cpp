#include "agbcyl/charformulas.hpp"
#include "agbcyl/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace agbcyl {

namespace {

constexpr int kScan = 2000;

// Calls fn(k) for every k in [-K, K]^r with zero sum, in lexicographic order.
void for_each_sum_zero(int r, int K, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> k(r, -K);
  std::function<void(int, int)> rec = [&](int i, int partial) {
    if (i == r - 1) {
      const int last = -partial;
      if (last < -K || last > K) return;
      k[i] = last;
      fn(k);
      return;
    }
    // remaining coordinates can absorb between -(r-1-i)K and (r-1-i)K
    const int rest = (r - 1 - i) * K;
    for (int v = -K; v <= K; ++v) {
      const int p = partial + v;
      if (p > rest || p < -rest) continue;
      k[i] = v;
      rec(i + 1, p);
    }
  };
  rec(0, 0);
}

struct Perm {
  std::vector<int> sigma;  // 0-based images
  int sign;
};

std::vector<Perm> permutations(int r) {
  std::vector<Perm> out;
  std::vector<int> s(r);
  std::iota(s.begin(), s.end(), 0);
  do {
    int inv = 0;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        if (s[i] > s[j]) ++inv;
    out.push_back({s, inv % 2 ? -1 : 1});
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

// mu padded to r entries (mu_r = 0), 1-based access via [t-1].
std::vector<long> padded_profile(const AffineWeight& w) {
  Partition mu = lambda_hat(w);
  std::vector<long> out(w.rank(), 0);
  for (std::size_t i = 0; i < mu.size(); ++i) out[i] = mu[i];
  return out;
}

long halve_exact(long twice) {
  if (twice % 2 != 0) throw std::logic_error("half-integral exponent in a determinant term");
  return twice / 2;
}

// Pure power sums may momentarily carry exponents of either sign; collected
// sparsely, then checked to start at q^0.
QSeries finish_sparse(const std::map<long, bigint>& acc, int truncation, const char* what) {
  QSeries s(truncation);
  for (const auto& [e, c] : acc) {
    if (c == 0) continue;
    if (e < 0) throw std::logic_error(std::string(what) + ": negative exponent survived");
    if (e <= truncation) s[static_cast<int>(e)] += c;
  }
  return s;
}

// twice the GK exponent for row s (1-based), column t, coordinate k
long gk_twice(const std::vector<long>& mu, long r, long d, long s, long t, long k) {
  return 2 * (mu[t - 1] - t) * (r * k + s - t) + (r + d) * k * (r * k + 2 * s);
}

// Lower bound, over columns, of twice the contribution of row s.
std::function<long(int)> min_over_columns(int r, const std::function<long(long, long, long)>& e2,
                                          long s) {
  return [=](int k) {
    long best = LONG_MAX;
    for (long t = 1; t <= r; ++t) best = std::min(best, e2(s, t, k));
    return best;
  };
}

}  // namespace

int lattice_window(const std::vector<std::function<long(int)>>& twice_lb, long limit) {
  const int r = static_cast<int>(twice_lb.size());
  std::vector<long> gmin(r, LONG_MAX);
  for (int s = 0; s < r; ++s) {
    for (int k = -kScan; k <= kScan; ++k) gmin[s] = std::min(gmin[s], twice_lb[s](k));
    if (twice_lb[s](kScan) <= limit || twice_lb[s](-kScan) <= limit)
      throw std::logic_error("lattice window scan range too small");
  }
  const long total = std::accumulate(gmin.begin(), gmin.end(), 0L);
  for (int K = 0; K < kScan; ++K) {
    bool ok = true;
    for (int s = 0; s < r && ok; ++s) {
      long outside = LONG_MAX;
      for (int k = K + 1; k <= kScan; ++k)
        outside = std::min({outside, twice_lb[s](k), twice_lb[s](-k)});
      if (outside + (total - gmin[s]) <= limit) ok = false;
    }
    if (ok) return K;
  }
  throw std::logic_error("no lattice window found");
}

// ---------------------------------------------------------------- XQLaurent

std::vector<int> normalize_exponents(std::vector<int> exps) {
  if (exps.empty()) return exps;
  const long sum = std::accumulate(exps.begin(), exps.end(), 0L);
  const long r = static_cast<long>(exps.size());
  if (sum % r != 0) fail(errc::invalid_argument, "exponent tuple cannot be centred");
  for (auto& e : exps) e -= static_cast<int>(sum / r);
  return exps;
}

void XQLaurent::add(std::vector<int> exps, int e, const bigint& c) {
  if (e < 0 || e > truncation || c == 0) return;
  auto key = normalize_exponents(std::move(exps));
  auto it = terms.find(key);
  if (it == terms.end()) it = terms.emplace(key, QSeries(truncation)).first;
  it->second[e] += c;
}

void XQLaurent::mul_one_minus(const std::vector<int>& v, int n) {
  if (n > truncation) return;
  std::map<std::vector<int>, QSeries> out = terms;
  for (const auto& [key, s] : terms) {
    std::vector<int> k2 = key;
    for (int i = 0; i < r; ++i) k2[i] += v[i];
    auto it = out.find(k2);
    if (it == out.end()) it = out.emplace(k2, QSeries(truncation)).first;
    it->second.add_scaled_shifted(s, n, bigint(-1));
  }
  terms = std::move(out);
  prune();
}

void XQLaurent::prune() {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second.is_zero()) it = terms.erase(it);
    else ++it;
  }
}

bool operator==(const XQLaurent& a, const XQLaurent& b) {
  if (a.r != b.r || a.truncation != b.truncation) return false;
  XQLaurent x = a, y = b;
  x.prune();
  y.prune();
  return x.terms == y.terms;
}

// ---------------------------------------------------------------- determinants

QSeries gk_determinant_gf(const AffineWeight& w, int a, int truncation, int extra_window) {
  check_weight(w);
  if (a < 0) fail(errc::invalid_argument, "a must be non-negative");
  const long r = w.rank(), d = w.level();
  const auto mu = padded_profile(w);
  auto e2 = [&](long s, long t, long k) { return gk_twice(mu, r, d, s, t, k); };
  std::vector<std::function<long(int)>> lb;
  for (long s = 1; s <= r; ++s) lb.push_back(min_over_columns(r, e2, s));
  const int K = lattice_window(lb, 2L * truncation) + extra_window;

  // 1/(q;q)_n for every index that can occur
  const int nmax = a + static_cast<int>(r) * K + static_cast<int>(r);
  std::vector<QSeries> inv(nmax + 1);
  for (int n = 0; n <= nmax; ++n) inv[n] = inverse_pochhammer({1, 1, n}, truncation);

  const auto perms = permutations(static_cast<int>(r));
  QSeries total(truncation);
  for_each_sum_zero(static_cast<int>(r), K, [&](const std::vector<int>& k) {
    for (const auto& p : perms) {
      long twice = 0;
      bool vanish = false;
      for (long s = 1; s <= r && !vanish; ++s) {
        const long t = p.sigma[s - 1] + 1;
        twice += e2(s, t, k[s - 1]);
        if (a + r * k[s - 1] + s - t < 0) vanish = true;
      }
      if (vanish) continue;
      const long e = halve_exact(twice);
      if (e > truncation) continue;
      if (e < 0) throw std::logic_error("negative exponent in the finite determinant");
      const int left = truncation - static_cast<int>(e);
      QSeries prod = QSeries::one(left);
      for (long s = 1; s <= r; ++s) {
        const long t = p.sigma[s - 1] + 1;
        prod *= inv[a + r * k[s - 1] + s - t].truncated(left);
      }
      total.add_scaled_shifted(prod, static_cast<int>(e), bigint(p.sign));
    }
  });
  return total;
}

QSeries gk_limit_gf(const AffineWeight& w, int truncation, int extra_window) {
  check_weight(w);
  const long r = w.rank(), d = w.level();
  const auto mu = padded_profile(w);
  auto e2 = [&](long s, long t, long k) { return gk_twice(mu, r, d, s, t, k); };
  std::vector<std::function<long(int)>> lb;
  for (long s = 1; s <= r; ++s) lb.push_back(min_over_columns(r, e2, s));
  const int K = lattice_window(lb, 2L * truncation) + extra_window;
  const auto perms = permutations(static_cast<int>(r));
  std::map<long, bigint> acc;
  for_each_sum_zero(static_cast<int>(r), K, [&](const std::vector<int>& k) {
    for (const auto& p : perms) {
      long twice = 0;
      for (long s = 1; s <= r; ++s) twice += e2(s, p.sigma[s - 1] + 1, k[s - 1]);
      acc[halve_exact(twice)] += p.sign;
    }
  });
  QSeries sum = finish_sparse(acc, truncation, "gk_limit_gf");
  return sum * power(pochhammer({1, 1, INFINITE}, truncation), -static_cast<int>(r));
}

MacdonaldSides macdonald_sides(int r, int truncation, int extra_window) {
  if (r < 2) fail(errc::rank_error, "Macdonald identity needs r >= 2");
  MacdonaldSides out;
  out.lhs.r = out.rhs.r = r;
  out.lhs.truncation = out.rhs.truncation = truncation;

  // left: det[x_t^{r k_t + s - t} q^{r k_t^2/2 + s k_t}]
  std::vector<std::function<long(int)>> lb;
  for (int t = 1; t <= r; ++t)
    lb.push_back([r](int k) {
      long best = LONG_MAX;
      for (long s = 1; s <= r; ++s) best = std::min(best, static_cast<long>(r) * k * k + 2 * s * k);
      return best;
    });
  const int K = lattice_window(lb, 2L * truncation) + extra_window;
  const auto perms = permutations(r);
  for_each_sum_zero(r, K, [&](const std::vector<int>& k) {
    for (const auto& p : perms) {
      long twice = 0;
      std::vector<int> ex(r, 0);
      for (int s = 1; s <= r; ++s) {
        const int t = p.sigma[s - 1] + 1;
        const long kt = k[t - 1];
        twice += static_cast<long>(r) * kt * kt + 2L * s * kt;
        ex[t - 1] = r * static_cast<int>(kt) + s - t;
      }
      const long e = halve_exact(twice);
      if (e < 0) throw std::logic_error("negative exponent in the Macdonald sum");
      out.lhs.add(ex, static_cast<int>(e), bigint(p.sign));
    }
  });
  out.lhs.prune();

  // right: (q;q)^{r-1} prod_{i<j} (x_i/x_j; q)_inf (q x_j/x_i; q)_inf
  QSeries base = power(pochhammer({1, 1, INFINITE}, truncation), r - 1);
  out.rhs.terms.emplace(std::vector<int>(r, 0), base);
  out.rhs.prune();
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      std::vector<int> v(r, 0), vinv(r, 0);
      v[i] = 1;
      v[j] = -1;
      vinv[i] = -1;
      vinv[j] = 1;
      for (int n = 0; n <= truncation; ++n) out.rhs.mul_one_minus(v, n);
      for (int n = 1; n <= truncation; ++n) out.rhs.mul_one_minus(vinv, n);
    }
  return out;
}

QSeries principal_numerator(const AffineWeight& w, int truncation, int extra_window) {
  if (w.rank() < 2) fail(errc::rank_error, "rank must be at least 2");
  for (int m : w.marks)
    if (m < 0) fail(errc::invalid_argument, "negative mark");
  const long r = w.rank(), d = w.level();
  const auto mu = padded_profile(w);
  // twice the exponent of entry (s, t) with coordinate k_s
  auto e2 = [&](long s, long t, long k) {
    return 2 * ((r + d) * s * k + (mu[t - 1] - t - mu[s - 1] + s) * s + (mu[t - 1] - t) * r * k) +
           r * (r + d) * k * k;
  };
  std::vector<std::function<long(int)>> lb;
  for (long s = 1; s <= r; ++s) lb.push_back(min_over_columns(r, e2, s));
  const int K = lattice_window(lb, 2L * truncation) + extra_window;
  const auto perms = permutations(static_cast<int>(r));
  std::map<long, bigint> acc;
  for_each_sum_zero(static_cast<int>(r), K, [&](const std::vector<int>& k) {
    for (const auto& p : perms) {
      long twice = 0;
      for (long s = 1; s <= r; ++s) twice += e2(s, p.sigma[s - 1] + 1, k[s - 1]);
      acc[halve_exact(twice)] += p.sign;
    }
  });
  return finish_sparse(acc, truncation, "principal_numerator");
}

QSeries principal_char(const AffineWeight& w, int truncation) {
  check_weight(w);
  const QSeries num = principal_numerator(w, truncation);
  const QSeries den = principal_numerator(AffineWeight{std::vector<int>(w.rank(), 0)}, truncation);
  return num * invert(den);
}

// ---------------------------------------------------------------- rank two

namespace {

void check_rank2(const AffineWeight& w) {
  check_weight(w);
  if (w.rank() != 2) fail(errc::rank_error, "rank-2 formula called with " + to_string(w));
}

}  // namespace

QSeries bosonic_r2(const AffineWeight& w, int a, int truncation) {
  check_rank2(w);
  const long d = w.level(), i = w.marks[1], p = d + 2;
  auto ex = [&](long j) { return halve_exact(j * (j + 1) * p) - j * (i + 1); };
  std::vector<long> js;
  for (long j = 0;; ++j) {  // exponent is convex in j; stop once past the limit and rising
    if (ex(j) <= truncation) js.push_back(j);
    else if (ex(j + 1) > ex(j)) break;
  }
  for (long j = -1;; --j) {
    if (ex(j) <= truncation) js.push_back(j);
    else if (ex(j - 1) > ex(j)) break;
  }
  if (a == INFINITE) {
    std::map<long, bigint> acc;
    for (long j : js) acc[ex(j)] += (j % 2 == 0) ? 1 : -1;
    QSeries sum = finish_sparse(acc, truncation, "bosonic_r2");
    return sum * power(pochhammer({1, 1, INFINITE}, truncation), -2);
  }
  if (a < 0) fail(errc::invalid_argument, "a must be non-negative or INFINITE");
  QSeries total(truncation);
  for (long j : js) {
    if (a - j < 0 || a + j < 0) continue;
    const long e = ex(j);
    if (e < 0) throw std::logic_error("negative exponent in bosonic_r2");
    const int left = truncation - static_cast<int>(e);
    QSeries t = inverse_pochhammer({1, 1, static_cast<int>(a - j)}, left) *
                inverse_pochhammer({1, 1, static_cast<int>(a + j)}, left);
    total.add_scaled_shifted(t, static_cast<int>(e), bigint(j % 2 == 0 ? 1 : -1));
  }
  return total;
}

QSeries product_r2(const AffineWeight& w, int truncation) {
  check_rank2(w);
  const int d = w.level(), i = w.marks[1], p = d + 2;
  QSeries s = pochhammer({i + 1, p, INFINITE}, truncation) *
              pochhammer({p - i - 1, p, INFINITE}, truncation) *
              pochhammer({p, p, INFINITE}, truncation);
  return s * power(pochhammer({1, 1, INFINITE}, truncation), -2);
}

// ---------------------------------------------------------------- W_r

namespace {

void check_wr_levels(const AffineWeight& xi, const AffineWeight& zeta, int p, int pp) {
  check_weight(xi);
  check_weight(zeta);
  if (xi.rank() != zeta.rank()) fail(errc::rank_error, "xi and zeta must share the rank");
  const int r = xi.rank();
  if (!(r <= p && p < pp)) fail(errc::invalid_levels, "need r <= p < p'");
  if (xi.level() != p - r) fail(errc::invalid_levels, "level of xi must be p - r");
  if (zeta.level() != pp - r) fail(errc::invalid_levels, "level of zeta must be p' - r");
}

}  // namespace

rational conformal_weight(const AffineWeight& xi, const AffineWeight& zeta, int p, int pp) {
  check_wr_levels(xi, zeta, p, pp);
  const int r = xi.rank();
  const auto nu = padded_profile(xi), mu = padded_profile(zeta);
  std::vector<rational> c(r);
  rational mean = 0;
  for (int i = 1; i <= r; ++i) {
    c[i - 1] = rational(pp) * (nu[i - 1] - i) - rational(p) * (mu[i - 1] - i);
    mean += c[i - 1];
  }
  mean /= r;
  rational sq = 0;
  for (const auto& ci : c) sq += (ci - mean) * (ci - mean);
  rational out = sq / (2 * p * pp) - rational(r - 1, 24);
  out.canonicalize();
  return out;
}

QSeries wr_normalized_char(const AffineWeight& xi, const AffineWeight& zeta, int p, int pp,
                           int truncation, int extra_window) {
  check_wr_levels(xi, zeta, p, pp);
  if (std::gcd(p, pp) != 1) fail(errc::not_coprime, "p and p' must be coprime");
  const long r = xi.rank();
  const auto nu = padded_profile(xi), mu = padded_profile(zeta);
  auto e2 = [&](long s, long t, long k) {
    return static_cast<long>(pp) * k * (p * k - 2 * nu[s - 1] + 2 * s) +
           2 * (mu[t - 1] - t) * (p * k - nu[s - 1] + s + nu[t - 1] - t);
  };
  std::vector<std::function<long(int)>> lb;
  for (long s = 1; s <= r; ++s) lb.push_back(min_over_columns(static_cast<int>(r), e2, s));
  const int K = lattice_window(lb, 2L * truncation) + extra_window;
  const auto perms = permutations(static_cast<int>(r));
  std::map<long, bigint> acc;
  for_each_sum_zero(static_cast<int>(r), K, [&](const std::vector<int>& k) {
    for (const auto& pm : perms) {
      long twice = 0;
      for (long s = 1; s <= r; ++s) twice += e2(s, pm.sigma[s - 1] + 1, k[s - 1]);
      acc[halve_exact(twice)] += pm.sign;
    }
  });
  QSeries sum = finish_sparse(acc, truncation, "wr_normalized_char");
  return sum * power(pochhammer({1, 1, INFINITE}, truncation), -static_cast<int>(r - 1));
}

}  // namespace agbcyl
