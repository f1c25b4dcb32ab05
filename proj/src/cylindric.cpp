#include "agbcyl/cylindric.hpp"
#include "agbcyl/config.hpp"
#include "agbcyl/error.hpp"
#include "cyl_search.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace agbcyl {

int AffineWeight::level() const { return std::accumulate(marks.begin(), marks.end(), 0); }

void check_weight(const AffineWeight& w) {
  if (w.rank() < 2) fail(errc::rank_error, "weight needs rank r >= 2, got " + to_string(w));
  for (int m : w.marks)
    if (m < 0) fail(errc::invalid_argument, "negative mark in " + to_string(w));
}

std::vector<AffineWeight> all_weights(int r, int d) {
  std::vector<AffineWeight> out;
  std::vector<int> m(r, 0);
  // compositions of d into r non-negative parts, descending lexicographic
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == r - 1) {
      m[i] = left;
      out.push_back({m});
      return;
    }
    for (int v = left; v >= 0; --v) {
      m[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (r >= 1 && d >= 0) rec(0, d);
  return out;
}

std::string to_string(const AffineWeight& w) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < w.marks.size(); ++i) os << (i ? "," : "") << w.marks[i];
  os << "]";
  return os.str();
}

Partition lambda_hat(const AffineWeight& w) {
  Partition mu;
  int acc = 0;
  std::vector<int> suffix(w.rank(), 0);
  for (int j = w.rank() - 1; j >= 1; --j) {
    acc += w.marks[j];
    suffix[j] = acc;
  }
  for (int j = 1; j < w.rank(); ++j)
    if (suffix[j] > 0) mu.push_back(suffix[j]);
  return mu;
}

AffineWeight weight_from_profile(int r, int d, const Partition& mu) {
  if (r < 2) fail(errc::rank_error, "rank must be at least 2");
  if (static_cast<int>(mu.size()) > r - 1 || !is_partition(mu))
    fail(errc::invalid_argument, "profile must be a partition with at most r-1 parts");
  auto at = [&](int j) { return j >= 1 && j <= static_cast<int>(mu.size()) ? mu[j - 1] : 0; };
  if (at(1) > d) fail(errc::invalid_argument, "profile exceeds the shift d");
  AffineWeight w{std::vector<int>(r)};
  w.marks[0] = d - at(1);
  for (int j = 1; j < r; ++j) w.marks[j] = at(j) - at(j + 1);
  return w;
}

std::string omega_word(const AffineWeight& w) {
  const int r = w.rank(), d = w.level();
  std::string s(r + d, '1');
  int before = 0;  // m_0 + ... + m_{j-1}
  for (int j = 1; j <= r; ++j) {
    before += w.marks[j - 1];
    s[j + before - 1] = '0';
  }
  return s;
}

int CylPart::mu_at(int row) const {
  return row >= 1 && row <= static_cast<int>(mu.size()) ? mu[row - 1] : 0;
}

int CylPart::entry(int row, int col) const {
  const int start = mu_at(row);
  if (col <= start) return INT_MAX;
  const auto& v = rows[row - 1];
  const int pos = col - start - 1;
  return pos < static_cast<int>(v.size()) ? v[pos] : 0;
}

int CylPart::max_entry() const {
  int m = 0;
  for (const auto& row : rows)
    if (!row.empty()) m = std::max(m, row.front());
  return m;
}

CylPart CylPart::empty(const AffineWeight& w) {
  check_weight(w);
  CylPart p;
  p.r = w.rank();
  p.d = w.level();
  p.mu = lambda_hat(w);
  p.rows.assign(p.r, {});
  return p;
}

namespace {

ValidationReport violation(const char* rule, int row, int col, const std::string& msg) {
  ValidationReport rep;
  rep.ok = false;
  rep.rule = rule;
  rep.row = row;
  rep.col = col;
  rep.message = msg;
  return rep;
}

ValidationReport validate_relaxed(const CylPart& p, const std::vector<int>& n) {
  if (p.r < 2) return violation("Shape", 0, 0, "rank must be at least 2");
  if (static_cast<int>(p.rows.size()) != p.r)
    return violation("Shape", 0, 0, "expected r rows");
  if (!is_partition(p.mu) || static_cast<int>(p.mu.size()) > p.r - 1)
    return violation("Shape", 0, 0, "profile must be a partition with at most r-1 parts");
  if (p.mu_at(1) > p.d) return violation("Shape", 1, 0, "mu_1 exceeds d");
  if (static_cast<int>(n.size()) != p.r) return violation("Shape", 0, 0, "relaxation needs r marks");
  int last_col = 0;
  for (int i = 1; i <= p.r; ++i) {
    const auto& row = p.rows[i - 1];
    for (std::size_t j = 0; j < row.size(); ++j) {
      const int col = p.mu_at(i) + 1 + static_cast<int>(j);
      if (row[j] < 1) return violation("Shape", i, col, "stored entries must be positive");
      if (j > 0 && row[j] > row[j - 1])
        return violation("PlaneRow1", i, col, "row is not weakly decreasing");
    }
    last_col = std::max(last_col, p.mu_at(i) + static_cast<int>(row.size()));
  }
  for (int i = 1; i < p.r; ++i)
    for (int c = p.mu_at(i) + 1; c <= last_col; ++c)
      if (static_cast<long>(p.entry(i, c)) < static_cast<long>(p.entry(i + 1, c)) - n[i]) {
        std::ostringstream os;
        os << "pi(" << i << "," << c << ") < pi(" << i + 1 << "," << c << ")";
        if (n[i]) os << " - " << n[i];
        return violation("PlaneRow2", i, c, os.str());
      }
  for (int c = 1; c <= last_col; ++c)
    if (static_cast<long>(p.entry(p.r, c)) < static_cast<long>(p.entry(1, c + p.d)) - n[0]) {
      std::ostringstream os;
      os << "pi(" << p.r << "," << c << ") < pi(1," << c + p.d << ")";
      if (n[0]) os << " - " << n[0];
      return violation("PlaneCyl", p.r, c, os.str());
    }
  return {};
}

}  // namespace

ValidationReport validate(const CylPart& p) {
  return validate_relaxed(p, std::vector<int>(std::max(p.r, 0), 0));
}

ValidationReport validate(const GeneralCylPart& p) {
  for (int v : p.xi)
    if (v < 0) return violation("Shape", 0, 0, "relaxation marks must be non-negative");
  return validate_relaxed(p.base, p.xi);
}

long norm(const CylPart& p) {
  long s = 0;
  for (const auto& row : p.rows)
    for (int v : row) s += v;
  return s;
}

void sort_canonical(std::vector<CylPart>& v) {
  std::vector<std::pair<long, std::size_t>> keys;
  keys.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) keys.emplace_back(norm(v[i]), i);
  std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return v[a.second].rows < v[b.second].rows;
  });
  std::vector<CylPart> out;
  out.reserve(v.size());
  for (const auto& k : keys) out.push_back(std::move(v[k.second]));
  v = std::move(out);
}

void for_each_cyl(const AffineWeight& w, const std::vector<int>& xi, int max_norm, int max_entry,
                  const CylVisitor& visit) {
  detail::search_cyl(w, xi, max_norm, max_entry, 1,
                     [&](int, const CylPart& p) { visit(p); });
}

std::vector<CylPart> enumerate(const AffineWeight& w, int max_norm, int max_entry) {
  const int threads = thread_count();
  std::vector<std::vector<CylPart>> found(threads);
  detail::search_cyl(w, {}, max_norm, max_entry, threads,
                     [&](int worker, const CylPart& p) { found[worker].push_back(p); });
  std::vector<CylPart> all;
  for (auto& f : found) std::move(f.begin(), f.end(), std::back_inserter(all));
  sort_canonical(all);
  return all;
}

std::vector<CylPart> enumerate_general(const AffineWeight& xi, const AffineWeight& zeta,
                                       int max_norm) {
  if (xi.rank() != zeta.rank()) fail(errc::rank_error, "xi and zeta must share the rank");
  const int threads = thread_count();
  std::vector<std::vector<CylPart>> found(threads);
  detail::search_cyl(zeta, xi.marks, max_norm, UNBOUNDED, threads,
                     [&](int worker, const CylPart& p) { found[worker].push_back(p); });
  std::vector<CylPart> all;
  for (auto& f : found) std::move(f.begin(), f.end(), std::back_inserter(all));
  sort_canonical(all);
  return all;
}

namespace {

QSeries count_by_norm(const AffineWeight& w, const std::vector<int>& xi, int truncation,
                      int max_entry) {
  const int threads = thread_count();
  std::vector<std::vector<std::uint64_t>> counts(threads,
                                                 std::vector<std::uint64_t>(truncation + 1, 0));
  detail::search_cyl(w, xi, truncation, max_entry, threads,
                     [&](int worker, const CylPart& p) { ++counts[worker][norm(p)]; });
  QSeries s(truncation);
  for (const auto& c : counts)
    for (int n = 0; n <= truncation; ++n) s[n] += static_cast<unsigned long>(c[n]);
  return s;
}

}  // namespace

QSeries gf_brute(const AffineWeight& w, int truncation, int max_entry) {
  return count_by_norm(w, {}, truncation, max_entry);
}

QSeries gf_general_brute(const AffineWeight& xi, const AffineWeight& zeta, int truncation) {
  if (xi.rank() != zeta.rank()) fail(errc::rank_error, "xi and zeta must share the rank");
  check_weight(xi);
  return count_by_norm(zeta, xi.marks, truncation, UNBOUNDED);
}

std::vector<BorodinFactor> borodin_exponents(const AffineWeight& w) {
  check_weight(w);
  const int r = w.rank(), d = w.level(), n = r + d;
  const std::string om = omega_word(w);
  std::vector<BorodinFactor> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const char a = om[i - 1], b = om[j - 1];
      if (a > b) out.push_back({j - i, n});
      else if (a < b) out.push_back({n - j + i, n});
    }
  out.push_back({n, n});
  std::sort(out.begin(), out.end());
  return out;
}

QSeries borodin_product(const AffineWeight& w, int truncation) {
  QSeries s = QSeries::one(truncation);
  for (const auto& f : borodin_exponents(w))
    s *= inverse_pochhammer({f.exponent, f.modulus, INFINITE}, truncation);
  return s;
}

BurgeReport burge_view(const GeneralCylPart& p) {
  BurgeReport rep;
  const CylPart& b = p.base;
  for (const auto& row : b.rows) rep.rows.push_back(row);
  const AffineWeight w = b.weight();
  const int r = b.r;
  auto hat = [&](int i, int j) -> long {
    const auto& row = b.rows[i - 1];
    return j >= 1 && j <= static_cast<int>(row.size()) ? row[j - 1] : 0;
  };
  int len = 0;
  for (const auto& row : b.rows) len = std::max(len, static_cast<int>(row.size()));
  std::vector<int> n = p.xi;
  n.resize(r, 0);
  for (int i = 1; i <= r && rep.ok; ++i) {
    const int next = i == r ? 1 : i + 1;
    const int shift = i == r ? w.marks[0] : w.marks[i];
    const int relax = i == r ? n[0] : n[i];
    for (int j = 1; j <= len; ++j) {
      if (hat(i, j) - hat(next, j + shift) < -relax) {
        std::ostringstream os;
        os << "interlacing fails between rows " << i << " and " << next << " at j=" << j;
        rep.ok = false;
        rep.message = os.str();
        break;
      }
    }
  }
  return rep;
}

}  // namespace agbcyl
