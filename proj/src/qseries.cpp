#include "agbcyl/qseries.hpp"
#include "agbcyl/error.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace agbcyl {

QSeries::QSeries(int truncation) : coeffs_(std::max(truncation, 0) + 1) {}

QSeries::QSeries(int truncation, std::vector<bigint> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(std::max(truncation, 0) + 1);
}

QSeries QSeries::monomial(int e, const bigint& c, int truncation) {
  QSeries s(truncation);
  if (e >= 0 && e <= truncation) s.coeffs_[e] = c;
  return s;
}

QSeries QSeries::from_ints(int truncation, const std::vector<long>& coeffs) {
  QSeries s(truncation);
  for (std::size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= truncation; ++i)
    s.coeffs_[i] = coeffs[i];
  return s;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const bigint& c) { return c == 0; });
}

int QSeries::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return -1;
}

QSeries QSeries::truncated(int n) const {
  if (n > truncation()) throw std::invalid_argument("cannot raise a truncation");
  return QSeries(n, std::vector<bigint>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

QSeries QSeries::shifted(int m) const {
  if (m < 0) throw std::invalid_argument("negative shift");
  QSeries s(truncation());
  for (int i = 0; i + m <= truncation(); ++i) s.coeffs_[i + m] = coeffs_[i];
  return s;
}

QSeries QSeries::scaled(const bigint& c) const {
  QSeries s(*this);
  for (auto& x : s.coeffs_) x *= c;
  return s;
}

QSeries& QSeries::operator+=(const QSeries& y) {
  coeffs_.resize(std::min(coeffs_.size(), y.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += y.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& y) {
  coeffs_.resize(std::min(coeffs_.size(), y.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= y.coeffs_[i];
  return *this;
}

QSeries operator*(const QSeries& x, const QSeries& y) {
  const int n = std::min(x.truncation(), y.truncation());
  QSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (y.coeffs_[j] == 0) continue;
      mpz_addmul(out.coeffs_[i + j].get_mpz_t(), x.coeffs_[i].get_mpz_t(),
                 y.coeffs_[j].get_mpz_t());
    }
  }
  return out;
}

QSeries& QSeries::operator*=(const QSeries& y) { return *this = *this * y; }

QSeries operator-(const QSeries& x) {
  QSeries s(x);
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

void QSeries::add_term(int e, const bigint& c) {
  if (e >= 0 && e <= truncation()) coeffs_[e] += c;
}

void QSeries::add_scaled_shifted(const QSeries& y, int shift, const bigint& c) {
  if (shift < 0) throw std::invalid_argument("negative shift");
  const int n = std::min(truncation(), y.truncation() + shift);
  for (int i = shift; i <= n; ++i) {
    const bigint& yc = y.coeffs_[i - shift];
    if (yc != 0) mpz_addmul(coeffs_[i].get_mpz_t(), yc.get_mpz_t(), c.get_mpz_t());
  }
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= truncation(); ++i) {
    const bigint& c = coeffs_[i];
    if (c == 0) continue;
    bigint a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (i == 0 || a != 1) os << a.get_str();
    if (i >= 1) os << "q";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  os << " + O(q^" << truncation() + 1 << ")";
  return os.str();
}

QSeries invert(const QSeries& x) {
  const bigint& a0 = x[0];
  if (a0 != 1 && a0 != -1) fail(errc::non_unit_series, "constant coefficient is not +-1");
  const int n = x.truncation();
  QSeries b(n);
  b[0] = a0;
  bigint acc;
  for (int m = 1; m <= n; ++m) {
    acc = 0;
    for (int k = 1; k <= m; ++k)
      if (x[k] != 0) mpz_addmul(acc.get_mpz_t(), x[k].get_mpz_t(), b[m - k].get_mpz_t());
    b[m] = -a0 * acc;
  }
  return b;
}

QSeries power(const QSeries& x, int e) {
  if (e < 0) return power(invert(x), -e);
  QSeries result = QSeries::one(x.truncation());
  QSeries base = x;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

namespace {

// In place multiply by (1 - q^m), or divide by it.
void mul_one_minus(std::vector<bigint>& c, int m) {
  for (int i = static_cast<int>(c.size()) - 1; i >= m; --i) c[i] -= c[i - m];
}
void div_one_minus(std::vector<bigint>& c, int m) {
  for (int i = m; i < static_cast<int>(c.size()); ++i) c[i] += c[i - m];
}

}  // namespace

QSeries pochhammer(const PochSpec& spec, int truncation) {
  if (spec.offset < 1 || spec.modulus < 1)
    throw std::invalid_argument("pochhammer needs positive offset and modulus");
  QSeries s = QSeries::one(truncation);
  std::vector<bigint> c = s.coeffs();
  for (long k = 0; spec.count == INFINITE || k < spec.count; ++k) {
    long e = spec.offset + k * static_cast<long>(spec.modulus);
    if (e > truncation) break;
    mul_one_minus(c, static_cast<int>(e));
  }
  return QSeries(truncation, std::move(c));
}

QSeries inverse_pochhammer(const PochSpec& spec, int truncation) {
  if (spec.offset < 1 || spec.modulus < 1)
    throw std::invalid_argument("pochhammer needs positive offset and modulus");
  std::vector<bigint> c(truncation + 1);
  c[0] = 1;
  for (long k = 0; spec.count == INFINITE || k < spec.count; ++k) {
    long e = spec.offset + k * static_cast<long>(spec.modulus);
    if (e > truncation) break;
    div_one_minus(c, static_cast<int>(e));
  }
  return QSeries(truncation, std::move(c));
}

Poly poly_mul(const Poly& x, const Poly& y) {
  if (x.empty() || y.empty()) return {};
  Poly out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
  }
  return out;
}

Poly poly_pochhammer(int offset, int modulus, int count) {
  Poly p{1};
  for (int k = 0; k < count; ++k) {
    int e = offset + k * modulus;
    p.resize(p.size() + e);
    mul_one_minus(p, e);
  }
  return p;
}

Poly poly_exact_div(const Poly& num, const Poly& den) {
  Poly d = den;
  while (!d.empty() && d.back() == 0) d.pop_back();
  if (d.empty()) throw std::logic_error("division by the zero polynomial");
  Poly r = num;
  while (!r.empty() && r.back() == 0) r.pop_back();
  if (r.size() < d.size()) {
    if (!r.empty()) throw std::logic_error("inexact polynomial division");
    return {};
  }
  Poly q(r.size() - d.size() + 1);
  const bigint& lead = d.back();
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    bigint& top = r[i + d.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw std::logic_error("inexact polynomial division");
    q[i] = top / lead;
    for (std::size_t j = 0; j < d.size(); ++j)
      mpz_submul(r[i + j].get_mpz_t(), q[i].get_mpz_t(), d[j].get_mpz_t());
  }
  for (const auto& c : r)
    if (c != 0) throw std::logic_error("inexact polynomial division");
  return q;
}

QSeries q_multinomial(int a, const Partition& lambda, int k, int f, int truncation) {
  if (static_cast<int>(lambda.size()) > k)
    throw std::invalid_argument("partition has more than k parts");
  if (a < 0 || f < 1 || k < 1)
    throw std::invalid_argument("q_multinomial needs a >= 0, k >= 1, f >= 1");
  std::vector<int> lam(k, 0);
  std::copy(lambda.begin(), lambda.end(), lam.begin());
  if (lam[0] > a) return QSeries(truncation);
  Poly den = poly_pochhammer(1, 1, a - lam[0]);
  for (int j = 0; j + 1 < k; ++j) den = poly_mul(den, poly_pochhammer(1, 1, lam[j] - lam[j + 1]));
  den = poly_mul(den, poly_pochhammer(f, f, lam[k - 1]));
  Poly q = poly_exact_div(poly_pochhammer(f, f, a), den);
  return QSeries(truncation, std::vector<bigint>(q.begin(),
                                                 q.begin() + std::min<std::size_t>(q.size(), truncation + 1)));
}

}  // namespace agbcyl
