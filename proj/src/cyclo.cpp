#include "gradings/cyclo.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "gradings/error.hpp"

namespace gradings {

namespace detail {

struct CycloContext {
  int conductor = 1;
  int degree = 1;
  std::vector<std::int64_t> phi_poly;
  // power_table[k] = x^k mod Phi_N for 0 <= k < N.
  std::vector<std::vector<std::int64_t>> power_table;
  std::vector<Rational> zero;
};

namespace {

using IntPoly = std::vector<std::int64_t>;

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

IntPoly mul_int(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// Exact division by a monic divisor; the remainder must vanish.
IntPoly div_exact_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() - 1 < dd) return {0};
  IntPoly q(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    const std::int64_t c = num[k];
    q[k - dd] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (num[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  trim(q);
  return q;
}

std::map<int, IntPoly>& phi_cache() {
  static std::map<int, IntPoly> cache;
  return cache;
}
std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

IntPoly compute_cyclotomic(int n) {
  {
    std::lock_guard lock(phi_mutex());
    if (auto it = phi_cache().find(n); it != phi_cache().end()) return it->second;
  }
  IntPoly num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  IntPoly den{1};
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) den = mul_int(den, compute_cyclotomic(d));
  }
  IntPoly result = div_exact_monic(num, den);
  std::lock_guard lock(phi_mutex());
  phi_cache().emplace(n, result);
  return result;
}

std::unique_ptr<CycloContext> build_context(int n) {
  auto ctx = std::make_unique<CycloContext>();
  ctx->conductor = n;
  ctx->phi_poly = compute_cyclotomic(n);
  ctx->degree = static_cast<int>(ctx->phi_poly.size()) - 1;
  const auto d = static_cast<std::size_t>(ctx->degree);
  ctx->power_table.reserve(static_cast<std::size_t>(n));
  IntPoly cur(d, 0);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    ctx->power_table.push_back(cur);
    // cur *= x, then substitute x^d = -sum_{i<d} phi_i x^i.
    const std::int64_t top = cur[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t i = 0; i < d; ++i) cur[i] -= top * ctx->phi_poly[i];
    }
  }
  ctx->zero.assign(d, Rational(0));
  return ctx;
}

}  // namespace

const CycloContext& cyclo_context(int conductor) {
  if (conductor < 1) {
    throw GradingError(ErrorCode::InvalidConductor, "conductor must be >= 1, got " + std::to_string(conductor));
  }
  static std::array<std::atomic<const CycloContext*>, 256> fast{};
  const bool small = conductor < static_cast<int>(fast.size());
  if (small) {
    if (const CycloContext* c = fast[static_cast<std::size_t>(conductor)].load(std::memory_order_acquire)) return *c;
  }
  static std::map<int, std::unique_ptr<CycloContext>> contexts;
  static std::mutex mutex;
  {
    std::lock_guard lock(mutex);
    if (auto it = contexts.find(conductor); it != contexts.end()) return *it->second;
  }
  auto ctx = build_context(conductor);
  std::lock_guard lock(mutex);
  auto [it, inserted] = contexts.emplace(conductor, std::move(ctx));
  if (small) fast[static_cast<std::size_t>(conductor)].store(it->second.get(), std::memory_order_release);
  return *it->second;
}

}  // namespace detail

std::vector<std::int64_t> cyclotomic_poly(int n) {
  if (n < 1) throw GradingError(ErrorCode::InvalidConductor, "cyclotomic_poly needs n >= 1");
  return detail::compute_cyclotomic(n);
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

int lcm_conductor(int a, int b) { return std::lcm(a, b); }

// ---------------------------------------------------------------------------
// CycNum

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder over Q[x]; b must be nonzero after trimming.
void divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) {
    q.clear();
    r = std::move(a);
    return;
  }
  q.assign(a.size() - db, Rational(0));
  const Rational lead_inv = 1 / b.back();
  for (std::size_t k = a.size(); k-- > db;) {
    if (a[k] == 0) continue;
    const Rational c = a[k] * lead_inv;
    q[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  a.resize(db);
  trim(a);
  trim(q);
  r = std::move(a);
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  trim(out);
  return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

// Zero is stored with an empty coefficient vector; coeffs() pads it.
CycNum::CycNum() : ctx_(&detail::cyclo_context(1)) {}

CycNum::CycNum(long value) : ctx_(&detail::cyclo_context(1)) {
  if (value != 0) coeffs_.assign(1, Rational(value));
}

CycNum::CycNum(const Rational& value, int conductor) : ctx_(&detail::cyclo_context(conductor)) {
  if (value == 0) return;
  coeffs_.assign(static_cast<std::size_t>(ctx_->degree), Rational(0));
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

CycNum::CycNum(const detail::CycloContext* ctx, std::vector<Rational> coeffs)
    : ctx_(ctx), coeffs_(std::move(coeffs)) {
  settle();
}

void CycNum::settle() {
  if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; })) coeffs_.clear();
}

const std::vector<Rational>& CycNum::coeffs() const { return coeffs_.empty() ? ctx_->zero : coeffs_; }

CycNum CycNum::zeta(int n) { return root_of_unity(n, 1); }

CycNum CycNum::root_of_unity(int n, long k) {
  const auto& ctx = detail::cyclo_context(n);
  long r = k % n;
  if (r < 0) r += n;
  const auto& row = ctx.power_table[static_cast<std::size_t>(r)];
  std::vector<Rational> coeffs(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) coeffs[i] = Rational(static_cast<long>(row[i]));
  return CycNum(&ctx, std::move(coeffs));
}

CycNum CycNum::from_coeffs(int conductor, std::vector<Rational> coeffs) {
  const auto& ctx = detail::cyclo_context(conductor);
  if (coeffs.size() != static_cast<std::size_t>(ctx.degree)) {
    throw GradingError(ErrorCode::InvalidConductor, "coefficient count " + std::to_string(coeffs.size()) +
                                                        " does not match phi(" + std::to_string(conductor) +
                                                        ") = " + std::to_string(ctx.degree));
  }
  for (auto& c : coeffs) c.canonicalize();
  return CycNum(&ctx, std::move(coeffs));
}

int CycNum::conductor() const { return ctx_->conductor; }

CycNum descend(const CycNum& x) {
  if (x.is_rational()) return x.is_zero() ? CycNum() : CycNum(x.coeffs()[0]);
  const int n = x.conductor();
  const auto& target = x.coeffs();
  for (int d = 2; d < n; ++d) {
    if (n % d != 0) continue;
    // Solve x = sum_i c_i zeta_d^i over Q by elimination on the augmented system.
    const int k = euler_phi(d);
    const std::size_t rows = target.size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(static_cast<std::size_t>(k) + 1));
    for (int i = 0; i < k; ++i) {
      const CycNum b = CycNum::root_of_unity(d, i).lift(n);
      const auto& bc = b.coeffs();
      for (std::size_t r = 0; r < rows; ++r) a[r][static_cast<std::size_t>(i)] = bc[r];
    }
    for (std::size_t r = 0; r < rows; ++r) a[r][static_cast<std::size_t>(k)] = target[r];
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < static_cast<std::size_t>(k) && pivot_row < rows; ++c) {
      std::size_t p = pivot_row;
      while (p < rows && a[p][c] == 0) ++p;
      if (p == rows) continue;
      std::swap(a[p], a[pivot_row]);
      const Rational inv = 1 / a[pivot_row][c];
      for (auto& v : a[pivot_row]) v *= inv;
      for (std::size_t r = 0; r < rows; ++r) {
        if (r == pivot_row || a[r][c] == 0) continue;
        const Rational f = a[r][c];
        for (std::size_t cc = c; cc <= static_cast<std::size_t>(k); ++cc) a[r][cc] -= f * a[pivot_row][cc];
      }
      pivots.push_back(c);
      ++pivot_row;
    }
    bool consistent = true;
    for (std::size_t r = pivot_row; r < rows && consistent; ++r) consistent = a[r][static_cast<std::size_t>(k)] == 0;
    if (!consistent) continue;
    std::vector<Rational> coeffs(static_cast<std::size_t>(k), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) coeffs[pivots[r]] = a[r][static_cast<std::size_t>(k)];
    return CycNum::from_coeffs(d, std::move(coeffs));
  }
  return x;
}

bool CycNum::is_rational() const {
  return coeffs_.empty() ||
         std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycNum::is_one() const { return !coeffs_.empty() && is_rational() && coeffs_[0] == 1; }

CycNum CycNum::lift(int m) const {
  const int n = conductor();
  if (m < 1 || m % n != 0) {
    throw GradingError(ErrorCode::InvalidConductor,
                       "cannot lift conductor " + std::to_string(n) + " to " + std::to_string(m));
  }
  if (m == n) return *this;
  const auto& target = detail::cyclo_context(m);
  if (coeffs_.empty()) return CycNum(&target, {});
  std::vector<Rational> out(static_cast<std::size_t>(target.degree), Rational(0));
  const long step = m / n;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& row = target.power_table[static_cast<std::size_t>((static_cast<long>(i) * step) % m)];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0) out[j] += coeffs_[i] * static_cast<long>(row[j]);
    }
  }
  return CycNum(&target, std::move(out));
}

CycNum CycNum::inv() const {
  if (is_zero()) throw GradingError(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_rational()) {
    std::vector<Rational> c(coeffs_.size(), Rational(0));
    c[0] = 1 / coeffs_[0];
    return CycNum(ctx_, std::move(c));
  }
  // Extended Euclid: find s with s * a = 1 mod Phi_N.
  QPoly f(ctx_->phi_poly.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = Rational(static_cast<long>(ctx_->phi_poly[i]));
  QPoly a = coeffs_;
  trim(a);
  QPoly r0 = f, r1 = a, s0, s1{Rational(1)};
  while (!r1.empty()) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because Phi_N is irreducible.
  const Rational c = r0[0];
  QPoly q, rem;
  divmod(s0, f, q, rem);
  std::vector<Rational> out(static_cast<std::size_t>(ctx_->degree), Rational(0));
  for (std::size_t i = 0; i < rem.size(); ++i) out[i] = rem[i] / c;
  return CycNum(ctx_, std::move(out));
}

CycNum CycNum::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  CycNum result(Rational(1), conductor());
  CycNum base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

namespace {
// Brings both operands to the lcm conductor.
void unify(CycNum& a, CycNum& b) {
  if (a.conductor() == b.conductor()) return;
  const int m = lcm_conductor(a.conductor(), b.conductor());
  a = a.lift(m);
  b = b.lift(m);
}
}  // namespace

CycNum& CycNum::operator+=(const CycNum& rhs) {
  if (conductor() == rhs.conductor()) {
    if (rhs.coeffs_.empty()) return *this;
    if (coeffs_.empty()) {
      coeffs_ = rhs.coeffs_;
      return *this;
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    settle();
    return *this;
  }
  CycNum r = rhs;
  unify(*this, r);
  return *this += r;
}

CycNum& CycNum::operator-=(const CycNum& rhs) {
  if (conductor() == rhs.conductor()) {
    if (rhs.coeffs_.empty()) return *this;
    if (coeffs_.empty()) {
      coeffs_ = rhs.coeffs_;
      for (auto& c : coeffs_) c = -c;
      return *this;
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    settle();
    return *this;
  }
  CycNum r = rhs;
  unify(*this, r);
  return *this -= r;
}

CycNum& CycNum::operator*=(const CycNum& rhs) {
  if (conductor() != rhs.conductor()) {
    CycNum r = rhs;
    unify(*this, r);
    return *this *= r;
  }
  if (coeffs_.empty()) return *this;
  if (rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  const auto d = coeffs_.size();
  if (rhs.is_rational()) {
    const Rational s = rhs.coeffs_[0];
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  if (is_rational()) {
    const Rational s = coeffs_[0];
    coeffs_ = rhs.coeffs_;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  const auto n = static_cast<std::size_t>(ctx_->conductor);
  std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d));
  for (std::size_t k = d; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const auto& row = ctx_->power_table[k % n];
    for (std::size_t j = 0; j < d; ++j) {
      if (row[j] != 0) out[j] += prod[k] * static_cast<long>(row[j]);
    }
  }
  coeffs_ = std::move(out);
  settle();
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& rhs) { return *this *= rhs.inv(); }

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.conductor() == b.conductor()) return a.coeffs_ == b.coeffs_;
  const int m = lcm_conductor(a.conductor(), b.conductor());
  return a.lift(m).coeffs_ == b.lift(m).coeffs_;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << coeffs_[i].get_str();
    } else {
      if (coeffs_[i] != 1) os << coeffs_[i].get_str() << "*";
      os << "z" << conductor();
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.to_string(); }

// ---------------------------------------------------------------------------
// Mat

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<CycNum> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw GradingError(ErrorCode::DimensionMismatch, "matrix entry count does not match shape");
  }
  normalize_conductor();
}

Mat::Mat(std::initializer_list<std::initializer_list<CycNum>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw GradingError(ErrorCode::DimensionMismatch, "ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
  normalize_conductor();
}

void Mat::normalize_conductor() {
  int m = 1;
  for (const auto& e : entries_) m = lcm_conductor(m, e.conductor());
  conductor_ = m;
  for (auto& e : entries_) {
    if (e.conductor() != m) e = e.lift(m);
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = CycNum(1);
  return m;
}

Mat Mat::unit(std::size_t n, std::size_t i, std::size_t j) {
  Mat m(n, n);
  m.entries_[i * n + j] = CycNum(1);
  return m;
}

Mat Mat::diagonal(std::span<const CycNum> diag) {
  const std::size_t n = diag.size();
  std::vector<CycNum> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = diag[i];
  return Mat(n, n, std::move(e));
}

Mat Mat::from_flat(std::size_t n, std::span<const CycNum> flat) {
  if (flat.size() != n * n) throw GradingError(ErrorCode::DimensionMismatch, "flat vector length is not n^2");
  return Mat(n, n, std::vector<CycNum>(flat.begin(), flat.end()));
}

void Mat::set(std::size_t i, std::size_t j, const CycNum& value) {
  if (value.conductor() == conductor_) {
    entries_[i * cols_ + j] = value;
    return;
  }
  const int m = lcm_conductor(conductor_, value.conductor());
  if (m != conductor_) {
    for (auto& e : entries_) e = e.lift(m);
    conductor_ = m;
  }
  entries_[i * cols_ + j] = value.lift(m);
}

Mat Mat::lifted(int m) const {
  if (m == conductor_) return *this;
  Mat out = *this;
  for (auto& e : out.entries_) e = e.lift(m);
  out.conductor_ = m;
  return out;
}

Mat Mat::transpose() const {
  Mat out(cols_, rows_);
  out.conductor_ = conductor_;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.entries_[j * rows_ + i] = entries_[i * cols_ + j];
  return out;
}

CycNum Mat::trace() const {
  CycNum t(Rational(0), conductor_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += entries_[i * cols_ + i];
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const CycNum& e) { return e.is_zero(); });
}

Mat Mat::inverse() const {
  if (!is_square()) throw GradingError(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = rows_;
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, (*this)(i, j));
    aug.set(i, n + i, CycNum(1));
  }
  RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) {
    throw GradingError(ErrorCode::DivisionByZero, "matrix is singular");
  }
  Mat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, r.reduced(i, n + j));
  return out;
}

Mat Mat::pow(unsigned k) const {
  Mat result = identity(rows_);
  Mat base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Mat Mat::operator-() const {
  Mat out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

Mat& Mat::operator+=(const Mat& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw GradingError(ErrorCode::DimensionMismatch, "matrix sum");
  const int m = lcm_conductor(conductor_, rhs.conductor_);
  if (m != conductor_) *this = lifted(m);
  const Mat& r = rhs.conductor_ == m ? rhs : rhs.lifted(m);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += r.entries_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& rhs) { return *this += -rhs; }

Mat& Mat::operator*=(const CycNum& scalar) {
  const int m = lcm_conductor(conductor_, scalar.conductor());
  if (m != conductor_) *this = lifted(m);
  const CycNum s = scalar.lift(m);
  for (auto& e : entries_) e *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw GradingError(ErrorCode::DimensionMismatch, "matrix product shape");
  const int m = lcm_conductor(a.conductor_, b.conductor_);
  const Mat& x = a.conductor_ == m ? a : a.lifted(m);
  const Mat& y = b.conductor_ == m ? b : b.lifted(m);
  Mat out(a.rows_, b.cols_);
  out.conductor_ = m;
  const CycNum zero(Rational(0), m);
  std::fill(out.entries_.begin(), out.entries_.end(), zero);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycNum& xik = x.entries_[i * a.cols_ + k];
      if (xik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const CycNum& ykj = y.entries_[k * b.cols_ + j];
        if (ykj.is_zero()) continue;
        out.entries_[i * b.cols_ + j] += xik * ykj;
      }
    }
  }
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : ", [");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j == 0 ? "" : ", ") << m(i, j);
    os << "]";
  }
  return os << "]";
}

Mat kron(const Mat& a, const Mat& b) {
  const std::size_t r = a.rows() * b.rows();
  const std::size_t c = a.cols() * b.cols();
  std::vector<CycNum> e(r * c);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const CycNum& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          e[(i * b.rows() + k) * c + (j * b.cols() + l)] = aij * b(k, l);
        }
    }
  return Mat(r, c, std::move(e));
}

Mat bracket(const Mat& x, const Mat& y) { return x * y - y * x; }

// ---------------------------------------------------------------------------
// RREF and subspaces

namespace {

int common_conductor(const std::vector<Vec>& rows) {
  int m = 1;
  for (const auto& r : rows)
    for (const auto& e : r) m = lcm_conductor(m, e.conductor());
  return m;
}

void lift_rows(std::vector<Vec>& rows, int m) {
  for (auto& r : rows)
    for (auto& e : r)
      if (e.conductor() != m) e = e.lift(m);
}

// In-place RREF on rows of width ncols; returns pivot columns. Rows beyond
// the rank are left zero.
std::vector<std::size_t> rref_rows(std::vector<Vec>& rows, std::size_t ncols) {
  lift_rows(rows, common_conductor(rows));
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < rows.size(); ++col) {
    std::size_t p = row;
    while (p < rows.size() && rows[p][col].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[row], rows[p]);
    Vec& prow = rows[row];
    if (!prow[col].is_one()) {
      const CycNum inv = prow[col].inv();
      for (std::size_t j = col; j < ncols; ++j)
        if (!prow[j].is_zero()) prow[j] *= inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == row || rows[r][col].is_zero()) continue;
      const CycNum factor = rows[r][col];
      for (std::size_t j = col; j < ncols; ++j)
        if (!prow[j].is_zero()) rows[r][j] -= factor * prow[j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RrefResult rref(const Mat& m) {
  std::vector<Vec> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    rows[i].assign(m.entries().begin() + static_cast<std::ptrdiff_t>(i * m.cols()),
                   m.entries().begin() + static_cast<std::ptrdiff_t>((i + 1) * m.cols()));
  RrefResult result;
  result.pivots = rref_rows(rows, m.cols());
  result.rank = result.pivots.size();
  std::vector<CycNum> flat;
  flat.reserve(m.rows() * m.cols());
  for (auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  result.reduced = Mat(m.rows(), m.cols(), std::move(flat));
  return result;
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const Vec> vectors) {
  Subspace s(ambient_dim);
  std::vector<Vec> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) {
      throw GradingError(ErrorCode::DimensionMismatch, "vector length " + std::to_string(v.size()) +
                                                           " in ambient dimension " + std::to_string(ambient_dim));
    }
    if (std::any_of(v.begin(), v.end(), [](const CycNum& e) { return !e.is_zero(); })) rows.push_back(v);
  }
  s.pivots_ = rref_rows(rows, ambient_dim);
  rows.resize(s.pivots_.size());
  s.basis_ = std::move(rows);
  return s;
}

int Subspace::conductor() const { return common_conductor(basis_); }

Vec Subspace::residual(const Vec& v) const {
  if (v.size() != ambient_dim_) throw GradingError(ErrorCode::DimensionMismatch, "vector/subspace dimension");
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const CycNum c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = pivots_[i]; j < ambient_dim_; ++j)
      if (!basis_[i][j].is_zero()) r[j] -= c * basis_[i][j];
  }
  return r;
}

bool Subspace::contains(const Vec& v) const {
  const Vec r = residual(v);
  return std::all_of(r.begin(), r.end(), [](const CycNum& e) { return e.is_zero(); });
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_dim_ == b.ambient_dim_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

Subspace span(std::size_t ambient_dim, std::span<const Vec> vectors) {
  return Subspace::span(ambient_dim, vectors);
}

bool subspace_eq(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw GradingError(ErrorCode::DimensionMismatch, "subspace_eq");
  return a == b;
}

bool subspace_contains(const Subspace& a, const Vec& v) { return a.contains(v); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw GradingError(ErrorCode::DimensionMismatch, "subspace_sum");
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  std::vector<Vec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw GradingError(ErrorCode::DimensionMismatch, "subspace_intersect");
  const std::size_t d = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace(d);
  // Zassenhaus: rows (a | a) and (b | 0); rows whose left half vanishes
  // after reduction carry a basis of the intersection in their right half.
  std::vector<Vec> rows;
  for (const auto& v : a.basis()) {
    Vec r = v;
    r.insert(r.end(), v.begin(), v.end());
    rows.push_back(std::move(r));
  }
  for (const auto& v : b.basis()) {
    Vec r = v;
    r.resize(2 * d);
    rows.push_back(std::move(r));
  }
  const auto pivots = rref_rows(rows, 2 * d);
  std::vector<Vec> inter;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= d) inter.emplace_back(rows[i].begin() + static_cast<std::ptrdiff_t>(d), rows[i].end());
  }
  return Subspace::span(d, inter);
}

std::optional<Vec> solve_in_span(std::span<const Vec> vectors, const Vec& v) {
  const std::size_t k = vectors.size();
  const std::size_t d = v.size();
  std::vector<Vec> rows(d, Vec(k + 1));
  for (std::size_t j = 0; j < k; ++j) {
    if (vectors[j].size() != d) throw GradingError(ErrorCode::DimensionMismatch, "solve_in_span");
    for (std::size_t i = 0; i < d; ++i) rows[i][j] = vectors[j][i];
  }
  for (std::size_t i = 0; i < d; ++i) rows[i][k] = v[i];
  const auto pivots = rref_rows(rows, k + 1);
  Vec coords(k);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == k) return std::nullopt;
    coords[pivots[i]] = rows[i][k];
  }
  return coords;
}

}  // namespace gradings
