#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N) and exact linear algebra
// (RREF, rank, subspace operations) over them. No floating point anywhere.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gradings {

using Rational = mpq_class;

/// Phi_N as integer coefficients, lowest degree first. Computed as
/// (x^N - 1) / prod_{d | N, d < N} Phi_d(x) by exact division.
std::vector<std::int64_t> cyclotomic_poly(int n);

/// Euler's totient.
int euler_phi(int n);

namespace detail {
struct CycloContext;
const CycloContext& cyclo_context(int conductor);
}  // namespace detail

/// Element of Q(zeta_N) stored as its canonical residue modulo Phi_N, i.e.
/// exactly phi(N) rational coefficients on 1, x, ..., x^{phi(N)-1}.
///
/// Binary operations on mixed conductors lift both operands to the lcm
/// first. Equality compares after lifting, so the same field element stored
/// at conductors 2 and 4 compares equal.
class CycNum {
 public:
  CycNum();
  CycNum(long value);  // NOLINT(google-explicit-constructor)
  CycNum(const Rational& value, int conductor = 1);  // NOLINT(google-explicit-constructor)

  /// The canonical primitive N-th root of unity, the class of x mod Phi_N.
  static CycNum zeta(int n);
  /// zeta(n)^k for any integer k.
  static CycNum root_of_unity(int n, long k);
  /// Builds from raw residue coefficients; the length must be phi(conductor).
  static CycNum from_coeffs(int conductor, std::vector<Rational> coeffs);

  int conductor() const;
  const std::vector<Rational>& coeffs() const;

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  /// True when the value lies in Q (only the constant coefficient is set).
  bool is_rational() const;

  /// Re-expresses the value in Q(zeta_M); requires conductor() | M.
  CycNum lift(int m) const;
  CycNum inv() const;
  CycNum pow(long k) const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& rhs);
  CycNum& operator-=(const CycNum& rhs);
  CycNum& operator*=(const CycNum& rhs);
  CycNum& operator/=(const CycNum& rhs);

  friend CycNum operator+(CycNum lhs, const CycNum& rhs) { return lhs += rhs; }
  friend CycNum operator-(CycNum lhs, const CycNum& rhs) { return lhs -= rhs; }
  friend CycNum operator*(CycNum lhs, const CycNum& rhs) { return lhs *= rhs; }
  friend CycNum operator/(CycNum lhs, const CycNum& rhs) { return lhs /= rhs; }
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  /// Human-readable form, e.g. "1/2 + 3*z8^2" (z8 = zeta(8)).
  std::string to_string() const;

 private:
  CycNum(const detail::CycloContext* ctx, std::vector<Rational> coeffs);
  void settle();

  const detail::CycloContext* ctx_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

// Free-function spellings of the field operations.
inline CycNum zeta(int n) { return CycNum::zeta(n); }
inline CycNum cyc_add(const CycNum& a, const CycNum& b) { return a + b; }
inline CycNum cyc_mul(const CycNum& a, const CycNum& b) { return a * b; }
inline CycNum cyc_neg(const CycNum& a) { return -a; }
inline CycNum cyc_inv(const CycNum& a) { return a.inv(); }
inline bool cyc_eq(const CycNum& a, const CycNum& b) { return a == b; }
inline CycNum lift(const CycNum& x, int m) { return x.lift(m); }

int lcm_conductor(int a, int b);

/// The same value at the smallest conductor whose field contains it.
CycNum descend(const CycNum& x);

using Vec = std::vector<CycNum>;

/// Dense row-major matrix over a cyclotomic field. All entries are kept at
/// one common conductor.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::size_t rows, std::size_t cols, std::vector<CycNum> entries);
  Mat(std::initializer_list<std::initializer_list<CycNum>> rows);

  static Mat identity(std::size_t n);
  /// Matrix unit E_ij (zero-based indices).
  static Mat unit(std::size_t n, std::size_t i, std::size_t j);
  static Mat diagonal(std::span<const CycNum> diag);
  /// Square matrix of order n from a row-major flattening of length n*n.
  static Mat from_flat(std::size_t n, std::span<const CycNum> flat);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  int conductor() const { return conductor_; }
  const std::vector<CycNum>& entries() const { return entries_; }

  const CycNum& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const CycNum& value);

  Mat lifted(int m) const;
  Mat transpose() const;
  CycNum trace() const;
  bool is_zero() const;
  /// Row-major flattening.
  Vec flatten() const { return entries_; }
  /// Throws GradingError(DivisionByZero) when singular.
  Mat inverse() const;
  Mat pow(unsigned k) const;

  Mat operator-() const;
  Mat& operator+=(const Mat& rhs);
  Mat& operator-=(const Mat& rhs);
  Mat& operator*=(const CycNum& scalar);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const CycNum& s) { return a *= s; }
  friend Mat operator*(const CycNum& s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  void normalize_conductor();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int conductor_ = 1;
  std::vector<CycNum> entries_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

/// Kronecker product with block structure (a (x) b)_{(i,k),(j,l)} = a_ij * b_kl.
Mat kron(const Mat& a, const Mat& b);
/// XY - YX.
Mat bracket(const Mat& x, const Mat& y);

struct RrefResult {
  Mat reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivot choice: leftmost nonzero column, topmost
/// available row.
RrefResult rref(const Mat& m);

/// Subspace of F^d in canonical form (RREF basis, leading ones). Two
/// Subspaces are equal iff their canonical bases are equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, std::span<const Vec> vectors);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// lcm of the conductors of the basis entries (1 for the zero space).
  int conductor() const;

  bool contains(const Vec& v) const;
  /// Reduces v modulo the basis; zero iff v is in the subspace.
  Vec residual(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace span(std::size_t ambient_dim, std::span<const Vec> vectors);
bool subspace_eq(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, const Vec& v);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// Coordinates of v with respect to the given linearly independent vectors;
/// nullopt when v is not in their span.
std::optional<Vec> solve_in_span(std::span<const Vec> vectors, const Vec& v);

}  // namespace gradings
