#pragma once

// Gradings of the matrix algebra M_n by finite abelian groups: elementary
// and epsilon (clock/shift) gradings, tensor products, exhaustive
// verification, coarsening and the dual-group action.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gradings/cyclo.hpp"
#include "gradings/groups.hpp"

namespace gradings {

enum class GradingKind { Associative, Lie, Involution };

std::string_view kind_name(GradingKind kind);
/// Accepts "associative", "lie", "involution".
GradingKind parse_kind(std::string_view name);

/// Decomposition of M_n (or of sl(n) inside M_n, for the Lie kind) into
/// homogeneous subspaces of flattened n^2-vectors. Only nonzero components
/// are stored; the key set is the support.
class Grading {
 public:
  Grading() = default;
  Grading(FinAbGroup group, std::size_t n, GradingKind kind, std::map<GroupElem, Subspace> components);

  const FinAbGroup& group() const { return group_; }
  std::size_t n() const { return n_; }
  std::size_t ambient_dim() const { return n_ * n_; }
  GradingKind kind() const { return kind_; }
  const std::map<GroupElem, Subspace>& components() const { return components_; }
  /// The component at g, or the zero subspace.
  const Subspace& component(const GroupElem& g) const;
  /// Basis of the component at g as n x n matrices.
  std::vector<Mat> basis_matrices(const GroupElem& g) const;
  /// n^2 for associative/involution kinds, n^2 - 1 for the Lie kind.
  std::size_t expected_total_dim() const;

  /// Optional display basis (matrix units, X_a^i X_b^j, ...). Not part of
  /// equality and not serialized.
  const std::map<GroupElem, std::vector<Mat>>& named_basis() const { return named_basis_; }
  Grading with_named_basis(std::map<GroupElem, std::vector<Mat>> named) const;
  Grading with_kind(GradingKind kind) const;

  /// Same group, order and kind, and equal components over the union of
  /// supports.
  friend bool operator==(const Grading& a, const Grading& b);
  friend bool operator!=(const Grading& a, const Grading& b) { return !(a == b); }

 private:
  FinAbGroup group_;
  std::size_t n_ = 0;
  GradingKind kind_ = GradingKind::Associative;
  std::map<GroupElem, Subspace> components_;
  std::map<GroupElem, std::vector<Mat>> named_basis_;
  Subspace zero_;
};

/// Span of n x n matrices as a subspace of F^{n^2}.
Subspace span_matrices(std::size_t n, const std::vector<Mat>& mats);
/// sl(n) as a subspace of F^{n^2}.
Subspace traceless_subspace(std::size_t n);

struct Violation {
  std::string kind;  // "dimension", "closure", "trace", "stability", "kind"
  std::optional<GroupElem> g;
  std::optional<GroupElem> h;
  std::size_t i = 0;  // basis index in component g
  std::size_t j = 0;  // basis index in component h
  std::string detail;
};

struct VerificationReport {
  std::vector<Violation> violations;
  std::size_t pairs_checked = 0;
  std::size_t products_checked = 0;

  bool passed() const { return violations.empty(); }
  void merge(VerificationReport other);
  std::string summary() const;
};

using BinaryProduct = std::function<Mat(const Mat&, const Mat&)>;

/// Components are independent and sum to the expected total dimension.
void check_direct_sum(const Grading& grading, VerificationReport& report);
/// For every support pair (g, h) and basis pair (u, v): product(u, v) lies in
/// the component of gh. Violations are ordered by (g, h, i, j).
void check_closure(const Grading& grading, const BinaryProduct& product, VerificationReport& report);

/// E_ij has degree g_i^{-1} g_j.
Grading elementary_grading(const FinAbGroup& group, std::size_t n, const std::vector<GroupElem>& tuple);

/// Clock and shift matrices for a primitive n-th root of unity epsilon:
/// X_a = diag(eps^{n-1}, ..., eps, 1), X_b the cyclic shift with ones on the
/// superdiagonal and in the bottom-left corner.
struct EpsilonSeed {
  std::size_t n = 0;
  Mat x_a;
  Mat x_b;
  CycNum epsilon;
};

EpsilonSeed epsilon_seed(std::size_t n);
/// X_a^i X_b^j keyed by the element (i, j) of Z_n x Z_n.
std::map<GroupElem, Mat> epsilon_basis(std::size_t n);
/// Fine grading of M_n over Z_n x Z_n with R_{(i,j)} = span{X_a^i X_b^j}.
Grading epsilon_grading(std::size_t n);

/// Tensor product over the direct product of the two groups.
Grading tensor_grading(const Grading& a, const Grading& b);
/// Tensor product inside a common group; the embedded supports must meet
/// only in the identity.
Grading tensor_grading(const Grading& a, const Grading& b, const FinAbGroup& common, const GroupHom& embed_a,
                       const GroupHom& embed_b);

VerificationReport verify_assoc(const Grading& grading);

std::vector<GroupElem> support(const Grading& grading);

/// Factor grading by G/H: the component of a coset is the sum of the
/// components over the coset. The result is graded by quotient(G, H).group.
Grading coarsen(const Grading& grading, const Subgroup& h);

/// Homogeneous parts of x. Throws NotInAlgebra when x is outside the span
/// of the components.
std::map<GroupElem, Mat> homogeneous_decomposition(const Mat& x, const Grading& grading);
/// chi * x = sum_g chi(g) x_g.
Mat chi_action(const Character& chi, const Mat& x, const Grading& grading);
/// x_g = |G|^{-1} sum_chi chi(g)^{-1} (chi * x).
Mat homogeneous_projection(const Mat& x, const GroupElem& g, const Grading& grading);

/// V = sum_g (V intersect A_g).
bool is_graded_subspace(const Subspace& v, const Grading& grading);
/// chi * V is contained in V for every chi in lambda.
bool is_invariant_subspace(const Subspace& v, const CharacterSubgroup& lambda, const Grading& grading);

}  // namespace gradings
