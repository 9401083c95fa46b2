#pragma once

// Involutions X* = Phi^{-1} (X^t) Phi of M_n, symmetric/skew splits, the
// canonical 2x2 forms, elementary involution gradings and their tensor
// products with the sign rule.

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "gradings/matalg.hpp"

namespace gradings {

enum class SymKind { Symmetric, Skew };

std::string_view symkind_name(SymKind kind);
/// Accepts "symmetric" and "skew".
SymKind parse_symkind(std::string_view name);

struct Involution {
  std::size_t n = 0;
  Mat phi;  // first nonzero entry (row-major) is 1
  Mat phi_inv;
  SymKind symkind = SymKind::Symmetric;

  friend bool operator==(const Involution& a, const Involution& b) {
    return a.n == b.n && a.symkind == b.symkind && a.phi == b.phi;
  }
};

/// Throws SingularForm, MixedSymmetry or DimensionMismatch (non-square).
Involution make_involution(const Mat& phi);
Mat apply_involution(const Involution& inv, const Mat& x);

/// beta(t) with X_t* = beta(t) X_t, stored per support element together with
/// the basis matrix X_t it was read from.
struct SignFunction {
  FinAbGroup group;
  std::map<GroupElem, int> values;
  std::map<GroupElem, Mat> basis;

  int operator()(const GroupElem& t) const { return values.at(t); }
};

/// Reads beta off a one-matrix-per-element basis. Throws NotInvolutionGrading
/// when some X_t* is not +-X_t.
SignFunction read_signs(const FinAbGroup& group, const std::map<GroupElem, Mat>& basis, const Involution& inv);

struct SymSkewSplit {
  Subspace symmetric;
  Subspace skew;
};

/// Throws NotInvolutionStable when V* is not contained in V.
SymSkewSplit sym_skew_split(const Subspace& v, const Involution& inv);

/// verify_assoc plus stability of every component under inv.
VerificationReport verify_involution_grading(const Grading& grading, const Involution& inv);

/// A grading of kind Involution together with its involution. Fine parts also
/// carry their sign function.
struct InvolutionGrading {
  Grading grading;
  Involution involution;
  std::optional<SignFunction> signs;
};

/// The (-1)-grading of M_2 over Z_2 x Z_2 with one of the four admissible
/// forms. Throws InvalidCase outside 1..4.
InvolutionGrading canonical_L6(int which);

enum class InvolutionFlavor { Transpose, Symplectic };

std::string_view flavor_name(InvolutionFlavor flavor);
InvolutionFlavor parse_flavor(std::string_view name);

struct ElementaryInvolution {
  InvolutionGrading data;
  std::size_t m = 0;  // transpose: leading entries with equal squares
  std::size_t l = 0;  // number of pairs (transpose) or k = n/2 (symplectic)
};

/// Transpose flavor: tuple (g_1..g_m, g_{m+1}..g_{m+l}, g_{m+l+1}..g_{m+2l})
/// with g_i^2 and g_{m+i} g_{m+l+i} all equal; Phi = diag(I_m, antidiag(I_l,
/// I_l)). Without an explicit pair count the largest admissible m is used.
/// Symplectic flavor: n = 2k, g_i g_{k+i} all equal, Phi = [[0, I], [-I, 0]].
/// Throws IncompatibleTuple or InvalidOrder.
ElementaryInvolution elementary_involution_grading(const FinAbGroup& group, const std::vector<GroupElem>& tuple,
                                                   InvolutionFlavor flavor,
                                                   std::optional<std::size_t> pairs = std::nullopt);

/// Kronecker product of the parts over the direct product of their groups.
/// Phi is the Kronecker product of the parts' forms; the sign function is
/// the product of the parts' signs when every part carries one.
InvolutionGrading involution_tensor(const std::vector<InvolutionGrading>& parts);
/// Same inside a common group; embedded supports must pairwise meet only in
/// the identity (SupportClash).
InvolutionGrading involution_tensor(const std::vector<InvolutionGrading>& parts, const FinAbGroup& common,
                                    const std::vector<GroupHom>& embeddings);

}  // namespace gradings
