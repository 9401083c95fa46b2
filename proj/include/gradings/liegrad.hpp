#pragma once

// Gradings of sl(n) inside M_n: Type I (restriction of an associative
// grading), Type II (involution grading plus an order-2 marker), recovery of
// a grading from its factor by the marker subgroup, the explicit fine and
// mixed component formulas, and the dimension obstruction for Z_2.

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gradings/invol.hpp"

namespace gradings {

/// L_g = R_g intersect sl(n). Throws TooSmall for n < 2.
Grading type1(const Grading& assoc);

/// Z_{n_1} x Z_{n_1} x ... x Z_{n_k} x Z_{n_k}, the support group of a
/// tensor product of epsilon gradings (k = 0 gives the trivial group).
FinAbGroup fine_support_group(const std::vector<std::size_t>& orders);

/// Basis X_t = (X_a^i1 X_b^j1) (x) ... (x) (X_a^ik X_b^jk) keyed by t in the
/// support group.
std::map<GroupElem, Mat> fine_basis(const std::vector<std::size_t>& orders);

/// Associative grading of M_p (x) M_q over G: the elementary grading given by
/// the tuple tensored with the epsilon gradings of the given orders, whose
/// support group is mapped into G by t_embedding. Throws SupportClash when
/// the embedded support meets the elementary support outside e.
Grading tensor_form_grading(const FinAbGroup& group, const std::vector<GroupElem>& tuple,
                            const std::vector<std::size_t>& orders, const GroupHom& t_embedding);

/// Type I components written out on the basis E_ij (x) X_t: off-diagonal
/// units, E_ii (x) X_t for t != e, and (E_11 - E_ii) (x) I.
Grading type1_explicit(const FinAbGroup& group, const std::vector<GroupElem>& tuple,
                       const std::vector<std::size_t>& orders, const GroupHom& t_embedding);

/// L_g = R_g^(-) + R_{gh}^(+) for g != h, L_h = R_h^(-) + (R_e^(+) intersect
/// sl(n)). Throws BadMarker (h of order != 2 or from another group) and
/// NotInvolutionGrading (components not *-stable or not a direct sum).
Grading type2(const Grading& grading, const Involution& inv, const GroupElem& h);
Grading type2(const InvolutionGrading& data, const GroupElem& h);

/// Direct sum n^2 - 1, traceless bases and [L_g, L_h] in L_gh.
VerificationReport verify_lie(const Grading& grading);

/// X -> -Phi^{-1} X^t Phi. Satisfies phi(XY) = -phi(Y) phi(X).
Mat outer_action(const Involution& inv, const Mat& x);

using MatMap = std::function<Mat(const Mat&)>;

/// The action of a character phi with phi(h) = -1 on the Type II grading
/// built from data and h: X -> -(sum_k phi(k) X_k)^*, where X_k are the
/// components of X in the involution grading.
MatMap type2_character_action(const InvolutionGrading& data, const Character& phi);

/// Recovers a G-grading from its factor grading by H = <h>:
/// L_a = { X + phi(a)^{-1} action(X) : X in L_abar }. The factor must be
/// graded by quotient(G, H).group. Throws GroupMismatch, BadMarker (h of
/// order != 2 or phi(h) != -1), NotStable, BadSquare.
Grading recover_from_factor(const Grading& factor, const MatMap& action, const Character& phi,
                            const FinAbGroup& group, const GroupElem& h);

/// The involution grading of M_{2^k} obtained by tensoring the given L6
/// cases, with T = (Z_2 x Z_2)^k embedded into G. Throws BadEmbedding when
/// the embedding is not injective.
InvolutionGrading fine_involution_grading(const std::vector<int>& cases, const FinAbGroup& group,
                                          const GroupHom& t_embedding);

/// Fine outer grading of sl(2^k) read off the sign function: when h is not
/// in T, L_t = <X_t> for beta(t) = -1 and L_{th} = <X_t> for beta(t) = 1,
/// t != e; when h is in T, L_t collects X_t (beta(t) = -1) and X_{th}
/// (beta(th) = 1, th != e). Throws InvalidOrder (no cases), BadMarker,
/// BadEmbedding.
Grading fine_outer(const std::vector<int>& cases, const FinAbGroup& group, const GroupElem& h,
                   const GroupHom& t_embedding);

/// Elementary involution grading of M_p (empty tuple: p = 1) tensored with
/// the L6 cases. Throws IncompatibleTuple, SupportClash, BadEmbedding.
InvolutionGrading mixed_involution_grading(const FinAbGroup& group, const std::vector<GroupElem>& tuple,
                                           InvolutionFlavor flavor, const std::vector<int>& cases,
                                           const GroupHom& t_embedding,
                                           std::optional<std::size_t> pairs = std::nullopt);

/// Components spanned by Y (x) X_t for homogeneous Y symmetric or skew in
/// M_p: skew ones of degree g and symmetric ones of degree gh, with
/// Tr Y = 0 imposed on the symmetric Y (x) I of degree e.
Grading mixed_type2(const FinAbGroup& group, const std::vector<GroupElem>& tuple, InvolutionFlavor flavor,
                    const std::vector<int>& cases, const GroupHom& t_embedding, const GroupElem& h,
                    std::optional<std::size_t> pairs = std::nullopt);

struct ObstructionReport {
  std::size_t n = 0;
  /// (k, l) with k + l = n, k^2 + l^2 - 1 = n(n-1)/2 and 2kl = n(n+1)/2 - 1.
  std::vector<std::pair<std::size_t, std::size_t>> solutions;
  std::size_t pairs_checked = 0;

  bool solvable() const { return !solutions.empty(); }
};

/// Whether the skew/traceless-symmetric Z_2 grading of sl(n) has the
/// dimensions of a Type I grading. Throws TooSmall for n < 2.
ObstructionReport type1_obstruction(std::size_t n);

}  // namespace gradings
