#include "gradings/liegrad.hpp"

#include <set>
#include <string>

#include "gradings/error.hpp"

namespace gradings {

namespace {

void require_marker(const FinAbGroup& group, const GroupElem& h) {
  if (h.group() != group) throw GradingError(ErrorCode::BadMarker, "marker is not an element of the grading group");
  if (elem_order(h) != 2) {
    throw GradingError(ErrorCode::BadMarker, "marker " + h.to_string() + " does not have order 2");
  }
}

std::map<GroupElem, Subspace> spans_of(std::size_t n, const std::map<GroupElem, std::vector<Mat>>& mats) {
  std::map<GroupElem, Subspace> out;
  for (const auto& [g, ms] : mats) out.emplace(g, span_matrices(n, ms));
  return out;
}

void check_embedding(const GroupHom& emb, const FinAbGroup& source, const FinAbGroup& target) {
  if (emb.source() != source || emb.target() != target) {
    throw GradingError(ErrorCode::GroupMismatch, "embedding expects " + source.to_string() + " -> " +
                                                     target.to_string() + ", got " + emb.source().to_string() +
                                                     " -> " + emb.target().to_string());
  }
  if (!emb.is_injective()) throw GradingError(ErrorCode::BadEmbedding, "support group embedding is not injective");
}

}  // namespace

Grading type1(const Grading& assoc) {
  if (assoc.n() < 2) throw GradingError(ErrorCode::TooSmall, "sl(n) needs n >= 2");
  if (assoc.kind() == GradingKind::Lie) throw GradingError(ErrorCode::KindMismatch, "type1 needs an associative grading");
  const Subspace sl = traceless_subspace(assoc.n());
  std::map<GroupElem, Subspace> comps;
  for (const auto& [g, s] : assoc.components()) comps.emplace(g, subspace_intersect(s, sl));
  return Grading(assoc.group(), assoc.n(), GradingKind::Lie, std::move(comps));
}

FinAbGroup fine_support_group(const std::vector<std::size_t>& orders) {
  std::vector<int> factors;
  for (std::size_t k : orders) {
    if (k < 1) throw GradingError(ErrorCode::InvalidOrder, "epsilon factor order must be >= 1");
    factors.push_back(static_cast<int>(k));
    factors.push_back(static_cast<int>(k));
  }
  return FinAbGroup(factors);
}

std::map<GroupElem, Mat> fine_basis(const std::vector<std::size_t>& orders) {
  const FinAbGroup t = fine_support_group(orders);
  std::map<std::vector<int>, Mat> acc{{{}, Mat::identity(1)}};
  for (std::size_t k : orders) {
    std::map<std::vector<int>, Mat> next;
    const auto piece = epsilon_basis(k);
    for (const auto& [e, x] : acc) {
      for (const auto& [u, y] : piece) {
        auto key = e;
        key.insert(key.end(), u.exponents().begin(), u.exponents().end());
        next.emplace(std::move(key), kron(x, y));
      }
    }
    acc = std::move(next);
  }
  std::map<GroupElem, Mat> out;
  for (auto& [e, x] : acc) out.emplace(GroupElem(t, e), std::move(x));
  return out;
}

namespace {

std::vector<GroupElem> tuple_or_identity(const FinAbGroup& group, const std::vector<GroupElem>& tuple) {
  return tuple.empty() ? std::vector<GroupElem>{GroupElem::identity(group)} : tuple;
}

// X_t mapped into G, after checking the embedding and the support condition.
std::map<GroupElem, Mat> embedded_fine_basis(const FinAbGroup& group, const std::vector<GroupElem>& tuple,
                                             const std::vector<std::size_t>& orders, const GroupHom& t_embedding) {
  check_embedding(t_embedding, fine_support_group(orders), group);
  std::set<GroupElem> elementary;
  for (const auto& a : tuple)
    for (const auto& b : tuple) elementary.insert(elem_inv(a) * b);
  std::map<GroupElem, Mat> out;
  for (const auto& [t, x] : fine_basis(orders)) {
    const GroupElem g = t_embedding(t);
    if (!g.is_identity() && elementary.count(g)) {
      throw GradingError(ErrorCode::SupportClash, "fine support meets the elementary support in " + g.to_string());
    }
    out.emplace(g, x);
  }
  return out;
}

}  // namespace

Grading tensor_form_grading(const FinAbGroup& group, const std::vector<GroupElem>& tuple,
                            const std::vector<std::size_t>& orders, const GroupHom& t_embedding) {
  const auto tau = tuple_or_identity(group, tuple);
  const auto xs = embedded_fine_basis(group, tau, orders, t_embedding);
  const Grading a = elementary_grading(group, tau.size(), tau);
  std::map<GroupElem, Subspace> comps;
  std::size_t q = 1;
  for (std::size_t k : orders) q *= k;
  for (const auto& [g, x] : xs) comps.emplace(g, span_matrices(q, {x}));
  const Grading b(group, q, GradingKind::Associative, std::move(comps));
  return tensor_grading(a, b, group, GroupHom::identity(group), GroupHom::identity(group));
}

Grading type1_explicit(const FinAbGroup& group, const std::vector<GroupElem>& tuple,
                       const std::vector<std::size_t>& orders, const GroupHom& t_embedding) {
  const auto tau = tuple_or_identity(group, tuple);
  const auto xs = embedded_fine_basis(group, tau, orders, t_embedding);
  const std::size_t p = tau.size();
  std::size_t q = 1;
  for (std::size_t k : orders) q *= k;
  if (p * q < 2) throw GradingError(ErrorCode::TooSmall, "sl(n) needs n >= 2");
  std::map<GroupElem, std::vector<Mat>> mats;
  for (const auto& [t, x] : xs) {
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j)
        if (i != j) mats[elem_inv(tau[i]) * tau[j] * t].push_back(kron(Mat::unit(p, i, j), x));
    for (std::size_t i = 1; i < p; ++i) mats[t].push_back(kron(Mat::unit(p, 0, 0) - Mat::unit(p, i, i), x));
    if (!t.is_identity()) mats[t].push_back(kron(Mat::unit(p, 0, 0), x));
  }
  return Grading(group, p * q, GradingKind::Lie, spans_of(p * q, mats));
}

Grading type2(const Grading& grading, const Involution& inv, const GroupElem& h) {
  require_marker(grading.group(), h);
  if (grading.kind() == GradingKind::Lie) {
    throw GradingError(ErrorCode::NotInvolutionGrading, "type2 needs an associative involution grading");
  }
  if (grading.n() != inv.n) throw GradingError(ErrorCode::DimensionMismatch, "involution order mismatch");
  VerificationReport direct;
  check_direct_sum(grading, direct);
  if (!direct.passed()) throw GradingError(ErrorCode::NotInvolutionGrading, direct.summary());

  std::map<GroupElem, SymSkewSplit> split;
  for (const auto& [g, s] : grading.components()) {
    try {
      split.emplace(g, sym_skew_split(s, inv));
    } catch (const GradingError& e) {
      if (e.code() != ErrorCode::NotInvolutionStable) throw;
      throw GradingError(ErrorCode::NotInvolutionGrading, "component " + g.to_string() + " is not *-stable");
    }
  }
  const std::size_t n = grading.n();
  const std::size_t d = n * n;
  const Subspace sl = traceless_subspace(n);
  const GroupElem e = GroupElem::identity(grading.group());
  auto skew_at = [&](const GroupElem& g) {
    auto it = split.find(g);
    return it == split.end() ? Subspace(d) : it->second.skew;
  };
  auto sym_at = [&](const GroupElem& g) {
    auto it = split.find(g);
    return it == split.end() ? Subspace(d) : it->second.symmetric;
  };
  std::map<GroupElem, Subspace> comps;
  for (const auto& g : elements(grading.group())) {
    const Subspace plus = g == h ? subspace_intersect(sym_at(e), sl) : sym_at(g * h);
    comps.emplace(g, subspace_sum(skew_at(g), plus));
  }
  return Grading(grading.group(), n, GradingKind::Lie, std::move(comps));
}

Grading type2(const InvolutionGrading& data, const GroupElem& h) { return type2(data.grading, data.involution, h); }

VerificationReport verify_lie(const Grading& grading) {
  VerificationReport report;
  if (grading.kind() != GradingKind::Lie) {
    report.violations.push_back(
        Violation{"kind", std::nullopt, std::nullopt, 0, 0, "Lie verification of a non-Lie grading"});
    return report;
  }
  check_direct_sum(grading, report);
  for (const auto& [g, s] : grading.components()) {
    const auto basis = grading.basis_matrices(g);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!basis[i].trace().is_zero()) {
        report.violations.push_back(Violation{"trace", g, std::nullopt, i, 0, "basis matrix has nonzero trace"});
      }
    }
  }
  check_closure(grading, [](const Mat& x, const Mat& y) { return bracket(x, y); }, report);
  return report;
}

Mat outer_action(const Involution& inv, const Mat& x) { return -apply_involution(inv, x); }

MatMap type2_character_action(const InvolutionGrading& data, const Character& phi) {
  if (phi.group() != data.grading.group()) {
    throw GradingError(ErrorCode::GroupMismatch, "character and grading groups differ");
  }
  return [data, phi](const Mat& x) { return outer_action(data.involution, chi_action(phi, x, data.grading)); };
}

Grading recover_from_factor(const Grading& factor, const MatMap& action, const Character& phi,
                            const FinAbGroup& group, const GroupElem& h) {
  require_marker(group, h);
  if (phi.group() != group) throw GradingError(ErrorCode::GroupMismatch, "character is not a character of G");
  if (!(char_eval(phi, h) == CycNum(-1))) throw GradingError(ErrorCode::BadMarker, "phi(h) must be -1");
  const Quotient q = quotient(group, subgroup_generated(group, std::vector<GroupElem>{h}));
  if (factor.group() != q.group) {
    throw GradingError(ErrorCode::GroupMismatch, "factor grading group " + factor.group().to_string() +
                                                     " is not G/<h> = " + q.group.to_string());
  }
  const std::size_t n = factor.n();
  std::map<GroupElem, std::vector<GroupElem>> cosets;
  for (const auto& a : elements(group)) cosets[q.project(a)].push_back(a);

  std::map<GroupElem, Subspace> comps;
  for (const auto& [gbar, s] : factor.components()) {
    const auto& reps = cosets.at(gbar);
    const CycNum square = char_eval(phi, reps.front()).pow(2);
    std::vector<std::pair<Mat, Mat>> images;
    for (const auto& x : factor.basis_matrices(gbar)) {
      const Mat y = action(x);
      if (!s.contains(y.flatten())) {
        throw GradingError(ErrorCode::NotStable, "action does not preserve the component at " + gbar.to_string());
      }
      if (action(y) != x * square) {
        throw GradingError(ErrorCode::BadSquare,
                           "action squared is not phi(a)^2 on the component at " + gbar.to_string());
      }
      images.emplace_back(x, y);
    }
    for (const auto& a : reps) {
      const CycNum c = char_eval(phi, a).inv();
      std::vector<Mat> mats;
      for (const auto& [x, y] : images) mats.push_back(x + y * c);
      comps.emplace(a, span_matrices(n, mats));
    }
  }
  return Grading(group, n, factor.kind(), std::move(comps));
}

namespace {

std::vector<GroupHom> klein_embeddings(std::size_t k, const FinAbGroup& group, const GroupHom& t_embedding) {
  const FinAbGroup klein({2, 2});
  std::vector<GroupHom> out;
  for (std::size_t i = 0; i < k; ++i) {
    out.emplace_back(klein, group,
                     std::vector<GroupElem>{t_embedding(GroupElem::generator(t_embedding.source(), 2 * i)),
                                            t_embedding(GroupElem::generator(t_embedding.source(), 2 * i + 1))});
  }
  return out;
}

}  // namespace

InvolutionGrading fine_involution_grading(const std::vector<int>& cases, const FinAbGroup& group,
                                          const GroupHom& t_embedding) {
  if (cases.empty()) throw GradingError(ErrorCode::InvalidOrder, "at least one 2x2 factor is required");
  check_embedding(t_embedding, fine_support_group(std::vector<std::size_t>(cases.size(), 2)), group);
  std::vector<InvolutionGrading> parts;
  for (int c : cases) parts.push_back(canonical_L6(c));
  return involution_tensor(parts, group, klein_embeddings(cases.size(), group, t_embedding));
}

Grading fine_outer(const std::vector<int>& cases, const FinAbGroup& group, const GroupElem& h,
                   const GroupHom& t_embedding) {
  require_marker(group, h);
  const InvolutionGrading data = fine_involution_grading(cases, group, t_embedding);
  const SignFunction& beta = *data.signs;
  const std::size_t n = data.grading.n();
  std::map<GroupElem, std::vector<Mat>> mats;
  if (!beta.values.count(h)) {
    for (const auto& [t, x] : beta.basis) {
      if (beta(t) == -1) {
        mats[t].push_back(x);
      } else if (!t.is_identity()) {
        mats[t * h].push_back(x);
      }
    }
  } else {
    for (const auto& [t, x] : beta.basis) {
      const GroupElem th = t * h;
      if (beta(t) == -1) mats[t].push_back(x);
      if (t != h && beta(th) == 1) mats[t].push_back(beta.basis.at(th));
    }
  }
  return Grading(group, n, GradingKind::Lie, spans_of(n, mats));
}

namespace {

struct MixedParts {
  ElementaryInvolution elementary;
  std::optional<InvolutionGrading> fine;
};

MixedParts mixed_parts(const FinAbGroup& group, const std::vector<GroupElem>& tuple, InvolutionFlavor flavor,
                       const std::vector<int>& cases, const GroupHom& t_embedding,
                       std::optional<std::size_t> pairs) {
  const bool trivial = tuple.empty();
  MixedParts out{elementary_involution_grading(group, tuple_or_identity(group, tuple),
                                               trivial ? InvolutionFlavor::Transpose : flavor,
                                               trivial ? std::nullopt : pairs),
                 std::nullopt};
  if (cases.empty()) return out;
  out.fine = fine_involution_grading(cases, group, t_embedding);
  for (const auto& [g, s] : out.elementary.data.grading.components()) {
    if (!g.is_identity() && out.fine->signs->values.count(g)) {
      throw GradingError(ErrorCode::SupportClash, "fine support meets the elementary support in " + g.to_string());
    }
  }
  return out;
}

}  // namespace

InvolutionGrading mixed_involution_grading(const FinAbGroup& group, const std::vector<GroupElem>& tuple,
                                           InvolutionFlavor flavor, const std::vector<int>& cases,
                                           const GroupHom& t_embedding, std::optional<std::size_t> pairs) {
  const MixedParts parts = mixed_parts(group, tuple, flavor, cases, t_embedding, pairs);
  if (!parts.fine) return parts.elementary.data;
  std::vector<InvolutionGrading> all{parts.elementary.data};
  std::vector<GroupHom> embs{GroupHom::identity(group)};
  for (const auto& c : cases) all.push_back(canonical_L6(c));
  for (auto& e : klein_embeddings(cases.size(), group, t_embedding)) embs.push_back(std::move(e));
  return involution_tensor(all, group, embs);
}

Grading mixed_type2(const FinAbGroup& group, const std::vector<GroupElem>& tuple, InvolutionFlavor flavor,
                    const std::vector<int>& cases, const GroupHom& t_embedding, const GroupElem& h,
                    std::optional<std::size_t> pairs) {
  require_marker(group, h);
  const MixedParts parts = mixed_parts(group, tuple, flavor, cases, t_embedding, pairs);
  const InvolutionGrading& a = parts.elementary.data;
  const std::size_t p = a.grading.n();

  SignFunction beta{group, {}, {}};
  if (parts.fine) {
    beta = *parts.fine->signs;
  } else {
    beta.values.emplace(GroupElem::identity(group), 1);
    beta.basis.emplace(GroupElem::identity(group), Mat::identity(1));
  }
  const std::size_t q = beta.basis.begin()->second.rows();
  const std::size_t n = p * q;

  std::map<GroupElem, std::vector<Mat>> mats;
  std::vector<Mat> symmetric_identity;
  for (const auto& [g, s] : a.grading.components()) {
    const SymSkewSplit split = sym_skew_split(s, a.involution);
    for (int sign : {-1, 1}) {
      const Subspace& part = sign < 0 ? split.skew : split.symmetric;
      for (const auto& row : part.basis()) {
        const Mat y = Mat::from_flat(p, row);
        for (const auto& [t, x] : beta.basis) {
          const GroupElem deg = g * t;
          if (sign * beta(t) < 0) {
            mats[deg].push_back(kron(y, x));
          } else if (!deg.is_identity()) {
            mats[deg * h].push_back(kron(y, x));
          } else {
            symmetric_identity.push_back(y);
          }
        }
      }
    }
  }
  const Subspace traceless_sym = subspace_intersect(span_matrices(p, symmetric_identity), traceless_subspace(p));
  for (const auto& row : traceless_sym.basis()) mats[h].push_back(kron(Mat::from_flat(p, row), Mat::identity(q)));
  return Grading(group, n, GradingKind::Lie, spans_of(n, mats));
}

ObstructionReport type1_obstruction(std::size_t n) {
  if (n < 2) throw GradingError(ErrorCode::TooSmall, "obstruction check needs n >= 2");
  ObstructionReport r;
  r.n = n;
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t l = n - k;
    ++r.pairs_checked;
    if (k * k + l * l == n * (n - 1) / 2 + 1 && 2 * k * l + 1 == n * (n + 1) / 2) r.solutions.emplace_back(k, l);
  }
  return r;
}

}  // namespace gradings
