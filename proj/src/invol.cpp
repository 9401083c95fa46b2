#include "gradings/invol.hpp"

#include <set>
#include <string>

#include "gradings/error.hpp"

namespace gradings {

std::string_view symkind_name(SymKind kind) { return kind == SymKind::Symmetric ? "symmetric" : "skew"; }

SymKind parse_symkind(std::string_view name) {
  if (name == "symmetric") return SymKind::Symmetric;
  if (name == "skew") return SymKind::Skew;
  throw GradingError(ErrorCode::MixedSymmetry, "unknown symmetry kind '" + std::string(name) + "'");
}

std::string_view flavor_name(InvolutionFlavor flavor) {
  return flavor == InvolutionFlavor::Transpose ? "transpose" : "symplectic";
}

InvolutionFlavor parse_flavor(std::string_view name) {
  if (name == "transpose") return InvolutionFlavor::Transpose;
  if (name == "symplectic") return InvolutionFlavor::Symplectic;
  throw GradingError(ErrorCode::InvalidCase, "unknown involution flavor '" + std::string(name) + "'");
}

Involution make_involution(const Mat& phi) {
  if (!phi.is_square() || phi.rows() == 0) throw GradingError(ErrorCode::DimensionMismatch, "phi must be square");
  const std::size_t n = phi.rows();
  Mat inv_phi;
  try {
    inv_phi = phi.inverse();
  } catch (const GradingError&) {
    throw GradingError(ErrorCode::SingularForm, "phi is singular");
  }
  const Mat t = phi.transpose();
  SymKind kind;
  if (t == phi) {
    kind = SymKind::Symmetric;
  } else if (t == -phi) {
    kind = SymKind::Skew;
  } else {
    throw GradingError(ErrorCode::MixedSymmetry, "phi is neither symmetric nor skew-symmetric");
  }

  CycNum lead;
  for (const auto& e : phi.entries()) {
    if (!e.is_zero()) {
      lead = e;
      break;
    }
  }
  Involution out{n, phi * lead.inv(), inv_phi * lead, kind};

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Mat u = Mat::unit(n, i, j);
      if (apply_involution(out, apply_involution(out, u)) != u) {
        throw GradingError(ErrorCode::MixedSymmetry, "induced map is not an involution");
      }
    }
  }
  return out;
}

Mat apply_involution(const Involution& inv, const Mat& x) {
  if (x.rows() != inv.n || x.cols() != inv.n) {
    throw GradingError(ErrorCode::DimensionMismatch, "matrix order does not match the involution");
  }
  return inv.phi_inv * x.transpose() * inv.phi;
}

SignFunction read_signs(const FinAbGroup& group, const std::map<GroupElem, Mat>& basis, const Involution& inv) {
  SignFunction s{group, {}, basis};
  for (const auto& [t, x] : basis) {
    const Mat y = apply_involution(inv, x);
    if (y == x) {
      s.values.emplace(t, 1);
    } else if (y == -x) {
      s.values.emplace(t, -1);
    } else {
      throw GradingError(ErrorCode::NotInvolutionGrading,
                         "basis element at " + t.to_string() + " is neither symmetric nor skew");
    }
  }
  return s;
}

SymSkewSplit sym_skew_split(const Subspace& v, const Involution& inv) {
  if (v.ambient_dim() != inv.n * inv.n) {
    throw GradingError(ErrorCode::DimensionMismatch, "subspace does not live in M_n for the involution");
  }
  const CycNum half(Rational(1, 2));
  std::vector<Vec> plus, minus;
  for (const auto& row : v.basis()) {
    const Mat x = Mat::from_flat(inv.n, row);
    const Mat y = apply_involution(inv, x);
    if (!v.contains(y.flatten())) throw GradingError(ErrorCode::NotInvolutionStable, "subspace is not *-stable");
    plus.push_back(((x + y) * half).flatten());
    minus.push_back(((x - y) * half).flatten());
  }
  return SymSkewSplit{span(v.ambient_dim(), plus), span(v.ambient_dim(), minus)};
}

VerificationReport verify_involution_grading(const Grading& grading, const Involution& inv) {
  VerificationReport report = verify_assoc(grading);
  if (grading.n() != inv.n) {
    report.violations.push_back(
        Violation{"stability", std::nullopt, std::nullopt, 0, 0, "involution order does not match the grading"});
    return report;
  }
  for (const auto& [g, s] : grading.components()) {
    const auto basis = grading.basis_matrices(g);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!s.contains(apply_involution(inv, basis[i]).flatten())) {
        report.violations.push_back(Violation{"stability", g, std::nullopt, i, 0, "component is not *-stable"});
      }
    }
  }
  return report;
}

InvolutionGrading canonical_L6(int which) {
  const CycNum z(0), p(1), m(-1);
  Mat phi;
  switch (which) {
    case 1: phi = Mat{{z, p}, {m, z}}; break;
    case 2: phi = Mat{{z, p}, {p, z}}; break;
    case 3: phi = Mat::identity(2); break;
    case 4: phi = Mat{{p, z}, {z, m}}; break;
    default: throw GradingError(ErrorCode::InvalidCase, "L6 case must be 1..4, got " + std::to_string(which));
  }
  const Involution inv = make_involution(phi);
  const Grading g = epsilon_grading(2).with_kind(GradingKind::Involution);
  return InvolutionGrading{g, inv, read_signs(g.group(), epsilon_basis(2), inv)};
}

namespace {

bool all_equal(const std::vector<GroupElem>& xs) {
  for (const auto& x : xs)
    if (x != xs.front()) return false;
  return true;
}

// The constraint values for a transpose split with m leading entries.
bool transpose_admissible(const std::vector<GroupElem>& tuple, std::size_t m) {
  const std::size_t n = tuple.size();
  if (m > n || (n - m) % 2 != 0) return false;
  const std::size_t l = (n - m) / 2;
  std::vector<GroupElem> vals;
  for (std::size_t i = 0; i < m; ++i) vals.push_back(tuple[i] * tuple[i]);
  for (std::size_t i = 0; i < l; ++i) vals.push_back(tuple[m + i] * tuple[m + l + i]);
  return all_equal(vals);
}

}  // namespace

ElementaryInvolution elementary_involution_grading(const FinAbGroup& group, const std::vector<GroupElem>& tuple,
                                                   InvolutionFlavor flavor, std::optional<std::size_t> pairs) {
  const std::size_t n = tuple.size();
  if (n == 0) throw GradingError(ErrorCode::InvalidTuple, "empty tuple");
  const Grading base = elementary_grading(group, n, tuple);
  Mat phi(n, n);
  std::size_t m = 0, l = 0;
  if (flavor == InvolutionFlavor::Symplectic) {
    if (n % 2 != 0) throw GradingError(ErrorCode::InvalidOrder, "symplectic flavor needs even n");
    l = n / 2;
    std::vector<GroupElem> vals;
    for (std::size_t i = 0; i < l; ++i) vals.push_back(tuple[i] * tuple[l + i]);
    if (!all_equal(vals)) throw GradingError(ErrorCode::IncompatibleTuple, "g_i g_{k+i} are not all equal");
    for (std::size_t i = 0; i < l; ++i) {
      phi.set(i, l + i, CycNum(1));
      phi.set(l + i, i, CycNum(-1));
    }
  } else {
    if (pairs) {
      if (2 * *pairs > n) throw GradingError(ErrorCode::IncompatibleTuple, "too many pairs for the tuple length");
      m = n - 2 * *pairs;
      if (!transpose_admissible(tuple, m)) {
        throw GradingError(ErrorCode::IncompatibleTuple, "tuple violates the transpose constraints");
      }
    } else {
      bool found = false;
      for (std::size_t k = 0; 2 * k <= n && !found; ++k) {
        if (transpose_admissible(tuple, n - 2 * k)) {
          m = n - 2 * k;
          found = true;
        }
      }
      if (!found) throw GradingError(ErrorCode::IncompatibleTuple, "no transpose split fits the tuple");
    }
    l = (n - m) / 2;
    for (std::size_t i = 0; i < m; ++i) phi.set(i, i, CycNum(1));
    for (std::size_t i = 0; i < l; ++i) {
      phi.set(m + i, m + l + i, CycNum(1));
      phi.set(m + l + i, m + i, CycNum(1));
    }
  }
  return ElementaryInvolution{
      InvolutionGrading{base.with_kind(GradingKind::Involution), make_involution(phi), std::nullopt}, m, l};
}

namespace {

void require_involution_parts(const std::vector<InvolutionGrading>& parts) {
  if (parts.empty()) throw GradingError(ErrorCode::InvalidTuple, "involution tensor needs at least one part");
  for (const auto& p : parts) {
    if (p.grading.kind() == GradingKind::Lie) {
      throw GradingError(ErrorCode::KindMismatch, "involution tensor needs associative or involution gradings");
    }
    if (p.grading.n() != p.involution.n) {
      throw GradingError(ErrorCode::DimensionMismatch, "involution order does not match its grading");
    }
  }
}

InvolutionGrading tensor_parts(const std::vector<InvolutionGrading>& parts, const FinAbGroup& common,
                               const std::vector<GroupHom>& emb) {
  std::map<GroupElem, std::vector<Mat>> acc{{GroupElem::identity(common), {Mat::identity(1)}}};
  Mat phi = Mat::identity(1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Grading& g = parts[i].grading;
    std::map<GroupElem, std::vector<Mat>> next;
    for (const auto& [t, xs] : acc) {
      for (const auto& [u, s] : g.components()) {
        auto& bucket = next[t * emb[i](u)];
        for (const auto& x : xs)
          for (const auto& y : g.basis_matrices(u)) bucket.push_back(kron(x, y));
      }
    }
    acc = std::move(next);
    phi = kron(phi, parts[i].involution.phi);
  }
  const std::size_t n = phi.rows();
  std::map<GroupElem, Subspace> comps;
  for (const auto& [t, xs] : acc) comps.emplace(t, span_matrices(n, xs));

  std::optional<SignFunction> signs;
  bool all_signed = true;
  for (const auto& p : parts) all_signed &= p.signs.has_value();
  if (all_signed) {
    SignFunction s{common, {}, {}};
    s.values.emplace(GroupElem::identity(common), 1);
    s.basis.emplace(GroupElem::identity(common), Mat::identity(1));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      SignFunction next{common, {}, {}};
      for (const auto& [t, x] : s.basis) {
        for (const auto& [u, y] : parts[i].signs->basis) {
          const GroupElem tu = t * emb[i](u);
          next.values[tu] = s.values.at(t) * parts[i].signs->values.at(u);
          next.basis[tu] = kron(x, y);
        }
      }
      s = std::move(next);
    }
    signs = std::move(s);
  }
  return InvolutionGrading{Grading(common, n, GradingKind::Involution, std::move(comps)), make_involution(phi),
                           std::move(signs)};
}

}  // namespace

InvolutionGrading involution_tensor(const std::vector<InvolutionGrading>& parts) {
  require_involution_parts(parts);
  FinAbGroup common = parts.front().grading.group();
  for (std::size_t i = 1; i < parts.size(); ++i) common = direct_product(common, parts[i].grading.group());
  std::vector<GroupHom> emb;
  std::size_t offset = 0;
  for (const auto& p : parts) {
    const auto& g = p.grading.group();
    std::vector<GroupElem> images;
    for (std::size_t j = 0; j < g.rank(); ++j) images.push_back(GroupElem::generator(common, offset + j));
    emb.emplace_back(g, common, std::move(images));
    offset += g.rank();
  }
  return tensor_parts(parts, common, emb);
}

InvolutionGrading involution_tensor(const std::vector<InvolutionGrading>& parts, const FinAbGroup& common,
                                    const std::vector<GroupHom>& embeddings) {
  require_involution_parts(parts);
  if (embeddings.size() != parts.size()) {
    throw GradingError(ErrorCode::BadEmbedding, "one embedding per part is required");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (embeddings[i].source() != parts[i].grading.group() || embeddings[i].target() != common) {
      throw GradingError(ErrorCode::GroupMismatch, "embedding does not match its part and the common group");
    }
  }
  std::vector<std::set<GroupElem>> supports;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::set<GroupElem> s;
    for (const auto& [g, c] : parts[i].grading.components()) {
      const GroupElem x = embeddings[i](g);
      if (x.is_identity()) continue;
      for (const auto& prev : supports)
        if (prev.count(x)) throw GradingError(ErrorCode::SupportClash, "supports meet in " + x.to_string());
      s.insert(x);
    }
    supports.push_back(std::move(s));
  }
  return tensor_parts(parts, common, embeddings);
}

}  // namespace gradings
