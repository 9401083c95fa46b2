#include "gradings/matalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gradings/error.hpp"

namespace gradings {

std::string_view kind_name(GradingKind kind) {
  switch (kind) {
    case GradingKind::Associative: return "associative";
    case GradingKind::Lie: return "lie";
    case GradingKind::Involution: return "involution";
  }
  return "associative";
}

GradingKind parse_kind(std::string_view name) {
  if (name == "associative") return GradingKind::Associative;
  if (name == "lie") return GradingKind::Lie;
  if (name == "involution") return GradingKind::Involution;
  throw GradingError(ErrorCode::KindMismatch, "unknown grading kind '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------

Grading::Grading(FinAbGroup group, std::size_t n, GradingKind kind, std::map<GroupElem, Subspace> components)
    : group_(std::move(group)), n_(n), kind_(kind), zero_(n * n) {
  for (auto& [g, s] : components) {
    if (g.group() != group_) throw GradingError(ErrorCode::GroupMismatch, "component label outside grading group");
    if (s.ambient_dim() != n * n) throw GradingError(ErrorCode::DimensionMismatch, "component ambient dimension");
    if (!s.is_zero()) components_.emplace(g, std::move(s));
  }
}

const Subspace& Grading::component(const GroupElem& g) const {
  auto it = components_.find(g);
  return it == components_.end() ? zero_ : it->second;
}

std::vector<Mat> Grading::basis_matrices(const GroupElem& g) const {
  std::vector<Mat> out;
  for (const auto& row : component(g).basis()) out.push_back(Mat::from_flat(n_, row));
  return out;
}

std::size_t Grading::expected_total_dim() const { return kind_ == GradingKind::Lie ? n_ * n_ - 1 : n_ * n_; }

Grading Grading::with_named_basis(std::map<GroupElem, std::vector<Mat>> named) const {
  Grading out = *this;
  out.named_basis_ = std::move(named);
  return out;
}

Grading Grading::with_kind(GradingKind kind) const {
  Grading out = *this;
  out.kind_ = kind;
  return out;
}

bool operator==(const Grading& a, const Grading& b) {
  return a.group_ == b.group_ && a.n_ == b.n_ && a.kind_ == b.kind_ && a.components_ == b.components_;
}

Subspace span_matrices(std::size_t n, const std::vector<Mat>& mats) {
  std::vector<Vec> rows;
  rows.reserve(mats.size());
  for (const auto& m : mats) {
    if (m.rows() != n || m.cols() != n) throw GradingError(ErrorCode::DimensionMismatch, "span_matrices");
    rows.push_back(m.flatten());
  }
  return Subspace::span(n * n, rows);
}

Subspace traceless_subspace(std::size_t n) {
  std::vector<Mat> mats;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) mats.push_back(Mat::unit(n, i, j));
  for (std::size_t i = 1; i < n; ++i) mats.push_back(Mat::unit(n, 0, 0) - Mat::unit(n, i, i));
  return span_matrices(n, mats);
}

// ---------------------------------------------------------------------------

void VerificationReport::merge(VerificationReport other) {
  pairs_checked += other.pairs_checked;
  products_checked += other.products_checked;
  for (auto& v : other.violations) violations.push_back(std::move(v));
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << (passed() ? "PASS" : "FAIL") << ": " << violations.size() << " violation(s), " << pairs_checked
     << " component pair(s), " << products_checked << " product(s) checked";
  for (const auto& v : violations) {
    os << "\n  [" << v.kind << "]";
    if (v.g) os << " g=" << *v.g;
    if (v.h) os << " h=" << *v.h;
    if (v.kind == "closure") os << " basis (" << v.i << "," << v.j << ")";
    if (!v.detail.empty()) os << " " << v.detail;
  }
  return os.str();
}

void check_direct_sum(const Grading& grading, VerificationReport& report) {
  std::size_t total = 0;
  Subspace sum(grading.ambient_dim());
  for (const auto& [g, s] : grading.components()) {
    total += s.dim();
    sum = subspace_sum(sum, s);
  }
  const std::size_t expected = grading.expected_total_dim();
  if (total != expected || sum.dim() != expected) {
    std::ostringstream os;
    os << "component dimensions sum to " << total << ", their span has dimension " << sum.dim() << ", expected "
       << expected;
    report.violations.push_back(Violation{"dimension", std::nullopt, std::nullopt, 0, 0, os.str()});
  }
}

void check_closure(const Grading& grading, const BinaryProduct& product, VerificationReport& report) {
  std::map<GroupElem, std::vector<Mat>> bases;
  for (const auto& [g, s] : grading.components()) bases.emplace(g, grading.basis_matrices(g));
  for (const auto& [g, bg] : bases) {
    for (const auto& [h, bh] : bases) {
      const GroupElem gh = g * h;
      const Subspace& target = grading.component(gh);
      ++report.pairs_checked;
      for (std::size_t i = 0; i < bg.size(); ++i) {
        for (std::size_t j = 0; j < bh.size(); ++j) {
          ++report.products_checked;
          const Mat p = product(bg[i], bh[j]);
          if (!target.contains(p.flatten())) {
            report.violations.push_back(
                Violation{"closure", g, h, i, j, "product not in component " + gh.to_string()});
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------

Grading elementary_grading(const FinAbGroup& group, std::size_t n, const std::vector<GroupElem>& tuple) {
  if (n < 1 || tuple.size() != n) {
    throw GradingError(ErrorCode::InvalidTuple,
                       "tuple length " + std::to_string(tuple.size()) + " does not match n = " + std::to_string(n));
  }
  for (const auto& g : tuple) {
    if (g.group() != group) throw GradingError(ErrorCode::GroupMismatch, "tuple entry outside the grading group");
  }
  std::map<GroupElem, std::vector<Mat>> units;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) units[elem_inv(tuple[i]) * tuple[j]].push_back(Mat::unit(n, i, j));
  std::map<GroupElem, Subspace> comps;
  for (const auto& [g, mats] : units) comps.emplace(g, span_matrices(n, mats));
  return Grading(group, n, GradingKind::Associative, std::move(comps)).with_named_basis(std::move(units));
}

EpsilonSeed epsilon_seed(std::size_t n) {
  if (n < 1) throw GradingError(ErrorCode::InvalidOrder, "epsilon grading needs n >= 1");
  const int ni = static_cast<int>(n);
  std::vector<CycNum> diag;
  for (std::size_t i = 0; i < n; ++i) diag.push_back(CycNum::root_of_unity(ni, ni - 1 - static_cast<long>(i)));
  Mat x_b(n, n);
  for (std::size_t i = 0; i < n; ++i) x_b.set(i, (i + 1) % n, CycNum(1));
  return EpsilonSeed{n, Mat::diagonal(diag), x_b, CycNum::zeta(ni)};
}

std::map<GroupElem, Mat> epsilon_basis(std::size_t n) {
  const EpsilonSeed seed = epsilon_seed(n);
  const FinAbGroup g({static_cast<int>(n), static_cast<int>(n)});
  std::map<GroupElem, Mat> out;
  Mat a_pow = Mat::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    Mat m = a_pow;
    for (std::size_t j = 0; j < n; ++j) {
      out.emplace(GroupElem(g, {static_cast<int>(i), static_cast<int>(j)}), m);
      m = m * seed.x_b;
    }
    a_pow = a_pow * seed.x_a;
  }
  return out;
}

Grading epsilon_grading(std::size_t n) {
  const FinAbGroup g({static_cast<int>(n), static_cast<int>(n)});
  std::map<GroupElem, Subspace> comps;
  std::map<GroupElem, std::vector<Mat>> named;
  for (const auto& [t, m] : epsilon_basis(n)) {
    comps.emplace(t, span_matrices(n, {m}));
    named.emplace(t, std::vector<Mat>{m});
  }
  return Grading(g, n, GradingKind::Associative, std::move(comps)).with_named_basis(std::move(named));
}

// ---------------------------------------------------------------------------

namespace {

void require_tensor_kind(const Grading& g) {
  if (g.kind() == GradingKind::Lie) {
    throw GradingError(ErrorCode::KindMismatch, "tensor product needs associative gradings");
  }
}

Grading tensor_impl(const Grading& a, const Grading& b, const FinAbGroup& common, const GroupHom& ea,
                    const GroupHom& eb) {
  const std::size_t n = a.n() * b.n();
  std::map<GroupElem, std::vector<Vec>> rows;
  for (const auto& [g, sa] : a.components()) {
    const auto ba = a.basis_matrices(g);
    for (const auto& [h, sb] : b.components()) {
      const auto bb = b.basis_matrices(h);
      auto& bucket = rows[ea(g) * eb(h)];
      for (const auto& u : ba)
        for (const auto& v : bb) bucket.push_back(kron(u, v).flatten());
    }
  }
  std::map<GroupElem, Subspace> comps;
  for (const auto& [g, r] : rows) comps.emplace(g, Subspace::span(n * n, r));
  return Grading(common, n, GradingKind::Associative, std::move(comps));
}

}  // namespace

Grading tensor_grading(const Grading& a, const Grading& b) {
  require_tensor_kind(a);
  require_tensor_kind(b);
  return tensor_impl(a, b, direct_product(a.group(), b.group()), GroupHom::inject_left(a.group(), b.group()),
                     GroupHom::inject_right(a.group(), b.group()));
}

Grading tensor_grading(const Grading& a, const Grading& b, const FinAbGroup& common, const GroupHom& embed_a,
                       const GroupHom& embed_b) {
  require_tensor_kind(a);
  require_tensor_kind(b);
  if (embed_a.source() != a.group() || embed_b.source() != b.group() || embed_a.target() != common ||
      embed_b.target() != common) {
    throw GradingError(ErrorCode::GroupMismatch, "embeddings do not match the factor and common groups");
  }
  std::set<GroupElem> sa;
  for (const auto& [g, s] : a.components()) sa.insert(embed_a(g));
  for (const auto& [h, s] : b.components()) {
    const GroupElem x = embed_b(h);
    if (!x.is_identity() && sa.count(x)) {
      throw GradingError(ErrorCode::SupportClash, "supports meet in " + x.to_string());
    }
  }
  return tensor_impl(a, b, common, embed_a, embed_b);
}

VerificationReport verify_assoc(const Grading& grading) {
  VerificationReport report;
  if (grading.kind() == GradingKind::Lie) {
    report.violations.push_back(
        Violation{"kind", std::nullopt, std::nullopt, 0, 0, "associative verification of a Lie grading"});
    return report;
  }
  check_direct_sum(grading, report);
  check_closure(grading, [](const Mat& x, const Mat& y) { return x * y; }, report);
  return report;
}

std::vector<GroupElem> support(const Grading& grading) {
  std::vector<GroupElem> out;
  for (const auto& [g, s] : grading.components()) out.push_back(g);
  return out;
}

Grading coarsen(const Grading& grading, const Subgroup& h) {
  const Quotient q = quotient(grading.group(), h);
  std::map<GroupElem, Subspace> comps;
  for (const auto& [g, s] : grading.components()) {
    const GroupElem x = q.project(g);
    auto it = comps.find(x);
    if (it == comps.end()) {
      comps.emplace(x, s);
    } else {
      it->second = subspace_sum(it->second, s);
    }
  }
  return Grading(q.group, grading.n(), grading.kind(), std::move(comps));
}

// ---------------------------------------------------------------------------

std::map<GroupElem, Mat> homogeneous_decomposition(const Mat& x, const Grading& grading) {
  if (x.rows() != grading.n() || x.cols() != grading.n()) {
    throw GradingError(ErrorCode::DimensionMismatch, "matrix order does not match the grading");
  }
  std::vector<Vec> all;
  std::vector<GroupElem> owner;
  for (const auto& [g, s] : grading.components()) {
    for (const auto& row : s.basis()) {
      all.push_back(row);
      owner.push_back(g);
    }
  }
  const auto coords = solve_in_span(all, x.flatten());
  if (!coords) throw GradingError(ErrorCode::NotInAlgebra, "matrix is not in the span of the components");
  std::map<GroupElem, Mat> parts;
  for (const auto& [g, s] : grading.components()) parts.emplace(g, Mat(grading.n(), grading.n()));
  for (std::size_t k = 0; k < all.size(); ++k) {
    if ((*coords)[k].is_zero()) continue;
    parts[owner[k]] += Mat::from_flat(grading.n(), all[k]) * (*coords)[k];
  }
  return parts;
}

Mat chi_action(const Character& chi, const Mat& x, const Grading& grading) {
  Mat out(grading.n(), grading.n());
  for (const auto& [g, part] : homogeneous_decomposition(x, grading)) out += part * char_eval(chi, g);
  return out;
}

Mat homogeneous_projection(const Mat& x, const GroupElem& g, const Grading& grading) {
  const auto parts = homogeneous_decomposition(x, grading);
  const auto& group = grading.group();
  Mat out(grading.n(), grading.n());
  for (const auto& chi : dual_group(group)) {
    Mat acted(grading.n(), grading.n());
    for (const auto& [h, part] : parts) acted += part * char_eval(chi, h);
    out += acted * char_eval(chi, g).inv();
  }
  return out * CycNum(Rational(1, static_cast<long>(group.order())));
}

bool is_graded_subspace(const Subspace& v, const Grading& grading) {
  Subspace sum(v.ambient_dim());
  for (const auto& [g, s] : grading.components()) sum = subspace_sum(sum, subspace_intersect(v, s));
  return sum == v;
}

bool is_invariant_subspace(const Subspace& v, const CharacterSubgroup& lambda, const Grading& grading) {
  for (const auto& row : v.basis()) {
    const Mat x = Mat::from_flat(grading.n(), row);
    const auto parts = homogeneous_decomposition(x, grading);
    for (const auto& chi : lambda.characters) {
      Mat acted(grading.n(), grading.n());
      for (const auto& [h, part] : parts) acted += part * char_eval(chi, h);
      if (!v.contains(acted.flatten())) return false;
    }
  }
  return true;
}

}  // namespace gradings
