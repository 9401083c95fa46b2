#include <gtest/gtest.h>

#include <random>

#include "gradings/error.hpp"
#include "gradings/liegrad.hpp"

using namespace gradings;

namespace {

GroupElem el(const FinAbGroup& g, std::vector<int> e) { return GroupElem(g, std::move(e)); }

Mat unit(std::size_t n, std::size_t i, std::size_t j) { return Mat::unit(n, i, j); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const GradingError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no GradingError thrown";
  return ErrorCode::InvalidGroup;
}

std::size_t dim_at(const Grading& g, const GroupElem& x) { return g.component(x).dim(); }

std::size_t total_dim(const Grading& g) {
  std::size_t s = 0;
  for (const auto& [x, c] : g.components()) s += c.dim();
  return s;
}

// T = Z_2^{2k} sent to the first 2k generators of G.
GroupHom leading_embedding(std::size_t k, const FinAbGroup& group) {
  const FinAbGroup t = fine_support_group(std::vector<std::size_t>(k, 2));
  std::vector<GroupElem> images;
  for (std::size_t i = 0; i < 2 * k; ++i) images.push_back(GroupElem::generator(group, i));
  return GroupHom(t, group, images);
}

Character marker_character(const FinAbGroup& group, const GroupElem& h) {
  for (const auto& c : dual_group(group))
    if (char_eval(c, h) == CycNum(-1)) return c;
  ADD_FAILURE() << "no character with phi(h) = -1";
  return Character::trivial(group);
}

Grading coarsen_by(const Grading& g, const GroupElem& h) {
  return coarsen(g, subgroup_generated(g.group(), std::vector<GroupElem>{h}));
}

// Brute-force closure oracle independent of check_closure.
bool brackets_close(const Grading& g) {
  for (const auto& [a, sa] : g.components())
    for (const auto& [b, sb] : g.components()) {
      const Subspace& target = g.component(a * b);
      for (const auto& x : g.basis_matrices(a))
        for (const auto& y : g.basis_matrices(b)) {
          const Mat z = x * y - y * x;
          if (z.is_zero()) continue;
          if (target.is_zero() || !target.contains(z.flatten())) return false;
        }
    }
  return true;
}

}  // namespace

TEST(Type1, Examples) {
  const FinAbGroup z1(std::vector<int>{});
  for (std::size_t n = 2; n <= 4; ++n) {
    const Grading l = type1(elementary_grading(z1, n, std::vector<GroupElem>(n, GroupElem::identity(z1))));
    EXPECT_EQ(l.components().size(), 1u);
    EXPECT_EQ(dim_at(l, GroupElem::identity(z1)), n * n - 1);
    EXPECT_TRUE(verify_lie(l).passed());
  }

  const FinAbGroup z2({2});
  for (std::size_t k = 0; k <= 4; ++k)
    for (std::size_t l = 0; k + l <= 5; ++l) {
      if (k + l < 2) continue;
      std::vector<GroupElem> tuple(k, el(z2, {0}));
      tuple.insert(tuple.end(), l, el(z2, {1}));
      const Grading lg = type1(elementary_grading(z2, k + l, tuple));
      EXPECT_EQ(dim_at(lg, el(z2, {0})), k * k + l * l - 1);
      EXPECT_EQ(dim_at(lg, el(z2, {1})), 2 * k * l);
      EXPECT_TRUE(verify_lie(lg).passed());
    }

  const Grading eps = type1(epsilon_grading(2));
  const FinAbGroup k4({2, 2});
  EXPECT_EQ(dim_at(eps, el(k4, {0, 0})), 0u);
  for (const auto& g : {el(k4, {0, 1}), el(k4, {1, 0}), el(k4, {1, 1})}) EXPECT_EQ(dim_at(eps, g), 1u);
  EXPECT_TRUE(verify_lie(eps).passed());

  EXPECT_EQ(code_of([&] { type1(epsilon_grading(1)); }), ErrorCode::TooSmall);
}

TEST(Type1, DimensionsFollowAssociativeGrading) {
  std::mt19937 rng(7);
  const FinAbGroup g({2, 3});
  const auto elems = elements(g);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    std::vector<GroupElem> tuple;
    for (std::size_t i = 0; i < n; ++i) tuple.push_back(elems[rng() % elems.size()]);
    const Grading r = elementary_grading(g, n, tuple);
    const Grading l = type1(r);
    EXPECT_EQ(total_dim(l), n * n - 1);
    for (const auto& x : elems) {
      const std::size_t expected = dim_at(r, x) - (x.is_identity() ? 1 : 0);
      EXPECT_EQ(dim_at(l, x), expected);
    }
    EXPECT_TRUE(verify_lie(l).passed());
    EXPECT_TRUE(brackets_close(l));
  }
}

TEST(Type1, ExplicitBasisMatchesIntersection) {
  struct Setup {
    FinAbGroup group;
    std::vector<GroupElem> tuple;
    std::vector<std::size_t> orders;
    GroupHom emb;
  };
  std::vector<Setup> setups;
  {
    const FinAbGroup g({2, 3, 3});
    const FinAbGroup t = fine_support_group({3});
    setups.push_back({g,
                      {el(g, {0, 0, 0}), el(g, {1, 0, 0}), el(g, {1, 0, 0})},
                      {3},
                      GroupHom(t, g, {el(g, {0, 1, 0}), el(g, {0, 0, 1})})});
  }
  {
    const FinAbGroup g({2, 2, 4});
    const FinAbGroup t = fine_support_group({2});
    setups.push_back(
        {g, {el(g, {0, 0, 0}), el(g, {0, 0, 1}), el(g, {0, 0, 3})}, {2}, GroupHom(t, g, {el(g, {1, 0, 0}), el(g, {0, 1, 0})})});
  }
  {
    const FinAbGroup g({2, 2, 2, 2});
    setups.push_back({g, {}, {2, 2}, leading_embedding(2, g)});
  }
  {
    const FinAbGroup g({4});
    const FinAbGroup t = fine_support_group({});
    setups.push_back({g, {el(g, {0}), el(g, {1}), el(g, {2}), el(g, {1})}, {}, GroupHom(t, g, {})});
  }
  for (const auto& s : setups) {
    const Grading assoc = tensor_form_grading(s.group, s.tuple, s.orders, s.emb);
    EXPECT_TRUE(verify_assoc(assoc).passed());
    const Grading explicit_form = type1_explicit(s.group, s.tuple, s.orders, s.emb);
    EXPECT_EQ(explicit_form, type1(assoc));
    EXPECT_TRUE(verify_lie(explicit_form).passed());
  }

  const FinAbGroup g({2, 2});
  const FinAbGroup t = fine_support_group({2});
  EXPECT_EQ(code_of([&] {
              type1_explicit(g, {el(g, {0, 0}), el(g, {1, 0})}, {2}, GroupHom(t, g, {el(g, {1, 0}), el(g, {0, 1})}));
            }),
            ErrorCode::SupportClash);
  EXPECT_EQ(code_of([&] {
              type1_explicit(g, {}, {2}, GroupHom(t, g, {el(g, {1, 0}), el(g, {1, 0})}));
            }),
            ErrorCode::BadEmbedding);
}

TEST(FineBasis, ProductsOfClockAndShift) {
  const auto basis = fine_basis({2, 3});
  EXPECT_EQ(basis.size(), 36u);
  const auto two = epsilon_basis(2);
  const auto three = epsilon_basis(3);
  const FinAbGroup t = fine_support_group({2, 3});
  const FinAbGroup k2({2, 2}), k3({3, 3});
  EXPECT_EQ(basis.at(el(t, {1, 0, 2, 1})), kron(two.at(el(k2, {1, 0})), three.at(el(k3, {2, 1}))));
  EXPECT_EQ(fine_basis({}).at(GroupElem::identity(fine_support_group({}))), Mat::identity(1));
}

TEST(Type2, Examples) {
  const FinAbGroup z2({2});
  const GroupElem h = el(z2, {1});
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto d = elementary_involution_grading(z2, std::vector<GroupElem>(n, el(z2, {0})),
                                                 InvolutionFlavor::Transpose);
    ASSERT_EQ(d.data.involution.phi, Mat::identity(n));
    const Grading l = type2(d.data, h);
    EXPECT_EQ(dim_at(l, el(z2, {0})), n * (n - 1) / 2);
    EXPECT_EQ(dim_at(l, h), n * (n + 1) / 2 - 1);
    for (const auto& x : l.basis_matrices(el(z2, {0}))) EXPECT_EQ(x.transpose(), -x);
    for (const auto& x : l.basis_matrices(h)) {
      EXPECT_EQ(x.transpose(), x);
      EXPECT_TRUE(x.trace().is_zero());
    }
    EXPECT_TRUE(verify_lie(l).passed());
  }

  const auto sp = elementary_involution_grading(z2, {el(z2, {0}), el(z2, {0})}, InvolutionFlavor::Symplectic);
  const Grading lsp = type2(sp.data, h);
  EXPECT_EQ(dim_at(lsp, el(z2, {0})), 3u);
  EXPECT_EQ(dim_at(lsp, h), 0u);

  const FinAbGroup g({2, 2, 2});
  const InvolutionGrading c3 = fine_involution_grading({3}, g, leading_embedding(1, g));
  const Grading l3 = type2(c3, el(g, {0, 0, 1}));
  EXPECT_TRUE(verify_lie(l3).passed());
  EXPECT_TRUE(brackets_close(l3));
  EXPECT_EQ(total_dim(l3), 3u);
}

TEST(Type2, Errors) {
  const FinAbGroup z4({4});
  const auto d = elementary_involution_grading(z4, {el(z4, {0}), el(z4, {0})}, InvolutionFlavor::Transpose);
  EXPECT_EQ(code_of([&] { type2(d.data, el(z4, {1})); }), ErrorCode::BadMarker);
  EXPECT_EQ(code_of([&] { type2(d.data, el(z4, {0})); }), ErrorCode::BadMarker);
  const FinAbGroup z2({2});
  EXPECT_EQ(code_of([&] { type2(d.data, el(z2, {1})); }), ErrorCode::BadMarker);

  // Elementary grading of M_2 by Z_4 with tuple (0, 1): E_12 has degree 1,
  // its transpose degree 3, so the components are not stable.
  const Grading unstable = elementary_grading(z4, 2, {el(z4, {0}), el(z4, {1})});
  EXPECT_EQ(code_of([&] { type2(unstable, d.data.involution, el(z4, {2})); }), ErrorCode::NotInvolutionGrading);
}

TEST(Type2, DimensionsMatchSymSkewSplit) {
  const FinAbGroup z4({4});
  const FinAbGroup g({2, 2, 2, 2});
  std::vector<std::pair<InvolutionGrading, GroupElem>> cases;
  cases.emplace_back(elementary_involution_grading(z4, {el(z4, {0}), el(z4, {1}), el(z4, {3})},
                                                   InvolutionFlavor::Transpose)
                         .data,
                     el(z4, {2}));
  cases.emplace_back(elementary_involution_grading(z4, {el(z4, {0}), el(z4, {1}), el(z4, {2}), el(z4, {1})},
                                                   InvolutionFlavor::Transpose)
                         .data,
                     el(z4, {2}));
  cases.emplace_back(elementary_involution_grading(z4, {el(z4, {1}), el(z4, {0})}, InvolutionFlavor::Symplectic).data,
                     el(z4, {2}));
  for (int c = 1; c <= 4; ++c) {
    cases.emplace_back(fine_involution_grading({c}, g, leading_embedding(1, g)), el(g, {0, 0, 1, 0}));
    cases.emplace_back(fine_involution_grading({c}, g, leading_embedding(1, g)), el(g, {1, 0, 0, 0}));
  }
  cases.emplace_back(fine_involution_grading({2, 4}, g, leading_embedding(2, g)), el(g, {1, 1, 0, 0}));

  for (const auto& [data, h] : cases) {
    const Grading l = type2(data, h);
    const std::size_t n = data.grading.n();
    const std::size_t d = n * n;
    auto split_at = [&](const GroupElem& x) {
      const Subspace& s = data.grading.component(x);
      return s.is_zero() ? SymSkewSplit{Subspace(d), Subspace(d)} : sym_skew_split(s, data.involution);
    };
    for (const auto& x : elements(data.grading.group())) {
      const std::size_t skew = split_at(x).skew.dim();
      const std::size_t sym = x == h ? split_at(GroupElem::identity(x.group())).symmetric.dim() - 1
                                     : split_at(x * h).symmetric.dim();
      EXPECT_EQ(dim_at(l, x), skew + sym) << x.to_string();
    }
    EXPECT_EQ(total_dim(l), n * n - 1);
    EXPECT_TRUE(verify_lie(l).passed());
    EXPECT_TRUE(brackets_close(l));
  }
}

TEST(VerifyLie, CorruptedAndWrongKind) {
  const FinAbGroup z2({2});
  const Grading good = type1(elementary_grading(z2, 2, {el(z2, {0}), el(z2, {1})}));
  ASSERT_TRUE(verify_lie(good).passed());

  const Grading swapped(z2, 2, GradingKind::Lie,
                        {{el(z2, {0}), good.component(el(z2, {1}))}, {el(z2, {1}), good.component(el(z2, {0}))}});
  const VerificationReport bad = verify_lie(swapped);
  ASSERT_FALSE(bad.passed());
  EXPECT_EQ(bad.violations.front().kind, "closure");
  EXPECT_TRUE(bad.violations.front().g.has_value());

  const Grading traced(z2, 2, GradingKind::Lie,
                       {{el(z2, {0}), span_matrices(2, {unit(2, 0, 0)})},
                        {el(z2, {1}), span_matrices(2, {unit(2, 0, 1), unit(2, 1, 0)})}});
  const VerificationReport tr = verify_lie(traced);
  ASSERT_FALSE(tr.passed());
  bool saw_trace = false;
  for (const auto& v : tr.violations) saw_trace = saw_trace || v.kind == "trace";
  EXPECT_TRUE(saw_trace);

  const VerificationReport kind = verify_lie(elementary_grading(z2, 2, {el(z2, {0}), el(z2, {1})}));
  ASSERT_FALSE(kind.passed());
  EXPECT_EQ(kind.violations.front().kind, "kind");
}

TEST(OuterAction, Antihomomorphism) {
  std::vector<Involution> invs;
  for (int c = 1; c <= 4; ++c) invs.push_back(canonical_L6(c).involution);
  const FinAbGroup z1(std::vector<int>{});
  const std::vector<GroupElem> four(4, GroupElem::identity(z1));
  invs.push_back(elementary_involution_grading(z1, four, InvolutionFlavor::Transpose, 1).data.involution);
  invs.push_back(elementary_involution_grading(z1, four, InvolutionFlavor::Symplectic).data.involution);
  for (const auto& inv : invs) {
    const std::size_t n = inv.n;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            const Mat x = unit(n, i, j), y = unit(n, k, l);
            EXPECT_EQ(outer_action(inv, x * y), -(outer_action(inv, y) * outer_action(inv, x)));
          }
    // It is a Lie automorphism of sl(n).
    const Mat x = unit(n, 0, n - 1) + unit(n, 1, 0) * CycNum(3);
    const Mat y = unit(n, n - 1, 1) - unit(n, 0, 0);
    EXPECT_EQ(outer_action(inv, bracket(x, y)), bracket(outer_action(inv, x), outer_action(inv, y)));
  }
}

TEST(Recover, IdentityActionExample) {
  const FinAbGroup z2({2});
  const GroupElem h = el(z2, {1});
  const Quotient q = quotient(z2, subgroup_generated(z2, std::vector<GroupElem>{h}));
  const Grading factor(q.group, 2, GradingKind::Lie, {{GroupElem::identity(q.group), traceless_subspace(2)}});
  const Character phi(z2, {1});
  const Grading l = recover_from_factor(factor, [](const Mat& x) { return x; }, phi, z2, h);
  EXPECT_EQ(l.component(el(z2, {0})), traceless_subspace(2));
  EXPECT_TRUE(l.component(h).is_zero());
}

TEST(Recover, Errors) {
  const FinAbGroup z2({2});
  const GroupElem h = el(z2, {1});
  const Quotient q = quotient(z2, subgroup_generated(z2, std::vector<GroupElem>{h}));
  const Grading factor(q.group, 2, GradingKind::Lie, {{GroupElem::identity(q.group), traceless_subspace(2)}});
  const auto id = [](const Mat& x) { return x; };
  EXPECT_EQ(code_of([&] { recover_from_factor(factor, id, Character::trivial(z2), z2, h); }), ErrorCode::BadMarker);
  EXPECT_EQ(code_of([&] { recover_from_factor(factor, id, Character(z2, {1}), z2, el(z2, {0})); }),
            ErrorCode::BadMarker);
  const Grading wrong_group(z2, 2, GradingKind::Lie, {{el(z2, {0}), traceless_subspace(2)}});
  EXPECT_EQ(code_of([&] { recover_from_factor(wrong_group, id, Character(z2, {1}), z2, h); }),
            ErrorCode::GroupMismatch);
  const auto doubling = [](const Mat& x) { return x * CycNum(2); };
  EXPECT_EQ(code_of([&] { recover_from_factor(factor, doubling, Character(z2, {1}), z2, h); }), ErrorCode::BadSquare);

  const FinAbGroup z4({4});
  const GroupElem h4 = el(z4, {2});
  const Quotient q4 = quotient(z4, subgroup_generated(z4, std::vector<GroupElem>{h4}));
  const Grading split(q4.group, 2, GradingKind::Lie,
                      {{GroupElem::identity(q4.group), span_matrices(2, {unit(2, 0, 0) - unit(2, 1, 1)})},
                       {q4.project(el(z4, {1})), span_matrices(2, {unit(2, 0, 1), unit(2, 1, 0)})}});
  const auto to_upper = [](const Mat& x) { return x * Mat::unit(2, 0, 1); };
  EXPECT_EQ(code_of([&] { recover_from_factor(split, to_upper, Character(z4, {1}), z4, h4); }),
            ErrorCode::NotStable);
}

TEST(Recover, RoundTripType2) {
  const FinAbGroup z4({4});
  const FinAbGroup g({2, 2, 2, 2});
  std::vector<std::pair<InvolutionGrading, GroupElem>> cases;
  cases.emplace_back(elementary_involution_grading(z4, {el(z4, {0}), el(z4, {1}), el(z4, {3})},
                                                   InvolutionFlavor::Transpose)
                         .data,
                     el(z4, {2}));
  cases.emplace_back(elementary_involution_grading(z4, {el(z4, {1}), el(z4, {0})}, InvolutionFlavor::Symplectic).data,
                     el(z4, {2}));
  for (int c = 1; c <= 4; ++c) {
    cases.emplace_back(fine_involution_grading({c}, g, leading_embedding(1, g)), el(g, {0, 0, 1, 0}));
    cases.emplace_back(fine_involution_grading({c}, g, leading_embedding(1, g)), el(g, {0, 1, 0, 0}));
  }
  for (const auto& [data, h] : cases) {
    const Grading l = type2(data, h);
    const Character phi = marker_character(data.grading.group(), h);
    const Grading back = recover_from_factor(coarsen_by(l, h), type2_character_action(data, phi), phi,
                                             data.grading.group(), h);
    EXPECT_EQ(back, l);
  }
}

TEST(FineOuter, CaseThreeMarkerInside) {
  const FinAbGroup k4({2, 2});
  const GroupHom emb = GroupHom::identity(k4);
  const GroupElem a = el(k4, {1, 0}), b = el(k4, {0, 1}), ab = el(k4, {1, 1});
  const auto basis = epsilon_basis(2);

  // Signs read directly off the transpose.
  EXPECT_EQ(basis.at(a).transpose(), basis.at(a));
  EXPECT_EQ(basis.at(b).transpose(), basis.at(b));
  EXPECT_EQ(basis.at(ab).transpose(), -basis.at(ab));

  const Grading l = fine_outer({3}, k4, ab, emb);
  EXPECT_TRUE(l.component(el(k4, {0, 0})).is_zero());
  EXPECT_EQ(l.component(ab), span_matrices(2, {basis.at(ab)}));
  EXPECT_EQ(l.component(a), span_matrices(2, {basis.at(b)}));
  EXPECT_EQ(l.component(b), span_matrices(2, {basis.at(a)}));

  const Grading la = fine_outer({3}, k4, a, emb);
  EXPECT_EQ(la.component(el(k4, {0, 0})), span_matrices(2, {basis.at(a)}));
  EXPECT_EQ(la.component(ab), span_matrices(2, {basis.at(ab), basis.at(b)}));
  EXPECT_TRUE(la.component(a).is_zero());
  EXPECT_TRUE(la.component(b).is_zero());
}

TEST(FineOuter, CaseOneMarkerOutside) {
  const FinAbGroup g({2, 2, 2});
  const Grading l = fine_outer({1}, g, el(g, {0, 0, 1}), leading_embedding(1, g));
  const auto basis = epsilon_basis(2);
  const FinAbGroup k4({2, 2});
  for (const auto& [t, x] : basis) {
    const GroupElem image = el(g, {t.exponents()[0], t.exponents()[1], 0});
    if (t.is_identity()) {
      EXPECT_TRUE(l.component(image).is_zero());
    } else {
      EXPECT_EQ(l.component(image), span_matrices(2, {x}));
    }
  }
  EXPECT_EQ(total_dim(l), 3u);
}

TEST(FineOuter, AgreesWithType2) {
  const FinAbGroup g({2, 2, 2, 2, 2});
  const std::vector<std::vector<int>> seqs{{1}, {2}, {3}, {4}, {1, 3}, {2, 2}, {4, 1}};
  for (const auto& cases : seqs) {
    const GroupHom emb = leading_embedding(cases.size(), g);
    const InvolutionGrading data = fine_involution_grading(cases, g, emb);
    for (const auto& h : elements(g)) {
      if (h.is_identity()) continue;
      const Grading l = fine_outer(cases, g, h, emb);
      EXPECT_EQ(l, type2(data, h));
      if (cases.size() == 1) EXPECT_TRUE(verify_lie(l).passed());
    }
  }
}

TEST(FineOuter, RoundTrip) {
  const FinAbGroup g({2, 2, 2});
  for (int c = 1; c <= 4; ++c) {
    const GroupHom emb = leading_embedding(1, g);
    const InvolutionGrading data = fine_involution_grading({c}, g, emb);
    for (const auto& h : elements(g)) {
      if (h.is_identity()) continue;
      const Grading l = fine_outer({c}, g, h, emb);
      const Character phi = marker_character(g, h);
      EXPECT_EQ(recover_from_factor(coarsen_by(l, h), type2_character_action(data, phi), phi, g, h), l);
    }
  }
}

TEST(FineOuter, Errors) {
  const FinAbGroup g({2, 2, 2});
  const GroupHom emb = leading_embedding(1, g);
  EXPECT_EQ(code_of([&] { fine_outer({}, g, el(g, {0, 0, 1}), emb); }), ErrorCode::InvalidOrder);
  EXPECT_EQ(code_of([&] { fine_outer({1}, g, el(g, {0, 0, 0}), emb); }), ErrorCode::BadMarker);
  const GroupHom collapse(fine_support_group({2}), g, {el(g, {1, 0, 0}), el(g, {1, 0, 0})});
  EXPECT_EQ(code_of([&] { fine_outer({1}, g, el(g, {0, 0, 1}), collapse); }), ErrorCode::BadEmbedding);
  EXPECT_EQ(code_of([&] { fine_outer({5}, g, el(g, {0, 0, 1}), emb); }), ErrorCode::InvalidCase);
}

TEST(MixedType2, SymplecticTimesCaseTwo) {
  const FinAbGroup g({2, 2, 2, 2});
  const GroupHom emb = leading_embedding(1, g);
  const std::vector<GroupElem> tuple{el(g, {0, 0, 0, 0}), el(g, {0, 0, 1, 0})};
  for (const auto& h : {el(g, {0, 0, 0, 1}), el(g, {1, 0, 0, 0}), el(g, {0, 0, 1, 0})}) {
    const Grading l = mixed_type2(g, tuple, InvolutionFlavor::Symplectic, {2}, emb, h);
    EXPECT_EQ(l.n(), 4u);
    EXPECT_EQ(total_dim(l), 15u);
    EXPECT_TRUE(verify_lie(l).passed());
    EXPECT_TRUE(brackets_close(l));
    const InvolutionGrading data = mixed_involution_grading(g, tuple, InvolutionFlavor::Symplectic, {2}, emb);
    EXPECT_EQ(l, type2(data, h));
    const Character phi = marker_character(g, h);
    EXPECT_EQ(recover_from_factor(coarsen_by(l, h), type2_character_action(data, phi), phi, g, h), l);
  }
}

TEST(MixedType2, AgreesWithType2) {
  const FinAbGroup g({2, 2, 4});
  const GroupHom emb = leading_embedding(1, g);
  struct Setup {
    std::vector<GroupElem> tuple;
    InvolutionFlavor flavor;
    std::vector<int> cases;
    GroupElem h;
  };
  const std::vector<Setup> setups{
      {{el(g, {0, 0, 0}), el(g, {0, 0, 1}), el(g, {0, 0, 3})}, InvolutionFlavor::Transpose, {3}, el(g, {0, 0, 2})},
      {{el(g, {0, 0, 0}), el(g, {0, 0, 1}), el(g, {0, 0, 3})}, InvolutionFlavor::Transpose, {1}, el(g, {1, 0, 0})},
      {{el(g, {0, 0, 1}), el(g, {0, 0, 0})}, InvolutionFlavor::Symplectic, {4}, el(g, {1, 1, 2})},
      {{el(g, {0, 0, 0}), el(g, {0, 0, 2})}, InvolutionFlavor::Transpose, {2}, el(g, {0, 0, 2})},
  };
  for (const auto& s : setups) {
    const Grading l = mixed_type2(g, s.tuple, s.flavor, s.cases, emb, s.h);
    EXPECT_EQ(l, type2(mixed_involution_grading(g, s.tuple, s.flavor, s.cases, emb), s.h));
    EXPECT_TRUE(verify_lie(l).passed());
  }
}

TEST(MixedType2, DegenerateParts) {
  const FinAbGroup g({2, 2, 2, 2});
  const GroupHom emb = leading_embedding(1, g);
  const GroupElem h = el(g, {0, 0, 0, 1});
  const std::vector<GroupElem> tuple{el(g, {0, 0, 0, 0}), el(g, {0, 0, 1, 0}), el(g, {0, 0, 1, 0})};
  const auto elem = elementary_involution_grading(g, tuple, InvolutionFlavor::Transpose);
  EXPECT_EQ(mixed_type2(g, tuple, InvolutionFlavor::Transpose, {}, emb, h), type2(elem.data, h));
  for (int c = 1; c <= 4; ++c) {
    EXPECT_EQ(mixed_type2(g, {}, InvolutionFlavor::Transpose, {c}, emb, h), fine_outer({c}, g, h, emb));
    EXPECT_EQ(mixed_type2(g, {}, InvolutionFlavor::Transpose, {c}, emb, el(g, {1, 1, 0, 0})),
              fine_outer({c}, g, el(g, {1, 1, 0, 0}), emb));
  }
}

TEST(MixedType2, Errors) {
  const FinAbGroup g({2, 2, 2});
  const GroupHom emb = leading_embedding(1, g);
  EXPECT_EQ(code_of([&] {
              mixed_type2(g, {el(g, {0, 0, 0}), el(g, {1, 0, 0})}, InvolutionFlavor::Symplectic, {1}, emb,
                          el(g, {0, 0, 1}));
            }),
            ErrorCode::SupportClash);
  EXPECT_EQ(code_of([&] {
              mixed_type2(g, {el(g, {0, 0, 0}), el(g, {0, 0, 1}), el(g, {1, 0, 0})}, InvolutionFlavor::Symplectic,
                          {1}, emb, el(g, {0, 0, 1}));
            }),
            ErrorCode::InvalidOrder);
}

TEST(Obstruction, Examples) {
  const ObstructionReport two = type1_obstruction(2);
  EXPECT_TRUE(two.solvable());
  ASSERT_EQ(two.solutions.size(), 1u);
  EXPECT_EQ(two.solutions.front(), std::make_pair(std::size_t{1}, std::size_t{1}));
  EXPECT_FALSE(type1_obstruction(3).solvable());
  const ObstructionReport eight = type1_obstruction(8);
  EXPECT_FALSE(eight.solvable());
  EXPECT_EQ(eight.pairs_checked, 9u);
  EXPECT_EQ(code_of([] { type1_obstruction(1); }), ErrorCode::TooSmall);
}

TEST(Obstruction, ObstructedFromThreeOn) {
  for (std::size_t n = 3; n <= 40; ++n) {
    bool any = false;
    for (std::size_t k = 0; k <= n; ++k) {
      const long kk = static_cast<long>(k), ll = static_cast<long>(n - k), nn = static_cast<long>(n);
      if (2 * (kk * kk + ll * ll - 1) == nn * (nn - 1) && 2 * (2 * kk * ll) == nn * (nn + 1) - 2) any = true;
    }
    EXPECT_FALSE(any);
    EXPECT_EQ(type1_obstruction(n).solvable(), any) << n;
  }
}

TEST(Obstruction, SkewSymmetricGradingHasNoType1Dimensions) {
  const FinAbGroup z2({2});
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto d = elementary_involution_grading(z2, std::vector<GroupElem>(n, el(z2, {0})),
                                                 InvolutionFlavor::Transpose);
    const Grading l = type2(d.data, el(z2, {1}));
    bool matches_some_type1 = false;
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<GroupElem> tuple(k, el(z2, {0}));
      tuple.insert(tuple.end(), n - k, el(z2, {1}));
      const Grading t1 = type1(elementary_grading(z2, n, tuple));
      if (dim_at(t1, el(z2, {0})) == dim_at(l, el(z2, {0})) && dim_at(t1, el(z2, {1})) == dim_at(l, el(z2, {1})))
        matches_some_type1 = true;
    }
    EXPECT_EQ(matches_some_type1, type1_obstruction(n).solvable()) << n;
  }
}
