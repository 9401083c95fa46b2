#include "gradings/groups.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "gradings/error.hpp"

namespace gradings {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

int mod(long a, int n) {
  long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

void require_same(const FinAbGroup& a, const FinAbGroup& b, const char* what) {
  if (a != b) {
    throw GradingError(ErrorCode::GroupMismatch,
                       std::string(what) + ": groups (" + a.to_string() + ") and (" + b.to_string() + ") differ");
  }
}

}  // namespace

FinAbGroup::FinAbGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  for (int n : factors_) {
    if (n < 1) throw GradingError(ErrorCode::InvalidGroup, "cyclic factor orders must be >= 1, got " + std::to_string(n));
    exponent_ = std::lcm(exponent_, n);
    order_ *= static_cast<std::size_t>(n);
  }
}

std::string FinAbGroup::to_string() const { return "Z[" + join(factors_) + "]"; }

FinAbGroup make_group(std::vector<int> factors) { return FinAbGroup(std::move(factors)); }

FinAbGroup direct_product(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<int> f = a.factors();
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return FinAbGroup(std::move(f));
}

// ---------------------------------------------------------------------------

GroupElem::GroupElem(FinAbGroup group, std::vector<int> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  if (exponents_.size() != group_.rank()) {
    throw GradingError(ErrorCode::GroupMismatch, "element has " + std::to_string(exponents_.size()) +
                                                     " exponents for a group of rank " +
                                                     std::to_string(group_.rank()));
  }
  for (std::size_t i = 0; i < exponents_.size(); ++i) exponents_[i] = mod(exponents_[i], group_.factors()[i]);
}

GroupElem GroupElem::identity(const FinAbGroup& group) {
  return GroupElem(group, std::vector<int>(group.rank(), 0));
}

GroupElem GroupElem::generator(const FinAbGroup& group, std::size_t i) {
  std::vector<int> e(group.rank(), 0);
  e.at(i) = 1;
  return GroupElem(group, std::move(e));
}

bool GroupElem::is_identity() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
}

std::string GroupElem::to_string() const { return "(" + join(exponents_) + ")"; }

std::ostream& operator<<(std::ostream& os, const GroupElem& g) { return os << g.to_string(); }

GroupElem elem_mul(const GroupElem& a, const GroupElem& b) {
  require_same(a.group(), b.group(), "elem_mul");
  std::vector<int> e(a.exponents().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exponents()[i] + b.exponents()[i];
  return GroupElem(a.group(), std::move(e));
}

GroupElem elem_inv(const GroupElem& a) { return elem_pow(a, -1); }

GroupElem elem_pow(const GroupElem& a, long k) {
  std::vector<int> e(a.exponents().size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = mod(static_cast<long>(a.exponents()[i]) * (k % a.group().factors()[i]), a.group().factors()[i]);
  }
  return GroupElem(a.group(), std::move(e));
}

int elem_order(const GroupElem& a) {
  int order = 1;
  for (std::size_t i = 0; i < a.exponents().size(); ++i) {
    const int n = a.group().factors()[i];
    order = std::lcm(order, n / std::gcd(n, a.exponents()[i]));
  }
  return order;
}

std::vector<GroupElem> elements(const FinAbGroup& g) {
  std::vector<GroupElem> out;
  out.reserve(g.order());
  std::vector<int> e(g.rank(), 0);
  for (std::size_t count = 0; count < g.order(); ++count) {
    out.emplace_back(g, e);
    for (std::size_t i = g.rank(); i-- > 0;) {
      if (++e[i] < g.factors()[i]) break;
      e[i] = 0;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Character::Character(FinAbGroup group, std::vector<int> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  if (exponents_.size() != group_.rank()) {
    throw GradingError(ErrorCode::GroupMismatch, "character exponent count does not match group rank");
  }
  for (std::size_t i = 0; i < exponents_.size(); ++i) exponents_[i] = mod(exponents_[i], group_.factors()[i]);
}

Character Character::trivial(const FinAbGroup& group) {
  return Character(group, std::vector<int>(group.rank(), 0));
}

bool Character::is_trivial() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
}

std::string Character::to_string() const { return "chi(" + join(exponents_) + ")"; }

Character char_mul(const Character& a, const Character& b) {
  require_same(a.group(), b.group(), "char_mul");
  std::vector<int> e(a.exponents().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exponents()[i] + b.exponents()[i];
  return Character(a.group(), std::move(e));
}

Character char_inv(const Character& a) {
  std::vector<int> e(a.exponents().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = -a.exponents()[i];
  return Character(a.group(), std::move(e));
}

int char_order(const Character& a) {
  return elem_order(GroupElem(a.group(), a.exponents()));
}

int char_phase(const Character& chi, const GroupElem& g) {
  require_same(chi.group(), g.group(), "char_eval");
  const int n = chi.group().exponent();
  long phase = 0;
  for (std::size_t i = 0; i < g.exponents().size(); ++i) {
    const int ni = chi.group().factors()[i];
    phase += static_cast<long>(chi.exponents()[i]) * g.exponents()[i] * (n / ni);
  }
  return mod(phase, n);
}

CycNum char_eval(const Character& chi, const GroupElem& g) {
  return CycNum::root_of_unity(chi.group().exponent(), char_phase(chi, g));
}

std::vector<Character> dual_group(const FinAbGroup& g) {
  std::vector<Character> out;
  out.reserve(g.order());
  for (const auto& e : elements(g)) out.emplace_back(g, e.exponents());
  return out;
}

// ---------------------------------------------------------------------------

bool Subgroup::contains(const GroupElem& g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

bool CharacterSubgroup::contains(const Character& chi) const {
  return std::binary_search(characters.begin(), characters.end(), chi);
}

namespace {

template <typename T, typename Mul>
std::vector<T> close_under(T identity, std::span<const T> gens, Mul mul) {
  std::set<T> seen{identity};
  std::vector<T> frontier{identity};
  while (!frontier.empty()) {
    std::vector<T> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        T y = mul(x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

Subgroup subgroup_generated(const FinAbGroup& g, std::span<const GroupElem> gens) {
  for (const auto& x : gens) require_same(g, x.group(), "subgroup_generated");
  return Subgroup{g, close_under<GroupElem>(GroupElem::identity(g), gens, elem_mul)};
}

CharacterSubgroup character_subgroup_generated(const FinAbGroup& g, std::span<const Character> gens) {
  for (const auto& x : gens) require_same(g, x.group(), "character_subgroup_generated");
  return CharacterSubgroup{g, close_under<Character>(Character::trivial(g), gens, char_mul)};
}

Subgroup whole_group(const FinAbGroup& g) { return Subgroup{g, elements(g)}; }

Subgroup trivial_subgroup(const FinAbGroup& g) { return Subgroup{g, {GroupElem::identity(g)}}; }

Subgroup annihilator(const CharacterSubgroup& lambda) {
  Subgroup out{lambda.group, {}};
  for (const auto& g : elements(lambda.group)) {
    if (std::all_of(lambda.characters.begin(), lambda.characters.end(),
                    [&](const Character& chi) { return char_phase(chi, g) == 0; })) {
      out.elements.push_back(g);
    }
  }
  return out;
}

CharacterSubgroup annihilator(const Subgroup& s) {
  CharacterSubgroup out{s.group, {}};
  for (const auto& chi : dual_group(s.group)) {
    if (std::all_of(s.elements.begin(), s.elements.end(),
                    [&](const GroupElem& g) { return char_phase(chi, g) == 0; })) {
      out.characters.push_back(chi);
    }
  }
  return out;
}

std::vector<Subgroup> all_subgroups(const FinAbGroup& g) {
  const auto elems = elements(g);
  std::set<std::vector<GroupElem>> found;
  std::vector<std::vector<GroupElem>> frontier{trivial_subgroup(g).elements};
  found.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<std::vector<GroupElem>> next;
    for (const auto& s : frontier) {
      for (const auto& x : elems) {
        if (std::binary_search(s.begin(), s.end(), x)) continue;
        std::vector<GroupElem> gens = s;
        gens.push_back(x);
        auto sub = subgroup_generated(g, gens).elements;
        if (found.insert(sub).second) next.push_back(std::move(sub));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  for (const auto& s : found) out.push_back(Subgroup{g, s});
  return out;
}

// ---------------------------------------------------------------------------

GroupHom::GroupHom(FinAbGroup source, FinAbGroup target, std::vector<GroupElem> generator_images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(generator_images)) {
  if (images_.size() != source_.rank()) {
    throw GradingError(ErrorCode::BadEmbedding, "need one image per cyclic factor of the source");
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    require_same(images_[i].group(), target_, "GroupHom");
    if (source_.factors()[i] % elem_order(images_[i]) != 0) {
      throw GradingError(ErrorCode::BadEmbedding, "image " + images_[i].to_string() + " of generator " +
                                                      std::to_string(i) + " has order not dividing " +
                                                      std::to_string(source_.factors()[i]));
    }
  }
}

GroupHom GroupHom::identity(const FinAbGroup& g) {
  std::vector<GroupElem> imgs;
  for (std::size_t i = 0; i < g.rank(); ++i) imgs.push_back(GroupElem::generator(g, i));
  return GroupHom(g, g, std::move(imgs));
}

GroupHom GroupHom::inject_left(const FinAbGroup& a, const FinAbGroup& b) {
  const FinAbGroup p = direct_product(a, b);
  std::vector<GroupElem> imgs;
  for (std::size_t i = 0; i < a.rank(); ++i) imgs.push_back(GroupElem::generator(p, i));
  return GroupHom(a, p, std::move(imgs));
}

GroupHom GroupHom::inject_right(const FinAbGroup& a, const FinAbGroup& b) {
  const FinAbGroup p = direct_product(a, b);
  std::vector<GroupElem> imgs;
  for (std::size_t i = 0; i < b.rank(); ++i) imgs.push_back(GroupElem::generator(p, a.rank() + i));
  return GroupHom(b, p, std::move(imgs));
}

GroupElem GroupHom::operator()(const GroupElem& g) const {
  require_same(g.group(), source_, "GroupHom apply");
  GroupElem out = GroupElem::identity(target_);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (g.exponents()[i] != 0) out = out * elem_pow(images_[i], g.exponents()[i]);
  }
  return out;
}

bool GroupHom::is_injective() const {
  std::set<GroupElem> seen;
  for (const auto& g : elements(source_)) {
    if (!seen.insert((*this)(g)).second) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Diagonalizes a (rows x cols) in place by unimodular row and column
// operations, recording the column operations in v (cols x cols). On return
// a is diagonal with nonnegative entries d_0 | d_1 | ... .
void smith_normal_form(IntMatrix& a, IntMatrix& v) {
  const std::size_t rows = a.size();
  const std::size_t cols = v.size();
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : v) std::swap(r[i], r[j]);
  };
  // col[dst] += k * col[src]
  auto add_col = [&](std::size_t dst, std::size_t src, std::int64_t k) {
    for (auto& r : a) r[dst] += k * r[src];
    for (auto& r : v) r[dst] += k * r[src];
  };
  auto add_row = [&](std::size_t dst, std::size_t src, std::int64_t k) {
    for (std::size_t j = 0; j < cols; ++j) a[dst][j] += k * a[src][j];
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero |entry| in the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return;
      std::swap(a[t], a[pi]);
      if (pj != t) swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        add_row(i, t, -(a[i][t] / a[t][t]));
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        add_col(j, t, -(a[t][j] / a[t][t]));
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any offending row into the pivot row and retry.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            add_row(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
    }
  }
}

}  // namespace

Quotient quotient(const FinAbGroup& g, const Subgroup& h) {
  require_same(g, h.group, "quotient");
  if (h.order() == 1) return Quotient{g, h, GroupHom::identity(g)};
  const std::size_t m = g.rank();
  IntMatrix rel;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::int64_t> r(m, 0);
    r[i] = g.factors()[i];
    rel.push_back(std::move(r));
  }
  for (const auto& x : h.elements) {
    if (x.is_identity()) continue;
    rel.emplace_back(x.exponents().begin(), x.exponents().end());
  }
  IntMatrix v(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i) v[i][i] = 1;
  smith_normal_form(rel, v);

  std::vector<int> factors;
  std::vector<std::size_t> kept;
  for (std::size_t t = 0; t < m; ++t) {
    const std::int64_t d = rel[t][t];
    if (d > 1) {
      factors.push_back(static_cast<int>(d));
      kept.push_back(t);
    }
  }
  FinAbGroup q(factors);
  std::vector<GroupElem> images;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<int> e;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      e.push_back(static_cast<int>(((v[i][kept[k]] % factors[k]) + factors[k]) % factors[k]));
    }
    images.emplace_back(q, std::move(e));
  }
  return Quotient{q, h, GroupHom(g, q, std::move(images))};
}

}  // namespace gradings
