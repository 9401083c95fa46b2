#pragma once

// Finite abelian groups given as products of cyclic factors, their elements,
// characters, subgroups, annihilators and quotients.

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gradings/cyclo.hpp"

namespace gradings {

/// Z_{n_1} x ... x Z_{n_m} in the factor order the caller chose. Equality is
/// equality of factor sequences; no normalization to invariant factors.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  /// lcm of the factors; 1 for the trivial group.
  int exponent() const { return exponent_; }
  std::size_t order() const { return order_; }

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

  std::string to_string() const;

 private:
  std::vector<int> factors_;
  int exponent_ = 1;
  std::size_t order_ = 1;
};

FinAbGroup make_group(std::vector<int> factors);
/// Factors of a followed by factors of b.
FinAbGroup direct_product(const FinAbGroup& a, const FinAbGroup& b);

/// Element as a reduced exponent tuple. Ordered lexicographically by
/// exponents, which is the canonical ordering of components everywhere.
class GroupElem {
 public:
  GroupElem() = default;
  GroupElem(FinAbGroup group, std::vector<int> exponents);

  static GroupElem identity(const FinAbGroup& group);
  /// The i-th canonical generator (1 in factor i, 0 elsewhere).
  static GroupElem generator(const FinAbGroup& group, std::size_t i);

  const FinAbGroup& group() const { return group_; }
  const std::vector<int>& exponents() const { return exponents_; }
  bool is_identity() const;

  friend bool operator==(const GroupElem& a, const GroupElem& b) {
    return a.exponents_ == b.exponents_ && a.group_ == b.group_;
  }
  friend std::strong_ordering operator<=>(const GroupElem& a, const GroupElem& b) {
    if (auto c = a.exponents_ <=> b.exponents_; c != 0) return c;
    return a.group_.factors() <=> b.group_.factors();
  }

  std::string to_string() const;

 private:
  FinAbGroup group_;
  std::vector<int> exponents_;
};

std::ostream& operator<<(std::ostream& os, const GroupElem& g);

GroupElem elem_mul(const GroupElem& a, const GroupElem& b);
GroupElem elem_inv(const GroupElem& a);
GroupElem elem_pow(const GroupElem& a, long k);
int elem_order(const GroupElem& a);
inline GroupElem operator*(const GroupElem& a, const GroupElem& b) { return elem_mul(a, b); }

/// All elements in lexicographic exponent order (identity first).
std::vector<GroupElem> elements(const FinAbGroup& g);

/// chi(g) = prod_i zeta_{n_i}^{k_i e_i}.
class Character {
 public:
  Character() = default;
  Character(FinAbGroup group, std::vector<int> exponents);

  static Character trivial(const FinAbGroup& group);

  const FinAbGroup& group() const { return group_; }
  const std::vector<int>& exponents() const { return exponents_; }
  bool is_trivial() const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.exponents_ == b.exponents_ && a.group_ == b.group_;
  }
  friend std::strong_ordering operator<=>(const Character& a, const Character& b) {
    if (auto c = a.exponents_ <=> b.exponents_; c != 0) return c;
    return a.group_.factors() <=> b.group_.factors();
  }

  std::string to_string() const;

 private:
  FinAbGroup group_;
  std::vector<int> exponents_;
};

Character char_mul(const Character& a, const Character& b);
Character char_inv(const Character& a);
int char_order(const Character& a);
inline Character operator*(const Character& a, const Character& b) { return char_mul(a, b); }

/// chi(g) as a power of zeta(exponent): returns k with chi(g) = zeta_N^k,
/// 0 <= k < N where N = exponent of the group.
int char_phase(const Character& chi, const GroupElem& g);
/// chi(g) in Q(zeta_N), N the group exponent.
CycNum char_eval(const Character& chi, const GroupElem& g);

/// All |G| characters, trivial first, lexicographic in exponents.
std::vector<Character> dual_group(const FinAbGroup& g);

/// Subgroup of G with its full sorted element set.
struct Subgroup {
  FinAbGroup group;
  std::vector<GroupElem> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(const GroupElem& g) const;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

/// Subgroup of the dual group with its full sorted character set.
struct CharacterSubgroup {
  FinAbGroup group;
  std::vector<Character> characters;

  std::size_t order() const { return characters.size(); }
  bool contains(const Character& chi) const;
  friend bool operator==(const CharacterSubgroup&, const CharacterSubgroup&) = default;
};

Subgroup subgroup_generated(const FinAbGroup& g, std::span<const GroupElem> gens);
CharacterSubgroup character_subgroup_generated(const FinAbGroup& g, std::span<const Character> gens);
Subgroup whole_group(const FinAbGroup& g);
Subgroup trivial_subgroup(const FinAbGroup& g);

/// Lambda^perp = {g : lambda(g) = 1 for all lambda in Lambda}.
Subgroup annihilator(const CharacterSubgroup& lambda);
/// S^perp = {chi : chi(s) = 1 for all s in S}.
CharacterSubgroup annihilator(const Subgroup& s);

/// Every subgroup of g (exhaustive; intended for small groups).
std::vector<Subgroup> all_subgroups(const FinAbGroup& g);

/// Homomorphism between finite abelian groups given by the images of the
/// canonical generators of the source.
class GroupHom {
 public:
  GroupHom() = default;
  /// Throws BadEmbedding when some image's order does not divide its factor.
  GroupHom(FinAbGroup source, FinAbGroup target, std::vector<GroupElem> generator_images);

  static GroupHom identity(const FinAbGroup& g);
  /// Embeds a as the first factors of direct_product(a, b).
  static GroupHom inject_left(const FinAbGroup& a, const FinAbGroup& b);
  /// Embeds b as the last factors of direct_product(a, b).
  static GroupHom inject_right(const FinAbGroup& a, const FinAbGroup& b);

  const FinAbGroup& source() const { return source_; }
  const FinAbGroup& target() const { return target_; }
  const std::vector<GroupElem>& generator_images() const { return images_; }

  GroupElem operator()(const GroupElem& g) const;
  bool is_injective() const;

 private:
  FinAbGroup source_;
  FinAbGroup target_;
  std::vector<GroupElem> images_;
};

/// G/H in invariant-factor form together with the projection G -> G/H.
struct Quotient {
  FinAbGroup group;
  Subgroup kernel;
  GroupHom projection;

  GroupElem project(const GroupElem& g) const { return projection(g); }
};

/// Computed from the Smith normal form of the relation lattice spanned by
/// the factor orders and the generators of H.
Quotient quotient(const FinAbGroup& g, const Subgroup& h);

}  // namespace gradings
