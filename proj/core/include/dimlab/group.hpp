#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace dimlab {

using Element = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;

inline constexpr Element kIdentity = 0;
inline constexpr std::size_t kDefaultOrderCap = 512;

// Order cap for group construction, read from DIMLAB_ORDER_CAP when set.
std::size_t order_cap_from_env();

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// A finite group stored as a dense multiplication table. Element 0 is the
// identity. Copies share the (immutable) table.
class FiniteGroup {
 public:
  // The trivial group.
  FiniteGroup();

  // Breadth-first closure from the identity; generators are applied in input
  // order, so element indexing is deterministic. Permutations act on the
  // right: (a*b)(x) = b(a(x)).
  static FiniteGroup from_permutation_generators(std::size_t degree,
                                                 std::span<const Permutation> gens,
                                                 std::size_t cap = kDefaultOrderCap,
                                                 std::string name = {});

  // Row a, column b holds the index of a*b. Row/column 0 must be the identity.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<std::uint32_t>>& table,
                                       std::string name = {});

  std::size_t order() const noexcept;
  const std::string& name() const noexcept;

  Element mul(Element a, Element b) const noexcept;
  Element inv(Element a) const noexcept;
  Element pow(Element a, long long n) const noexcept;
  Element commutator(Element a, Element b) const noexcept;  // a^-1 b^-1 a b
  Element conjugate(Element a, Element g) const noexcept;   // g^-1 a g

  // Indices of the generators used at construction (empty for Cayley input).
  const std::vector<Element>& generators() const noexcept;
  std::string label(Element a) const;

  bool same_as(const FiniteGroup& other) const noexcept { return data_ == other.data_; }

 private:
  struct Data;
  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

// Subgroup of a fixed parent, stored as a membership bitset.
class Subgroup {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  // Validates that `members` contains the identity and is closed.
  static Subgroup from_members(const FiniteGroup& parent, Bits members);
  static Subgroup whole(const FiniteGroup& parent);
  static Subgroup trivial(const FiniteGroup& parent);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const Bits& bits() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.count(); }
  bool contains(Element a) const { return members_.test(a); }
  std::vector<Element> elements() const;

  bool is_trivial() const noexcept { return order() == 1; }
  bool is_whole() const noexcept { return order() == parent_.order(); }
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_.same_as(b.parent_) && a.members_ == b.members_;
  }

 private:
  friend Subgroup closure(const FiniteGroup&, std::span<const Element>);
  Subgroup(FiniteGroup parent, Bits members)
      : parent_(std::move(parent)), members_(std::move(members)) {}

  FiniteGroup parent_;
  Bits members_;
};

Subgroup closure(const FiniteGroup& group, std::span<const Element> seed);
Subgroup closure(const FiniteGroup& group, std::initializer_list<Element> seed);

bool is_normal(const Subgroup& h);
bool is_abelian(const FiniteGroup& group);
Subgroup center(const FiniteGroup& group);
Subgroup intersection(const Subgroup& a, const Subgroup& b);

// Closure of {[a,b] : a in A, b in B}.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);

// Subgroup generated by all n-th powers of elements of H.
Subgroup power_subgroup(const Subgroup& h, std::uint64_t n);

// Product of normal subgroups. Throws NotNormal / ParentMismatch.
Subgroup subgroup_product(std::span<const Subgroup> parts);

// [G, [G,G], ...] until a term repeats or max_len terms are produced. A
// nilpotent group ends at the trivial subgroup; otherwise the last term is
// the stable one.
std::vector<Subgroup> lower_central_series(const FiniteGroup& group, std::size_t max_len = 64);
bool is_nilpotent(const FiniteGroup& group);

std::uint64_t element_order(const FiniteGroup& group, Element a);

// Elements of p-power order. Requires a nilpotent group.
Subgroup torsion_p_component(const FiniteGroup& group, std::uint64_t p);
unsigned p_exponent(const FiniteGroup& group, std::uint64_t p);

// {g : g^m in H for some 1 <= m <= |G|}. H must be normal.
Subgroup isolator(const Subgroup& h);

// Invariant factors d1 | d2 | ... of N/M (1s omitted). Requires M normal in
// N with N/M abelian.
std::vector<std::uint64_t> abelian_invariants(const Subgroup& n, const Subgroup& m);

}  // namespace dimlab
