#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hnp/bitset.hpp"
#include "hnp/perm.hpp"

namespace hnp {

using ElementIndex = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 10'000;

// A finite permutation group with a fully enumerated, indexed element set.
// Index 0 is the identity; the remaining indices follow breadth-first order
// over the generator list as given, which makes element indices -- and
// everything derived from them (double coset representatives, witness
// generators, Sylow extensions) -- deterministic and reproducible.
//
// Immutable after construction; safe to share across threads.
class Group {
 public:
  static std::shared_ptr<const Group> generate(std::vector<Permutation> gens, int degree,
                                               std::size_t cap = kDefaultOrderCap);

  std::size_t order() const { return elements_.size(); }
  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<ElementIndex>& generator_indices() const { return generator_indices_; }
  const Permutation& element(ElementIndex i) const { return elements_[i]; }

  std::optional<ElementIndex> find(const Permutation& p) const;
  ElementIndex index_of(const Permutation& p) const;  // throws PreconditionError if absent

  ElementIndex mul(ElementIndex a, ElementIndex b) const;   // a first, then b
  ElementIndex inv(ElementIndex a) const { return inverse_[a]; }
  ElementIndex conj(ElementIndex h, ElementIndex x) const;  // x^-1 h x
  ElementIndex comm(ElementIndex a, ElementIndex b) const;  // a^-1 b^-1 a b
  ElementIndex pow(ElementIndex a, long long e) const;
  int element_order(ElementIndex a) const { return element_order_[a]; }

 private:
  Group() = default;
  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ElementIndex> generator_indices_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementIndex, PermHash> index_;
  std::vector<ElementIndex> inverse_;
  std::vector<int> element_order_;
};

using GroupPtr = std::shared_ptr<const Group>;

// A subgroup of a fully enumerated parent group: a bitset over the parent's
// element indices plus a small witness generating set. Immutable.
class Subgroup {
 public:
  Subgroup() = default;  // empty placeholder; not a usable value

  const GroupPtr& parent() const { return parent_; }
  std::size_t order() const { return members_list_.size(); }
  bool is_trivial() const { return order() == 1; }
  bool contains(ElementIndex i) const { return members_.test(i); }
  const IndexSet& members() const { return members_; }
  const std::vector<ElementIndex>& members_list() const { return members_list_; }  // ascending
  const std::vector<ElementIndex>& witness_generators() const { return gens_; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  Subgroup(GroupPtr parent, IndexSet members, std::vector<ElementIndex> members_list,
           std::vector<ElementIndex> gens)
      : parent_(std::move(parent)),
        members_(std::move(members)),
        members_list_(std::move(members_list)),
        gens_(std::move(gens)) {}

  GroupPtr parent_;
  IndexSet members_;
  std::vector<ElementIndex> members_list_;
  std::vector<ElementIndex> gens_;

  friend Subgroup subgroup_from_member_set(GroupPtr parent, const IndexSet& members);
  friend Subgroup subgroup_from_index_generators(GroupPtr parent, std::vector<ElementIndex> gens);
  friend Subgroup whole_group(GroupPtr parent);
  friend Subgroup conjugate_subgroup(const Subgroup& h, ElementIndex g);
  friend Subgroup normal_closure_in(const Subgroup& ambient, const std::vector<ElementIndex>& seeds);
};

Subgroup trivial_subgroup(GroupPtr parent);
Subgroup whole_group(GroupPtr parent);

// Closure of the given generators inside the parent. Throws PreconditionError
// if a generator does not belong to the parent.
Subgroup subgroup_from_generators(GroupPtr parent, const std::vector<Permutation>& gens);
Subgroup subgroup_from_index_generators(GroupPtr parent, std::vector<ElementIndex> gens);

// Members must already form a subgroup; a small witness generating set is
// extracted greedily in index order.
Subgroup subgroup_from_member_set(GroupPtr parent, const IndexSet& members);

// H^g = { g^-1 h g : h in H }.
Subgroup conjugate_subgroup(const Subgroup& h, ElementIndex g);

Subgroup intersect(const Subgroup& a, const Subgroup& b);

// N_G(H) over the whole parent, by exhaustive sweep.
Subgroup normalizer(const Subgroup& h);
// N_A(H) = { a in A : H^a = H }.
Subgroup normalizer_in(const Subgroup& ambient, const Subgroup& h);

// Some g with A^g = B, or nullopt. Exhaustive sweep with order and
// element-order-histogram pruning.
std::optional<ElementIndex> conjugating_element(const Subgroup& a, const Subgroup& b);

// True iff some conjugate of A lies inside B.
bool contained_in_conjugate(const Subgroup& a, const Subgroup& b);

// [H,H]: the subgroup generated by all commutators of H (computed as the
// normal closure in H of the commutators of its witness generators).
Subgroup derived_subgroup(const Subgroup& h);

// Normal closure of the given elements inside `ambient`.
Subgroup normal_closure_in(const Subgroup& ambient, const std::vector<ElementIndex>& seeds);

struct DoubleCoset {
  ElementIndex representative;  // least element index in the coset
  std::size_t size;
};

// Decomposition G = union of H x K, representatives in ascending index order.
std::vector<DoubleCoset> double_cosets(const Subgroup& h, const Subgroup& k);

// A Sylow p-subgroup of H, grown from the least-index p-element by repeated
// normalizer extension; ties broken by least element index.
Subgroup sylow_subgroup(const Subgroup& h, std::uint64_t p);

// (element order, count) pairs in ascending order of element order.
std::vector<std::pair<int, std::size_t>> element_order_histogram(const Subgroup& h);

}  // namespace hnp
