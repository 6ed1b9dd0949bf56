#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "hnp/group.hpp"
#include "hnp/intmat.hpp"

namespace hnp {

// A finite abelian group in invariant-factor form d_1 | d_2 | ... | d_r with
// every d_i >= 2; the empty list is the trivial group. Generators may carry
// witness lifts into a permutation group, so downstream results can be
// reported as concrete group elements. Lifts never affect the invariants.
class FinAb {
 public:
  FinAb() = default;
  explicit FinAb(std::vector<Int> invariants);  // validates the divisibility chain
  FinAb(std::vector<Int> invariants, GroupPtr lift_parent, std::vector<ElementIndex> lifts);

  const std::vector<Int>& invariants() const { return inv_; }
  std::size_t rank() const { return inv_.size(); }
  Int order() const;
  bool is_trivial() const { return inv_.empty(); }

  bool has_lifts() const { return lift_parent_ != nullptr; }
  const GroupPtr& lift_parent() const { return lift_parent_; }
  ElementIndex lift(std::size_t gen) const { return lifts_[gen]; }

  std::vector<Int> reduce(std::vector<Int> v) const;  // coordinates into [0, d_i)

  // Structural equality of the presentation, used to check that two values
  // refer to the same ambient group. Lifts participate so that coordinate
  // spaces of different origin do not get mixed by accident.
  friend bool operator==(const FinAb& a, const FinAb& b) {
    return a.inv_ == b.inv_ && a.lift_parent_ == b.lift_parent_ && a.lifts_ == b.lifts_;
  }

 private:
  std::vector<Int> inv_;
  GroupPtr lift_parent_;
  std::vector<ElementIndex> lifts_;
};

// A subgroup of a FinAb, stored by generator coordinate columns. Membership,
// order and quotients go through Smith normal form of the generator lattice
// [gens | diag(invariants)]; there are no element sets anywhere.
class SubAb {
 public:
  SubAb(FinAb ambient, IntMatrix gens);

  const FinAb& ambient() const;
  const IntMatrix& generators() const;  // reduced coordinate columns
  Int order() const;
  bool is_trivial() const { return order() == 1; }
  bool is_everything() const { return order() == ambient().order(); }

  bool contains(const std::vector<Int>& v) const;
  bool contains(const SubAb& other) const;

  // Invariant factors of this subgroup as an abstract abelian group.
  std::vector<Int> group_invariants() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

SubAb trivial_subab(FinAb ambient);
SubAb full_subab(FinAb ambient);
SubAb join(const SubAb& a, const SubAb& b);

// Invariant factors of ambient / s.
std::vector<Int> quotient_invariants(const FinAb& ambient, const SubAb& s);
// Invariant factors of k / s for s <= k inside a common ambient group.
std::vector<Int> subquotient_invariants(const SubAb& k, const SubAb& s);

// Homomorphism between FinAb values: column j of `matrix` holds the codomain
// coordinates of the image of domain generator j. Well-definedness
// (matrix * diag(dom invariants) = 0 in the codomain) is checked on
// construction.
class AbHom {
 public:
  AbHom(FinAb dom, FinAb cod, IntMatrix matrix);
  const FinAb& domain() const { return dom_; }
  const FinAb& codomain() const { return cod_; }
  const IntMatrix& matrix() const { return m_; }
  std::vector<Int> operator()(const std::vector<Int>& x) const;

 private:
  FinAb dom_, cod_;
  IntMatrix m_;
};

SubAb kernel(const AbHom& f);
SubAb image(const AbHom& f);
SubAb pushforward(const AbHom& f, const SubAb& s);  // s must lie in f's domain

// Direct sum of finite abelian groups, renormalized to invariant-factor form.
// `from_raw` maps concatenated ("raw") coordinates to coordinates of `sum`;
// `to_raw` maps a generator of `sum` back to raw coordinates.
struct DirectSum {
  FinAb sum;
  IntMatrix from_raw;  // rank(sum) x total raw rank
  IntMatrix to_raw;    // total raw rank x rank(sum)
  std::vector<std::size_t> offsets;

  AbHom injection(std::size_t part, const std::vector<FinAb>& parts) const;
};

DirectSum direct_sum(const std::vector<FinAb>& parts);

// The homomorphism sum -> cod assembled from one matrix per summand.
AbHom hom_from_parts(const DirectSum& ds, FinAb cod, const std::vector<IntMatrix>& part_matrices);

// H/[H,H] together with the projection map and generator lifts. The
// projection is a homomorphism onto the FinAb that vanishes exactly on the
// derived subgroup. Cheap to copy.
class Abelianization {
 public:
  explicit Abelianization(const Subgroup& h);
  const FinAb& group() const;
  const Subgroup& subgroup() const;
  std::vector<Int> project(ElementIndex member) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace hnp
