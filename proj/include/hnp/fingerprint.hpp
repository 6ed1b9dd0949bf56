#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hnp/group.hpp"

namespace hnp {

// Conjugation-invariant descriptor of a subgroup. The label is assigned from
// a fixed decision table covering the isomorphism types that occur among the
// subgroups of M11 (GAP naming: D8 and QD16 are the dihedral and
// quasidihedral groups of order 8 and 16). Groups outside the table are
// labeled "order-N-unrecognized". Labels are display-only and never feed
// mathematical decisions.
struct Fingerprint {
  std::uint64_t order = 1;
  bool abelian = true;
  std::uint64_t exponent = 1;
  std::vector<std::pair<int, std::size_t>> element_orders;  // (order, count), ascending
  int derived_length = 0;  // -1 when the derived series stops at a nontrivial perfect core
  std::uint64_t center_order = 1;
  std::string label;
};

Fingerprint fingerprint(const Subgroup& h);

inline std::string structure_label(const Subgroup& h) { return fingerprint(h).label; }

}  // namespace hnp
