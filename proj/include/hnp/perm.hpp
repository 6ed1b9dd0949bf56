#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hnp/errors.hpp"

namespace hnp {

using Point = std::uint16_t;

// A permutation of {0, ..., degree-1} stored as its image table.
// Products compose left to right: (p * q) applies p first, then q,
// matching GAP's convention so that GAP-generated cycle data reproduces
// bit-exactly. External notation (cycle strings) is 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);
  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  Point operator()(Point p) const { return images_[p]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  int order() const;  // lcm of cycle lengths

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation&, const Permutation&) = default;

  // 1-based disjoint cycle notation; "()" for the identity.
  std::string cycle_string() const;

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// Parses a product of cycles in 1-based cycle notation, e.g. "(1,2,3)(4,5)".
// Whitespace is ignored, "()" is the identity, cycles need not be disjoint
// and are multiplied left to right. Throws ParseError on malformed input,
// points outside 1..degree, or a repeated point within one cycle.
Permutation parse_permutation(std::string_view text, int degree);

}  // namespace hnp
