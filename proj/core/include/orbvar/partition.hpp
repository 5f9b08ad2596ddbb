#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "orbvar/lie_type.hpp"

namespace orbvar {

/// A weakly decreasing sequence of positive integers. Trailing zeros passed to
/// the constructor are dropped, so equal partitions compare equal by value.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Bracketed comma-separated parts: "[3,1]", "[]".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based); 0 past the end.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  int multiplicity(int part) const;
  std::string toString() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic; refines the dominance order.
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Dominance order. Throws std::invalid_argument on unequal sizes.
bool dominates(const Partition& lambda, const Partition& mu);
Partition transpose(const Partition& lambda);

/// Type C: odd parts have even multiplicity. Type B: even parts have even
/// multiplicity.
bool isXPartition(const Partition& lambda, LieType type);

/// The dominance-largest X-partition dominated by lambda.
Partition xCollapse(const Partition& lambda, LieType type);

/// Lusztig-Spaltenstein duality d(lambda) = xCollapse(transpose(lambda)).
Partition dualLS(const Partition& lambda, LieType type);
/// lambda is special iff d(d(lambda)) = lambda.
bool isSpecial(const Partition& lambda, LieType type);

/// All partitions of n in decreasing lexicographic order.
std::vector<Partition> partitionsOf(int n);

}  // namespace orbvar
