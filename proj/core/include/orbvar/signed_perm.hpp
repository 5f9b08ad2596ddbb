#pragma once

#include <compare>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbvar/lie_type.hpp"

namespace orbvar {

/// Index of a simple root. Index 1 is the special root (2e_1 in type C, e_1 in
/// type B); index i >= 2 is e_i - e_{i-1}. The matching simple reflection s_1
/// negates position 1 and s_i swaps positions i-1 and i.
struct RootIndex {
  int value = 1;
  friend auto operator<=>(const RootIndex&, const RootIndex&) = default;
};

using RootSet = std::set<RootIndex>;

/// An element of the hyperoctahedral group W(B_n) = W(C_n) in one-line notation:
/// entry i holds w(i), and |w(1)|, ..., |w(n)| is a permutation of 1..n.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> entries);

  static SignedPermutation identity(int n);
  static SignedPermutation generator(int n, RootIndex i);
  /// Space-separated signed integers, e.g. "2 -1 3".
  static SignedPermutation parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }
  /// w(i) for i in ±1..±n, with w(-i) = -w(i).
  int operator()(int i) const;
  std::span<const int> entries() const { return entries_; }
  bool isIdentity() const;
  std::string toString() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> entries_;
};

/// (u∘v)(i) = u(v(i)).
SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v);
SignedPermutation inverse(const SignedPermutation& w);

/// Coxeter length with respect to {s_1, ..., s_n}. The group does not depend
/// on the type; the parameter is kept so call sites read like the math.
int length(const SignedPermutation& w, LieType type = LieType::C);

/// i is a right descent iff length(w s_i) < length(w).
RootSet rightDescents(const SignedPermutation& w, LieType type = LieType::C);
RootSet leftDescents(const SignedPermutation& w, LieType type = LieType::C);

std::string toString(const RootSet& roots);

}  // namespace orbvar
