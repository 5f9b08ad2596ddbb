#pragma once

#include <optional>
#include <string>

#include "orbvar/cycles.hpp"
#include "orbvar/insertion.hpp"
#include "orbvar/signed_perm.hpp"

namespace orbvar {

enum class Side { Left, Right };

/// Left τ-invariant is the left descent set, right τ the right descent set.
RootSet tau(const SignedPermutation& w, Side side, LieType type = LieType::C);

/// Equal-length wall crossing on group elements: i, j >= 2 adjacent, exactly
/// one of them a right descent of w. Returns the unique element of
/// {w s_i, w s_j} whose right descents in {i, j} are the other root.
/// Throws DomainError outside the domain.
SignedPermutation tSameLength(const SignedPermutation& w, RootIndex i, RootIndex j);
std::optional<SignedPermutation> tryTSameLength(const SignedPermutation& w, RootIndex i, RootIndex j);

struct OperatorDomainReport {
  bool defined = false;
  std::optional<std::string> caseName;  // e.g. "(3,1)"
  std::string reason;
};

/// Unequal-length truncated wall crossing. Domain: the first two dominoes of
/// the right tableau (with the core in type B) have shape (3,1) or (2,2) in
/// type C, (3,2) or (3,1,1) in type B.
OperatorDomainReport vTruncatedDomain(const TableauPair& pair);
TableauPair vTruncated(const TableauPair& pair);

/// Truncation of the type-D wall crossing. Domain: type C, the first four
/// dominoes of the right tableau form (4,3,1) with domino 2 vertical; type B,
/// the core and first three dominoes form (4,2,1).
OperatorDomainReport vDDomain(const TableauPair& pair);
TableauPair vD(const TableauPair& pair);

/// Swaps two dominoes that fill a 2x2 box between the horizontal and vertical
/// tilings of the box, keeping the smaller label first. In type B, dominoes
/// that do not fill a box exchange their positions instead.
DominoTableau transposeInBox(const DominoTableau& tableau, int a, int b);

}  // namespace orbvar
