#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "orbvar/domino_tableau.hpp"
#include "orbvar/signed_perm.hpp"

namespace orbvar {

/// All 2^n n! elements of W(B_n), ordered by absolute values then signs.
std::vector<SignedPermutation> enumerateGroup(int n);

/// Standard domino tableaux of a shape, by adding dominoes in label order.
/// Throws DomainError if |shape| has the wrong parity for the type.
std::vector<DominoTableau> allSDT(const Partition& shape, LieType type);
std::int64_t countSDT(const Partition& shape, LieType type);

/// Shapes with n dominoes (plus the core in type B) admitting at least one
/// standard domino tableau.
std::vector<Partition> shapesOfRank(int n, LieType type);

/// Every tableau of X-partition shape reachable from T through candidate moves
/// in any order.
std::set<DominoTableau> annealTerminals(const DominoTableau& tableau);
/// Every tableau of special shape reachable through open X-cycles.
std::set<DominoTableau> specialTerminals(const DominoTableau& tableau);

/// Depth-d generalized τ-invariant: the left τ of w together with, for every
/// equal-length wall crossing and for the truncation V_ab applied on the left,
/// the depth-(d-1) signature of the image. Canonical text form.
std::string genTauSignature(const SignedPermutation& w, int depth, LieType type);

struct VerificationReport {
  std::string suite;
  int n = 0;
  LieType type = LieType::C;
  std::int64_t instances = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
  unsigned seed = 20240917;
  int jobs = 1;
  /// Random draws for the sampled suites (confluence at n >= 4).
  int samples = 500;
};

const std::vector<std::string>& suiteNames();

/// Throws std::invalid_argument for an unknown suite.
VerificationReport verifySuite(std::string_view name, int n, LieType type, const VerifyOptions& options = {});

}  // namespace orbvar
