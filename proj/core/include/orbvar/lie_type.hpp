#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbvar {

/// Classical type of the ambient Lie algebra. B and C share the Weyl group;
/// the tag selects the tableau core, the orbit-partition rule and the
/// operator domains.
enum class LieType { B, C };

/// Raised when an operation is applied outside its domain (an operator that is
/// undefined on a pair, a tableau that is not standard, a size mismatch).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline char toChar(LieType type) { return type == LieType::B ? 'B' : 'C'; }

inline LieType parseLieType(std::string_view text) {
  if (text == "B" || text == "b") return LieType::B;
  if (text == "C" || text == "c") return LieType::C;
  throw std::invalid_argument("unknown Lie type '" + std::string(text) + "' (expected B or C)");
}

/// Type B tableaux carry the single 0-square at (1,1).
inline bool hasCore(LieType type) { return type == LieType::B; }

}  // namespace orbvar
