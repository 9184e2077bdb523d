#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace brieskorn {

enum class Equivalence { Equivalent, NotEquivalent, Undetermined };

inline std::string_view to_string(Equivalence s) {
  switch (s) {
    case Equivalence::Equivalent: return "Equivalent";
    case Equivalence::NotEquivalent: return "NotEquivalent";
    case Equivalence::Undetermined: return "Undetermined";
  }
  return "?";
}

/// Outcome of a decision procedure. `reason` is a stable theorem tag
/// (etsu, cortop, submfam, class1, tsam, p2, su3, ...); `witness` is a
/// permutation or the condition that failed.
struct EquivalenceVerdict {
  Equivalence status = Equivalence::Undetermined;
  std::string reason;
  std::optional<std::string> witness;

  static EquivalenceVerdict equivalent(std::string tag, std::optional<std::string> w = std::nullopt) {
    return {Equivalence::Equivalent, std::move(tag), std::move(w)};
  }
  static EquivalenceVerdict not_equivalent(std::string tag, std::optional<std::string> w = std::nullopt) {
    return {Equivalence::NotEquivalent, std::move(tag), std::move(w)};
  }
  static EquivalenceVerdict undetermined(std::string tag, std::optional<std::string> w = std::nullopt) {
    return {Equivalence::Undetermined, std::move(tag), std::move(w)};
  }
};

}  // namespace brieskorn
