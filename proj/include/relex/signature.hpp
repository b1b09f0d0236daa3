#pragma once

#include <cstddef>
#include <vector>

namespace relex {

/// Arity declaration for relation slots: slot j admits tuples of arity(j)
/// components. Stored as the finite prefix of positive arities; every slot
/// past the prefix has arity zero, and a zero entry may never be followed by
/// a non-zero one.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<int> arities);

  /// 1-based slot index; returns 0 past the stored prefix.
  int arity(std::size_t slot) const {
    return (slot >= 1 && slot <= arities_.size()) ? arities_[slot - 1] : 0;
  }

  std::size_t max_slot() const { return arities_.size(); }
  const std::vector<int>& arities() const { return arities_; }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<int> arities_;  // trimmed: no trailing zeros
};

/// alpha = (2): single binary relation (directed edges).
inline Signature pair_signature() { return Signature({2}); }

/// alpha = (1): single unary relation (species / partition blocks).
inline Signature singleton_signature() { return Signature({1}); }

/// alpha(j) = j for j <= max_arity: sets and paths of bounded size.
Signature graded_signature(std::size_t max_arity);

}  // namespace relex
