#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relex/rational.hpp"
#include "relex/structure.hpp"

namespace relex {

/// A finite sequence of structures over a common signature. Position order
/// is meaningful; domain labels are not (they are quotiented out by
/// canonical_form).
struct RelSequence {
  Signature sig;
  std::vector<Structure> items;

  std::size_t size() const { return items.size(); }
};

ValidationReport validate(const RelSequence& x);
void require_valid(const RelSequence& x);

/// The chosen representative of a sequence's relabeling class. Domain
/// elements are renamed 1,2,3,... in order of first appearance; within each
/// item, fresh ids are assigned to minimize the item's encoded text. Two
/// sequences have equal canonical forms exactly when one is a global
/// relabeling of the other.
class CanonicalSequence {
 public:
  const Signature& sig() const { return sig_; }
  const std::vector<Structure>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

  /// Relabeling applied to reach canonical form: original id -> canonical id.
  const std::map<Id, Id>& witness() const { return witness_; }

  RelSequence as_rel_sequence() const { return RelSequence{sig_, items_}; }

  friend bool operator==(const CanonicalSequence& a,
                         const CanonicalSequence& b) {
    return a.sig_ == b.sig_ && a.items_ == b.items_;
  }

 private:
  CanonicalSequence(Signature sig, std::vector<Structure> items,
                    std::map<Id, Id> witness)
      : sig_(std::move(sig)),
        items_(std::move(items)),
        witness_(std::move(witness)) {}

  friend CanonicalSequence canonical_form(const RelSequence&);

  Signature sig_;
  std::vector<Structure> items_;
  std::map<Id, Id> witness_;
};

/// First-appearance canonicalization. Per item, the assignment of fresh
/// consecutive ids to yet-unseen elements is chosen by exhaustive
/// minimization of the encoded text, so the per-item cost is factorial in
/// the number of new elements (small in all intended uses; capped at 10).
CanonicalSequence canonical_form(const RelSequence& x);

/// Canonical form of a single structure, ignoring any signature. Used as an
/// isomorphism-class key.
Structure canonical_structure(const Structure& a);

/// True iff some global bijection of domain labels carries y onto x.
bool are_equivalent(const RelSequence& x, const RelSequence& y);

/// Canonical form of the first n items.
CanonicalSequence restrict(const CanonicalSequence& x, std::size_t n);

/// Canonical form of i -> x(sigma(i)). sigma holds 1-based values and must
/// be a permutation of {1,...,n}.
CanonicalSequence permute(const CanonicalSequence& x,
                          const std::vector<std::size_t>& sigma);

/// 1/(1+s) where s is the deepest prefix on which the two classes agree,
/// compared up to `depth` (default and cap: the shorter length). Returns 0
/// when they agree through the full comparison depth.
Rational distance(const CanonicalSequence& x, const CanonicalSequence& y,
                  std::optional<std::size_t> depth = std::nullopt);

/// Item encodings joined with '|'; the class key used by distributions.
std::string encode_sequence(const std::vector<Structure>& items);

}  // namespace relex
