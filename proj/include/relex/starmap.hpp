#pragma once

#include <optional>
#include <vector>

#include "relex/simplex.hpp"

namespace relex {

/// A structure whose domain elements carry real labels in [0,1].
using Label = double;
using LabeledStructure = BasicStructure<Label>;

/// Substitutes one independent Uniform[0,1] label per distinct domain
/// element of x into every occurrence. Distinct elements always receive
/// distinct labels (collisions are redrawn). Deterministic given the seed.
std::vector<LabeledStructure> attach_uniform_labels(const CanonicalSequence& x,
                                                    Rng& rng);

/// Isomorphism-class key of a single structure: the encoding of its
/// canonical form, label values erased.
std::string shape_key(const Structure& a);
std::string shape_key(const LabeledStructure& a);

/// Probability that a single draw from f contains the given atom.
Rational propensity(const SimplexPoint& f, Id atom);

/// Mass of support codes matching the pattern's template (shape plus atom
/// count) and containing the atom. Used only for tie-breaking.
Rational propensity_given(const SimplexPoint& f, Id atom,
                          const Structure& pattern);

/// Recurring labels ranked by propensity, highest first. Holds the rank
/// lookup used by the star map.
class AtomOrdering {
 public:
  AtomOrdering() = default;
  AtomOrdering(std::vector<Label> atoms, std::vector<Rational> propensities);

  std::size_t size() const { return atoms_.size(); }
  const std::vector<Label>& atoms() const { return atoms_; }
  const std::vector<Rational>& propensities() const { return propensities_; }

  /// 1-based rank, or nothing when the label is not a recurring atom.
  std::optional<Id> rank_of(Label u) const;

 private:
  std::vector<Label> atoms_;
  std::vector<Rational> propensities_;
  std::map<Label, Id> rank_;
};

/// Labels occurring in at least `recurrence_threshold` distinct positions,
/// ranked by the fraction of positions containing them. Ties fall to the
/// per-template profile along the fixed enumeration (first differing
/// template, larger mass first), then to increasing label value.
AtomOrdering atom_order(const std::vector<LabeledStructure>& labeled,
                        int recurrence_threshold = 2);

/// Replaces each ranked label u_j by j and every remaining label by a
/// non-positive id, order-preservingly: the largest non-atom label becomes
/// 0, the next -1, and so on.
RStarCode star(const Signature& sig, const LabeledStructure& a,
               const AtomOrdering& ordering);

/// Labels x uniformly, orders atoms empirically, stars every item, daggers,
/// and canonicalizes; true iff the result equals x. Holds with certainty for
/// canonical x at the default recurrence threshold.
bool roundtrip_check(const CanonicalSequence& x, Rng& rng);

}  // namespace relex
