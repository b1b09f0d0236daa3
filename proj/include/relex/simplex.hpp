#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "relex/rational.hpp"
#include "relex/rng.hpp"
#include "relex/sequence.hpp"

namespace relex {

/// One relation code: positive ids are ranked recurring atoms; non-positive
/// ids 0,-1,...,-k are the relation's own one-off elements (blips), assigned
/// downward from 0. Construction validates both the structure and the
/// blip-id convention.
class RStarCode {
 public:
  RStarCode(Structure structure, Signature sig);

  const Structure& structure() const { return structure_; }
  const Signature& sig() const { return sig_; }
  const std::string& key() const { return key_; }  // cached encode text

  friend bool operator==(const RStarCode& a, const RStarCode& b) {
    return a.structure_ == b.structure_ && a.sig_ == b.sig_;
  }

 private:
  Structure structure_;
  Signature sig_;
  std::string key_;
};

/// Structure validity plus the consecutive-from-zero blip convention.
ValidationReport validate_code(const Structure& a, const Signature& sig);

/// A finitely supported point of the code simplex: positive weights summing
/// to one. Weights are exact rationals; float input is accepted when its
/// exact sum is within 1e-12 of one, in which case the point is normalized
/// exactly. Support iterates in encode-text order, the fixed enumeration
/// order used everywhere for tie-breaking.
class SimplexPoint {
 public:
  struct Entry {
    Structure code;
    Rational weight;
  };

  SimplexPoint(Signature sig,
               const std::vector<std::pair<Structure, Rational>>& entries);

  const Signature& sig() const { return sig_; }
  const std::map<std::string, Entry>& support() const { return support_; }
  std::size_t support_size() const { return support_.size(); }

  /// Weight of a code, 0 when absent from the support.
  Rational weight_of(const Structure& code) const;

 private:
  Signature sig_;
  std::map<std::string, Entry> support_;
};

/// L1 distance over the union of supports. Signatures must match.
Rational simplex_distance(const SimplexPoint& f, const SimplexPoint& g);

/// n i.i.d. categorical draws from f. Reproducible given the rng seed.
std::vector<RStarCode> sample_codes(const SimplexPoint& f, std::size_t n,
                                    Rng& rng);

/// Rewrites per-relation blip ids into globally distinct non-positive ids.
/// Item n with blips 0,...,-k maps -i to m-i where m is the running counter
/// (initially 0), which then drops by k+1; items without blips pass through.
/// Emitted blip ids strictly decrease across the sequence.
RelSequence dagger(const std::vector<RStarCode>& codes);
RelSequence dagger(const Signature& sig, const std::vector<Structure>& codes);

/// Law of the first n relations generated from f: i.i.d. codes, dagger, then
/// canonical form.
CanonicalSequence sample_epsilon_f(const SimplexPoint& f, std::size_t n,
                                   Rng& rng);

/// Mixture over simplex points: either an explicit finite list of weighted
/// components or a programmatic generator yielding one point per draw.
class MixingMeasure {
 public:
  explicit MixingMeasure(
      std::vector<std::pair<Rational, SimplexPoint>> components);
  explicit MixingMeasure(std::function<SimplexPoint(Rng&)> generator);

  bool finite() const { return !components_.empty(); }
  const std::vector<std::pair<Rational, SimplexPoint>>& components() const;

  /// One draw from the mixing measure.
  SimplexPoint draw(Rng& rng) const;

 private:
  std::vector<std::pair<Rational, SimplexPoint>> components_;
  std::function<SimplexPoint(Rng&)> generator_;
};

/// Draw f from phi, then a length-n sequence from f.
CanonicalSequence sample_epsilon_phi(const MixingMeasure& phi, std::size_t n,
                                     Rng& rng);

/// Singleton-signature point with weight atoms[j-1] on code {j} and `dust`
/// on the all-blip code {0}. Atoms must be positive and non-increasing and
/// the total mass must be exactly one.
SimplexPoint make_paintbox(const Rational& dust, std::vector<Rational> atoms);

RStarCode make_singleton_code(Id element);

/// Directed pair code under alpha=(2); from != to.
RStarCode make_pair_code(Id from, Id to);

/// Symmetric interaction among k distinct elements: all k! orderings stored
/// in slot k under the graded signature.
RStarCode make_set_code(const std::vector<Id>& elements);

/// Ordered walk through k elements: a single k-tuple in slot k under the
/// graded signature.
RStarCode make_path_code(const std::vector<Id>& elements);

/// Representative of a code modulo renaming of its non-positive ids: the
/// blip relabeling minimizing the encoded text. Codes that differ only in
/// blip bookkeeping generate equivalent sequences, so estimators merge them
/// into this representative.
Structure blip_class_representative(const Structure& code);

/// Maps every support code to its blip-class representative, summing weights.
SimplexPoint merge_blip_classes(const SimplexPoint& f);

}  // namespace relex
