#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "relex/starmap.hpp"

namespace relex {

/// Exact law of a length-n draw over canonical sequence classes. Keys are
/// encode_sequence texts; each entry keeps a representative item list so the
/// class can be permuted. Probabilities are positive and sum to one.
struct ClassDistribution {
  struct Entry {
    std::vector<Structure> items;
    Rational prob;
  };

  Signature sig;
  std::size_t n = 0;
  std::map<std::string, Entry> classes;

  Rational total() const;
};

/// Plug-in estimate of the generating simplex point from one observed
/// canonical sequence: elements seen in at least `recurrence_threshold`
/// positions become atoms ranked by empirical propensity (template profile,
/// then first appearance, breaking ties); every item is recoded accordingly
/// and code frequencies are returned. Blip code classes are merged, so the
/// estimate targets merge_blip_classes of the truth.
SimplexPoint estimate_f(const CanonicalSequence& x,
                        int recurrence_threshold = 2);

/// Fraction of positions whose item contains the element. Errors when the
/// element never occurs.
Rational empirical_propensity(const CanonicalSequence& x, Id element);

inline constexpr std::size_t kDefaultEnumerationBudget = 1'000'000;

/// Brute-force law of a length-n draw from f: enumerates all support^n code
/// tuples, daggers, canonicalizes, and accumulates exact products. Throws
/// when support_size^n exceeds the budget.
ClassDistribution exact_distribution(
    const SimplexPoint& f, std::size_t n,
    std::size_t budget = kDefaultEnumerationBudget);

/// Same enumeration with one (possibly different) point per position. This
/// is how non-exchangeable laws are expressed in tests.
ClassDistribution exact_distribution_positional(
    const std::vector<SimplexPoint>& per_position,
    std::size_t budget = kDefaultEnumerationBudget);

/// Mixture law: weighted sum of the component laws. Requires a finite
/// mixture.
ClassDistribution exact_distribution(
    const MixingMeasure& phi, std::size_t n,
    std::size_t budget = kDefaultEnumerationBudget);

struct ExchangeabilityReport {
  Rational max_tv;
  /// Permutation (1-based images) and the exact total-variation distance
  /// between the base law and its pushforward under that reordering.
  std::vector<std::pair<std::vector<std::size_t>, Rational>> per_sigma;
};

/// Pushes the law through every permutation of positions and reports the
/// total-variation distances. Position-invariant laws report exactly zero.
ExchangeabilityReport exchangeability_report(const ClassDistribution& dist);

ExchangeabilityReport test_exchangeability_exact(
    const SimplexPoint& f, std::size_t n,
    std::size_t budget = kDefaultEnumerationBudget);

using SequenceSampler = std::function<CanonicalSequence(std::size_t, Rng&)>;

struct Chi2Report {
  double chi2 = 0.0;
  long dof = 0;
  double p_value = 1.0;
  /// Set when the pooled table has fewer than two class bins.
  bool uninformative = false;
  std::size_t bins = 0;
};

/// Two-sample chi-square test comparing N draws against N permuted draws,
/// binned by canonical class. Bins with expected count below 5 are pooled.
Chi2Report test_exchangeability_mc(const SequenceSampler& sampler,
                                   std::size_t n,
                                   const std::vector<std::size_t>& sigma,
                                   std::size_t samples, Rng& rng);

}  // namespace relex
