#include "relex/simplex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace relex {

namespace {

const Rational kSumTolerance(1, 1000000000000LL);  // 1e-12
constexpr std::size_t kMaxBlipsPerCode = 10;

Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace

ValidationReport validate_code(const Structure& a, const Signature& sig) {
  ValidationReport report = validate(a, sig);
  std::set<Id> nonpos;
  for (Id v : domain_of(a))
    if (v <= 0) nonpos.insert(v);
  if (!nonpos.empty()) {
    Id lowest = *nonpos.begin();
    if (*nonpos.rbegin() != 0 ||
        nonpos.size() != static_cast<std::size_t>(1 - lowest))
      report.violations.push_back("blip ids must run 0,-1,...,-k without gaps");
  }
  return report;
}

RStarCode::RStarCode(Structure structure, Signature sig)
    : structure_(std::move(structure)), sig_(std::move(sig)) {
  ValidationReport report = validate_code(structure_, sig_);
  if (!report.ok())
    throw std::invalid_argument("invalid code " + encode(structure_) + ": " +
                                report.to_string());
  key_ = encode(structure_);
}

SimplexPoint::SimplexPoint(
    Signature sig, const std::vector<std::pair<Structure, Rational>>& entries)
    : sig_(std::move(sig)) {
  for (const auto& [code, weight] : entries) {
    ValidationReport report = validate_code(code, sig_);
    if (!report.ok())
      throw std::invalid_argument("simplex point: invalid code " +
                                  encode(code) + ": " + report.to_string());
    if (weight < 0)
      throw std::invalid_argument("simplex point: negative weight on " +
                                  encode(code));
    if (weight == 0) continue;
    std::string key = encode(code);
    auto it = support_.find(key);
    if (it == support_.end())
      support_.emplace(std::move(key), Entry{code, weight});
    else
      it->second.weight += weight;
  }
  if (support_.empty())
    throw std::invalid_argument("simplex point: empty support");
  Rational sum(0);
  for (const auto& [key, entry] : support_) sum += entry.weight;
  if (sum != 1) {
    if (rational_abs(sum - 1) > kSumTolerance)
      throw std::invalid_argument("simplex point: weights sum to " +
                                  format_rational(sum) + ", expected 1");
    for (auto& [key, entry] : support_) entry.weight /= sum;
  }
}

Rational SimplexPoint::weight_of(const Structure& code) const {
  auto it = support_.find(encode(code));
  return it == support_.end() ? Rational(0) : it->second.weight;
}

Rational simplex_distance(const SimplexPoint& f, const SimplexPoint& g) {
  if (f.sig() != g.sig())
    throw std::invalid_argument("simplex_distance: signature mismatch");
  Rational total(0);
  auto it = f.support().begin();
  auto jt = g.support().begin();
  while (it != f.support().end() || jt != g.support().end()) {
    if (jt == g.support().end() ||
        (it != f.support().end() && it->first < jt->first)) {
      total += it->second.weight;
      ++it;
    } else if (it == f.support().end() || jt->first < it->first) {
      total += jt->second.weight;
      ++jt;
    } else {
      total += rational_abs(it->second.weight - jt->second.weight);
      ++it;
      ++jt;
    }
  }
  return total;
}

std::vector<RStarCode> sample_codes(const SimplexPoint& f, std::size_t n,
                                    Rng& rng) {
  std::vector<const SimplexPoint::Entry*> entries;
  std::vector<double> cum;
  entries.reserve(f.support_size());
  cum.reserve(f.support_size());
  double acc = 0.0;
  for (const auto& [key, entry] : f.support()) {
    acc += to_double(entry.weight);
    entries.push_back(&entry);
    cum.push_back(acc);
  }
  std::vector<RStarCode> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double u = rng.next_double() * acc;
    std::size_t idx = static_cast<std::size_t>(
        std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
    if (idx >= entries.size()) idx = entries.size() - 1;
    out.emplace_back(entries[idx]->code, f.sig());
  }
  return out;
}

RelSequence dagger(const Signature& sig, const std::vector<Structure>& codes) {
  std::vector<Structure> items;
  items.reserve(codes.size());
  Id m = 0;  // next blip id to hand out is m, then m-1, ...
  for (const auto& code : codes) {
    ValidationReport report = validate_code(code, sig);
    if (!report.ok())
      throw std::invalid_argument("dagger: invalid code " + encode(code) +
                                  ": " + report.to_string());
    std::map<Id, Id> rho;
    Id lowest = 1;  // sentinel: no blips seen
    for (Id v : domain_of(code)) {
      if (v <= 0) {
        rho[v] = m + v;
        lowest = std::min(lowest == 1 ? v : lowest, v);
      } else {
        rho[v] = v;
      }
    }
    if (lowest == 1) {
      items.push_back(code);
      continue;
    }
    items.push_back(relabel(code, rho));
    m += lowest - 1;
  }
  return RelSequence{sig, std::move(items)};
}

RelSequence dagger(const std::vector<RStarCode>& codes) {
  if (codes.empty()) return RelSequence{Signature(), {}};
  const Signature& sig = codes.front().sig();
  std::vector<Structure> structures;
  structures.reserve(codes.size());
  for (const auto& c : codes) {
    if (c.sig() != sig)
      throw std::invalid_argument("dagger: codes with mixed signatures");
    structures.push_back(c.structure());
  }
  return dagger(sig, structures);
}

CanonicalSequence sample_epsilon_f(const SimplexPoint& f, std::size_t n,
                                   Rng& rng) {
  std::vector<RStarCode> codes = sample_codes(f, n, rng);
  std::vector<Structure> structures;
  structures.reserve(codes.size());
  for (const auto& c : codes) structures.push_back(c.structure());
  return canonical_form(dagger(f.sig(), structures));
}

MixingMeasure::MixingMeasure(
    std::vector<std::pair<Rational, SimplexPoint>> components)
    : components_(std::move(components)) {
  if (components_.empty())
    throw std::invalid_argument("mixing measure: no components");
  const Signature& sig = components_.front().second.sig();
  Rational sum(0);
  for (const auto& [w, f] : components_) {
    if (f.sig() != sig)
      throw std::invalid_argument("mixing measure: mixed signatures");
    if (w <= 0)
      throw std::invalid_argument("mixing measure: weights must be positive");
    sum += w;
  }
  if (sum != 1) {
    if (rational_abs(sum - 1) > kSumTolerance)
      throw std::invalid_argument("mixing measure: weights sum to " +
                                  format_rational(sum) + ", expected 1");
    for (auto& [w, f] : components_) w /= sum;
  }
}

MixingMeasure::MixingMeasure(std::function<SimplexPoint(Rng&)> generator)
    : generator_(std::move(generator)) {
  if (!generator_)
    throw std::invalid_argument("mixing measure: null generator");
}

const std::vector<std::pair<Rational, SimplexPoint>>&
MixingMeasure::components() const {
  return components_;
}

SimplexPoint MixingMeasure::draw(Rng& rng) const {
  if (!finite()) return generator_(rng);
  std::vector<double> cum;
  cum.reserve(components_.size());
  double acc = 0.0;
  for (const auto& [w, f] : components_) {
    acc += to_double(w);
    cum.push_back(acc);
  }
  double u = rng.next_double() * acc;
  std::size_t idx = static_cast<std::size_t>(
      std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
  if (idx >= components_.size()) idx = components_.size() - 1;
  return components_[idx].second;
}

CanonicalSequence sample_epsilon_phi(const MixingMeasure& phi, std::size_t n,
                                     Rng& rng) {
  SimplexPoint f = phi.draw(rng);
  return sample_epsilon_f(f, n, rng);
}

SimplexPoint make_paintbox(const Rational& dust, std::vector<Rational> atoms) {
  if (dust < 0) throw std::invalid_argument("paintbox: negative dust mass");
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    if (atoms[j] <= 0)
      throw std::invalid_argument("paintbox: atom weights must be positive");
    if (j > 0 && atoms[j] > atoms[j - 1])
      throw std::invalid_argument("paintbox: atom weights must be non-increasing");
  }
  // Total-mass validation (with the near-one float tolerance) is delegated to
  // the SimplexPoint constructor.
  std::vector<std::pair<Structure, Rational>> entries;
  for (std::size_t j = 0; j < atoms.size(); ++j)
    entries.emplace_back(
        make_structure<Id>(1, {{static_cast<Id>(j) + 1}}), atoms[j]);
  if (dust > 0) entries.emplace_back(make_structure<Id>(1, {{Id(0)}}), dust);
  return SimplexPoint(singleton_signature(), entries);
}

RStarCode make_singleton_code(Id element) {
  return RStarCode(make_structure<Id>(1, {{element}}), singleton_signature());
}

RStarCode make_pair_code(Id from, Id to) {
  if (from == to) throw std::invalid_argument("pair code: endpoints coincide");
  return RStarCode(make_structure<Id>(1, {{from, to}}), pair_signature());
}

RStarCode make_set_code(const std::vector<Id>& elements) {
  if (elements.empty()) throw std::invalid_argument("set code: no elements");
  std::vector<Id> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("set code: repeated element");
  std::vector<Structure::Tuple> tuples;
  do {
    tuples.push_back(sorted);
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  std::size_t k = elements.size();
  return RStarCode(make_structure<Id>(k, std::move(tuples)),
                   graded_signature(k));
}

RStarCode make_path_code(const std::vector<Id>& elements) {
  if (elements.empty()) throw std::invalid_argument("path code: no elements");
  std::set<Id> seen(elements.begin(), elements.end());
  if (seen.size() != elements.size())
    throw std::invalid_argument("path code: repeated element");
  std::size_t k = elements.size();
  return RStarCode(make_structure<Id>(k, {elements}), graded_signature(k));
}

Structure blip_class_representative(const Structure& code) {
  std::vector<Id> blips;
  std::map<Id, Id> base;
  for (Id v : domain_of(code)) {
    if (v <= 0)
      blips.push_back(v);
    else
      base[v] = v;
  }
  if (blips.empty()) return code;
  if (blips.size() > kMaxBlipsPerCode)
    throw std::invalid_argument("blip_class_representative: more than " +
                                std::to_string(kMaxBlipsPerCode) + " blips");
  // Ascending start so next_permutation visits every assignment of
  // {-(m-1),...,0} to the blip elements; keep the textually least result.
  std::vector<Id> target;
  for (std::size_t i = 0; i < blips.size(); ++i)
    target.push_back(1 - static_cast<Id>(blips.size()) + static_cast<Id>(i));
  Structure best;
  std::string best_text;
  bool first = true;
  do {
    std::map<Id, Id> rho = base;
    for (std::size_t i = 0; i < blips.size(); ++i) rho[blips[i]] = target[i];
    Structure candidate = relabel(code, rho);
    std::string text = encode(candidate);
    if (first || text < best_text) {
      first = false;
      best = std::move(candidate);
      best_text = std::move(text);
    }
  } while (std::next_permutation(target.begin(), target.end()));
  return best;
}

SimplexPoint merge_blip_classes(const SimplexPoint& f) {
  std::vector<std::pair<Structure, Rational>> entries;
  for (const auto& [key, entry] : f.support())
    entries.emplace_back(blip_class_representative(entry.code), entry.weight);
  return SimplexPoint(f.sig(), entries);
}

}  // namespace relex
