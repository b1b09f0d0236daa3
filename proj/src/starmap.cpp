#include "relex/starmap.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace relex {

std::vector<LabeledStructure> attach_uniform_labels(const CanonicalSequence& x,
                                                    Rng& rng) {
  std::set<Id> elements;
  for (const auto& item : x.items())
    for (Id v : domain_of(item)) elements.insert(v);
  std::map<Id, Label> labels;
  std::set<Label> used;
  for (Id v : elements) {
    Label u = rng.next_double();
    while (!used.insert(u).second) u = rng.next_double();
    labels[v] = u;
  }
  std::vector<LabeledStructure> out;
  out.reserve(x.size());
  for (const auto& item : x.items()) out.push_back(relabel(item, labels));
  return out;
}

std::string shape_key(const Structure& a) {
  return encode(canonical_structure(a));
}

std::string shape_key(const LabeledStructure& a) {
  std::map<Label, Id> rho;
  Id next = 1;
  for (Label u : domain_of(a)) rho[u] = next++;
  return shape_key(relabel(a, rho));
}

Rational propensity(const SimplexPoint& f, Id atom) {
  Rational total(0);
  for (const auto& [key, entry] : f.support())
    if (domain_of(entry.code).count(atom)) total += entry.weight;
  return total;
}

namespace {

std::size_t atom_count(const Structure& code) {
  std::size_t n = 0;
  for (Id v : domain_of(code))
    if (v > 0) ++n;
  return n;
}

}  // namespace

Rational propensity_given(const SimplexPoint& f, Id atom,
                          const Structure& pattern) {
  const std::string shape = shape_key(pattern);
  const std::size_t atoms = atom_count(pattern);
  Rational total(0);
  for (const auto& [key, entry] : f.support()) {
    if (atom_count(entry.code) != atoms) continue;
    if (shape_key(entry.code) != shape) continue;
    if (domain_of(entry.code).count(atom)) total += entry.weight;
  }
  return total;
}

AtomOrdering::AtomOrdering(std::vector<Label> atoms,
                           std::vector<Rational> propensities)
    : atoms_(std::move(atoms)), propensities_(std::move(propensities)) {
  if (atoms_.size() != propensities_.size())
    throw std::invalid_argument("atom ordering: length mismatch");
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (propensities_[i] <= 0)
      throw std::invalid_argument("atom ordering: propensities must be positive");
    if (i > 0 && propensities_[i] > propensities_[i - 1])
      throw std::invalid_argument("atom ordering: propensities must not increase");
    if (!rank_.emplace(atoms_[i], static_cast<Id>(i) + 1).second)
      throw std::invalid_argument("atom ordering: repeated atom");
  }
}

std::optional<Id> AtomOrdering::rank_of(Label u) const {
  auto it = rank_.find(u);
  if (it == rank_.end()) return std::nullopt;
  return it->second;
}

AtomOrdering atom_order(const std::vector<LabeledStructure>& labeled,
                        int recurrence_threshold) {
  if (recurrence_threshold < 1)
    throw std::invalid_argument("atom order: threshold must be at least 1");
  const std::size_t n = labeled.size();
  std::vector<std::set<Label>> domains(n);
  std::map<Label, int> counts;
  for (std::size_t i = 0; i < n; ++i) {
    domains[i] = domain_of(labeled[i]);
    for (Label u : domains[i]) ++counts[u];
  }
  std::vector<Label> atoms;
  for (const auto& [u, c] : counts)
    if (c >= recurrence_threshold) atoms.push_back(u);

  // Per-template occurrence profiles, used only to split propensity ties:
  // template = (shape of the item, number of recurring labels it holds).
  using TemplateKey = std::pair<std::string, std::size_t>;
  std::set<Label> atom_set(atoms.begin(), atoms.end());
  std::map<Label, std::map<TemplateKey, int>> profiles;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t in_item = 0;
    for (Label u : domains[i])
      if (atom_set.count(u)) ++in_item;
    TemplateKey key{shape_key(labeled[i]), in_item};
    for (Label u : domains[i])
      if (atom_set.count(u)) ++profiles[u][key];
  }

  auto profile_less = [&](Label a, Label b) {
    const auto& pa = profiles[a];
    const auto& pb = profiles[b];
    auto it = pa.begin();
    auto jt = pb.begin();
    while (it != pa.end() || jt != pb.end()) {
      if (jt == pb.end() || (it != pa.end() && it->first < jt->first)) {
        return true;  // a has mass on an earlier template
      }
      if (it == pa.end() || jt->first < it->first) return false;
      if (it->second != jt->second) return it->second > jt->second;
      ++it;
      ++jt;
    }
    return false;
  };
  std::sort(atoms.begin(), atoms.end(), [&](Label a, Label b) {
    if (counts[a] != counts[b]) return counts[a] > counts[b];
    if (profile_less(a, b)) return true;
    if (profile_less(b, a)) return false;
    return a < b;
  });

  std::vector<Rational> props;
  props.reserve(atoms.size());
  for (Label u : atoms) props.emplace_back(counts[u], static_cast<long>(n));
  return AtomOrdering(std::move(atoms), std::move(props));
}

RStarCode star(const Signature& sig, const LabeledStructure& a,
               const AtomOrdering& ordering) {
  std::vector<Label> strangers;
  std::map<Label, Id> rho;
  for (Label u : domain_of(a)) {
    if (auto rank = ordering.rank_of(u))
      rho[u] = *rank;
    else
      strangers.push_back(u);
  }
  std::sort(strangers.begin(), strangers.end(), std::greater<>());
  for (std::size_t i = 0; i < strangers.size(); ++i)
    rho[strangers[i]] = -static_cast<Id>(i);
  return RStarCode(relabel(a, rho), sig);
}

bool roundtrip_check(const CanonicalSequence& x, Rng& rng) {
  std::vector<LabeledStructure> labeled = attach_uniform_labels(x, rng);
  AtomOrdering ordering = atom_order(labeled);
  std::vector<Structure> codes;
  codes.reserve(labeled.size());
  for (const auto& item : labeled)
    codes.push_back(star(x.sig(), item, ordering).structure());
  return canonical_form(dagger(x.sig(), codes)) == x;
}

}  // namespace relex
