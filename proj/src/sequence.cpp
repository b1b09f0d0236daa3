#include "relex/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace relex {

ValidationReport validate(const RelSequence& x) {
  ValidationReport report;
  for (std::size_t i = 0; i < x.items.size(); ++i) {
    ValidationReport item = validate(x.items[i], x.sig);
    for (auto& v : item.violations)
      report.violations.push_back("item " + std::to_string(i + 1) + ": " + v);
  }
  return report;
}

void require_valid(const RelSequence& x) {
  ValidationReport report = validate(x);
  if (!report.ok())
    throw std::invalid_argument("invalid sequence: " + report.to_string());
}

namespace {

constexpr std::size_t kMaxFreshPerItem = 10;
constexpr std::size_t kMaxWitnessStates = 20000;

template <typename Lookup>
Structure relabel_through(const Structure& item, Lookup&& lookup) {
  std::vector<Structure::Slot> slots(item.slots().size());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    slots[s].reserve(item.slots()[s].size());
    for (const auto& tuple : item.slots()[s]) {
      Structure::Tuple mapped = tuple;
      for (Id& v : mapped) v = lookup(v);
      slots[s].push_back(std::move(mapped));
    }
  }
  return Structure(std::move(slots));
}

// One canonicalization step. The canonical form of a sequence is the
// lexicographically least tuple of item encodings over all injective
// relabelings, so it is found greedily: minimize the current item's encoding
// over every surviving prefix witness and every assignment of consecutive
// fresh ids to the unseen elements. Symmetric items (sets, for instance)
// admit several assignments that tie on the current item yet diverge later,
// so every tying witness is carried forward; witnesses that agree on all ids
// still visible to later items (`last_pos` beyond `pos`) are interchangeable
// and collapse to one.
Structure advance_states(const Structure& item,
                         std::vector<std::map<Id, Id>>& states, Id& next,
                         std::size_t pos,
                         const std::map<Id, std::size_t>& last_pos) {
  std::vector<Id> fresh;
  for (Id v : domain_of(item))
    if (!states.front().count(v)) fresh.push_back(v);
  if (fresh.size() > kMaxFreshPerItem)
    throw std::invalid_argument(
        "canonical_form: an item introduces more than " +
        std::to_string(kMaxFreshPerItem) + " new elements");

  std::vector<Id> ids(fresh.size());
  std::iota(ids.begin(), ids.end(), next);

  std::string best_text;
  Structure best_item;
  std::vector<std::pair<std::size_t, std::vector<Id>>> winners;
  for (std::size_t si = 0; si < states.size(); ++si) {
    const std::map<Id, Id>& base = states[si];
    std::vector<Id> perm = ids;
    do {
      Structure candidate = relabel_through(item, [&](Id v) {
        for (std::size_t i = 0; i < fresh.size(); ++i)
          if (fresh[i] == v) return perm[i];
        return base.at(v);
      });
      std::string text = encode(candidate);
      if (winners.empty() || text < best_text) {
        best_text = std::move(text);
        best_item = std::move(candidate);
        winners.clear();
        winners.emplace_back(si, perm);
      } else if (text == best_text) {
        winners.emplace_back(si, perm);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  if (states.size() == 1 && winners.size() == 1) {
    for (std::size_t i = 0; i < fresh.size(); ++i)
      states.front()[fresh[i]] = winners.front().second[i];
  } else {
    std::vector<std::map<Id, Id>> survivors;
    std::set<std::vector<std::pair<Id, Id>>> seen;
    for (const auto& [si, perm] : winners) {
      std::map<Id, Id> extended = states[si];
      for (std::size_t i = 0; i < fresh.size(); ++i)
        extended[fresh[i]] = perm[i];
      std::vector<std::pair<Id, Id>> key;
      for (const auto& [orig, canon] : extended) {
        auto it = last_pos.find(orig);
        if (it != last_pos.end() && it->second > pos)
          key.emplace_back(orig, canon);
      }
      if (seen.insert(std::move(key)).second)
        survivors.push_back(std::move(extended));
    }
    if (survivors.size() > kMaxWitnessStates)
      throw std::runtime_error(
          "canonical_form: witness set exceeds the tractability bound");
    states = std::move(survivors);
  }
  next += static_cast<Id>(fresh.size());
  return best_item;
}

}  // namespace

CanonicalSequence canonical_form(const RelSequence& x) {
  require_valid(x);
  std::map<Id, std::size_t> last_pos;
  for (std::size_t k = 0; k < x.items.size(); ++k)
    for (Id v : domain_of(x.items[k])) last_pos[v] = k;
  std::vector<std::map<Id, Id>> states(1);
  Id next = 1;
  std::vector<Structure> items;
  items.reserve(x.items.size());
  for (std::size_t k = 0; k < x.items.size(); ++k)
    items.push_back(advance_states(x.items[k], states, next, k, last_pos));
  return CanonicalSequence(x.sig, std::move(items), std::move(states.front()));
}

Structure canonical_structure(const Structure& a) {
  std::vector<std::map<Id, Id>> states(1);
  Id next = 1;
  return advance_states(a, states, next, 0, {});
}

bool are_equivalent(const RelSequence& x, const RelSequence& y) {
  if (x.sig != y.sig)
    throw std::invalid_argument("are_equivalent: signature mismatch");
  if (x.items.size() != y.items.size())
    throw std::invalid_argument("are_equivalent: length mismatch");
  return canonical_form(x) == canonical_form(y);
}

CanonicalSequence restrict(const CanonicalSequence& x, std::size_t n) {
  if (n > x.size())
    throw std::invalid_argument("restrict: prefix length exceeds sequence");
  RelSequence prefix{x.sig(), std::vector<Structure>(x.items().begin(),
                                                     x.items().begin() + n)};
  return canonical_form(prefix);
}

CanonicalSequence permute(const CanonicalSequence& x,
                          const std::vector<std::size_t>& sigma) {
  if (sigma.size() != x.size())
    throw std::invalid_argument("permute: length mismatch");
  std::vector<std::size_t> check = sigma;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check[i] != i + 1)
      throw std::invalid_argument("permute: not a permutation of 1..n");
  std::vector<Structure> items;
  items.reserve(sigma.size());
  for (std::size_t s : sigma) items.push_back(x.items()[s - 1]);
  return canonical_form(RelSequence{x.sig(), std::move(items)});
}

Rational distance(const CanonicalSequence& x, const CanonicalSequence& y,
                  std::optional<std::size_t> depth) {
  if (x.sig() != y.sig())
    throw std::invalid_argument("distance: signature mismatch");
  std::size_t cap = std::min(x.size(), y.size());
  if (depth) cap = std::min(cap, *depth);
  std::size_t s = 0;
  while (s < cap && x.items()[s] == y.items()[s]) ++s;
  if (s == cap) return Rational(0);
  return Rational(1) / Rational(static_cast<long>(s) + 1);
}

std::string encode_sequence(const std::vector<Structure>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += '|';
    out += encode(items[i]);
  }
  return out;
}

}  // namespace relex
