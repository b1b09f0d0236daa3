#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "relex/signature.hpp"

namespace relex {

/// Domain element id. Positive ids name recurring atoms; ids 0,-1,-2,...
/// mark one-off elements ("blips") in simplex codes and daggered sequences.
using Id = std::int64_t;

/// A finite relational structure: one finite set of ordered tuples per slot.
/// Tuples within a slot are kept sorted and de-duplicated, and trailing empty
/// slots are trimmed, so slots().size() is the largest non-empty slot index
/// (0 for the empty structure). The domain is implicit: it is exactly the set
/// of ids occurring in some tuple.
template <class T>
class BasicStructure {
 public:
  using Tuple = std::vector<T>;
  using Slot = std::vector<Tuple>;

  BasicStructure() = default;

  explicit BasicStructure(std::vector<Slot> slots) : slots_(std::move(slots)) {
    for (auto& slot : slots_) {
      std::sort(slot.begin(), slot.end());
      slot.erase(std::unique(slot.begin(), slot.end()), slot.end());
    }
    while (!slots_.empty() && slots_.back().empty()) slots_.pop_back();
  }

  const std::vector<Slot>& slots() const { return slots_; }

  /// 1-based access; slots past the trailing index read as empty.
  const Slot& slot(std::size_t j) const {
    static const Slot kEmpty;
    return (j >= 1 && j <= slots_.size()) ? slots_[j - 1] : kEmpty;
  }

  std::size_t trailing_slot() const { return slots_.size(); }
  bool empty() const { return slots_.empty(); }

  std::size_t tuple_count() const {
    std::size_t n = 0;
    for (const auto& slot : slots_) n += slot.size();
    return n;
  }

  friend bool operator==(const BasicStructure&, const BasicStructure&) = default;
  friend bool operator<(const BasicStructure& a, const BasicStructure& b) {
    return a.slots_ < b.slots_;
  }

 private:
  std::vector<Slot> slots_;
};

using Structure = BasicStructure<Id>;

/// Builds a structure with a single populated slot.
template <class T>
BasicStructure<T> make_structure(std::size_t slot,
                                 std::vector<std::vector<T>> tuples) {
  std::vector<typename BasicStructure<T>::Slot> slots(slot);
  slots[slot - 1] = std::move(tuples);
  return BasicStructure<T>(std::move(slots));
}

template <class T>
std::set<T> domain_of(const BasicStructure<T>& a) {
  std::set<T> dom;
  for (const auto& slot : a.slots())
    for (const auto& tuple : slot)
      for (const T& v : tuple) dom.insert(v);
  return dom;
}

/// Applies a relabeling map to every tuple component. The map must cover the
/// whole domain and be injective on it.
template <class From, class To>
BasicStructure<To> relabel(const BasicStructure<From>& a,
                           const std::map<From, To>& rho) {
  std::set<To> seen;
  for (const From& v : domain_of(a)) {
    auto it = rho.find(v);
    if (it == rho.end())
      throw std::invalid_argument("relabel: map undefined on a domain element");
    if (!seen.insert(it->second).second)
      throw std::invalid_argument("relabel: map not injective on the domain");
  }
  std::vector<typename BasicStructure<To>::Slot> slots;
  slots.reserve(a.slots().size());
  for (const auto& slot : a.slots()) {
    typename BasicStructure<To>::Slot out;
    out.reserve(slot.size());
    for (const auto& tuple : slot) {
      std::vector<To> t;
      t.reserve(tuple.size());
      for (const From& v : tuple) t.push_back(rho.at(v));
      out.push_back(std::move(t));
    }
    slots.push_back(std::move(out));
  }
  return BasicStructure<To>(std::move(slots));
}

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Checks every tuple's arity against the signature and that slots with zero
/// arity are empty.
ValidationReport validate(const Structure& a, const Signature& sig);

/// Throws std::invalid_argument carrying the full violation report.
void require_valid(const Structure& a, const Signature& sig);

/// Deterministic text form: non-empty slots in increasing index, tuples in
/// sorted order, e.g. "{1:[(1,2);(3,1)]}". Equal structures encode equally
/// and distinct structures differently; decode() inverts it.
std::string encode(const Structure& a);

/// Parses the encode() grammar; lenient about tuple order, which is
/// re-normalized. Throws std::invalid_argument on malformed text.
Structure decode(const std::string& text);

}  // namespace relex
