#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "relex/inference.hpp"

namespace relex::testsupport {

inline Structure edge(Id a, Id b) {
  return make_structure<Id>(1, {{a, b}});
}

inline Structure single(Id a) { return make_structure<Id>(1, {{a}}); }

inline RelSequence pair_seq(const std::vector<std::pair<Id, Id>>& edges) {
  RelSequence x;
  x.sig = pair_signature();
  for (const auto& [a, b] : edges) x.items.push_back(edge(a, b));
  return x;
}

inline RelSequence singleton_seq(const std::vector<Id>& elements) {
  RelSequence x;
  x.sig = singleton_signature();
  for (Id v : elements) x.items.push_back(single(v));
  return x;
}

/// Exhaustive search over bijections between the two combined domains.
/// Independent of canonical_form; used as the equivalence oracle.
inline bool brute_force_equivalent(const RelSequence& x, const RelSequence& y) {
  if (x.sig != y.sig || x.items.size() != y.items.size()) return false;
  std::set<Id> dx, dy;
  for (const auto& item : x.items)
    for (Id v : domain_of(item)) dx.insert(v);
  for (const auto& item : y.items)
    for (Id v : domain_of(item)) dy.insert(v);
  if (dx.size() != dy.size()) return false;
  std::vector<Id> from(dy.begin(), dy.end());
  std::vector<Id> to(dx.begin(), dx.end());
  std::sort(to.begin(), to.end());
  do {
    std::map<Id, Id> rho;
    for (std::size_t i = 0; i < from.size(); ++i) rho[from[i]] = to[i];
    bool all = true;
    for (std::size_t k = 0; k < x.items.size() && all; ++k)
      all = relabel(y.items[k], rho) == x.items[k];
    if (all) return true;
  } while (std::next_permutation(to.begin(), to.end()));
  return false;
}

/// Every sequence of 1..max_n single directed edges over ids {1..max_ids}.
inline std::vector<RelSequence> all_pair_sequences(std::size_t max_n,
                                                   Id max_ids) {
  std::vector<Structure> edges;
  for (Id a = 1; a <= max_ids; ++a)
    for (Id b = 1; b <= max_ids; ++b)
      if (a != b) edges.push_back(edge(a, b));
  std::vector<RelSequence> out;
  std::vector<std::vector<Structure>> frontier{{}};
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<std::vector<Structure>> next;
    for (const auto& prefix : frontier)
      for (const auto& e : edges) {
        auto items = prefix;
        items.push_back(e);
        next.push_back(items);
        out.push_back(RelSequence{pair_signature(), items});
      }
    frontier = std::move(next);
  }
  return out;
}

/// >= 20 exact-weight simplex points with support <= 4: partition codes,
/// directed pairs, 3-element sets, and short paths.
inline std::vector<SimplexPoint> golden_suite() {
  std::vector<SimplexPoint> suite;
  auto add = [&](const Signature& sig,
                 std::vector<std::pair<Structure, Rational>> entries) {
    suite.emplace_back(sig, entries);
  };
  const Signature s1 = singleton_signature();
  const Signature s2 = pair_signature();
  const Signature g3 = graded_signature(3);

  // Partition-style points (singleton codes).
  add(s1, {{single(1), Rational(1)}});
  add(s1, {{single(0), Rational(1)}});
  add(s1, {{single(1), Rational(1, 2)}, {single(0), Rational(1, 2)}});
  add(s1, {{single(1), Rational(3, 5)}, {single(2), Rational(2, 5)}});
  add(s1, {{single(1), Rational(1, 2)},
           {single(2), Rational(3, 10)},
           {single(3), Rational(1, 5)}});
  add(s1, {{single(1), Rational(2, 7)},
           {single(2), Rational(2, 7)},
           {single(3), Rational(2, 7)},
           {single(0), Rational(1, 7)}});

  // Directed-pair points.
  add(s2, {{edge(1, 2), Rational(1)}});
  add(s2, {{edge(0, -1), Rational(1)}});
  add(s2, {{edge(1, 2), Rational(1, 2)}, {edge(2, 1), Rational(1, 2)}});
  add(s2, {{edge(1, 2), Rational(3, 5)}, {edge(1, 0), Rational(2, 5)}});
  add(s2, {{edge(1, 2), Rational(1, 3)},
           {edge(2, 3), Rational(1, 3)},
           {edge(3, 1), Rational(1, 3)}});
  add(s2, {{edge(1, 2), Rational(1, 2)},
           {edge(1, 0), Rational(1, 4)},
           {edge(0, -1), Rational(1, 4)}});
  add(s2, {{edge(1, 2), Rational(2, 5)},
           {edge(3, 1), Rational(1, 5)},
           {edge(2, 3), Rational(1, 5)},
           {edge(0, 1), Rational(1, 5)}});

  // Symmetric 3-sets and mixed graded codes.
  add(g3, {{make_set_code({1, 2, 3}).structure(), Rational(1)}});
  add(g3, {{make_set_code({1, 2, 3}).structure(), Rational(1, 2)},
           {make_set_code({1, 2, 0}).structure(), Rational(1, 2)}});
  add(g3, {{make_set_code({1, 2, 3}).structure(), Rational(2, 3)},
           {make_set_code({0, -1, -2}).structure(), Rational(1, 3)}});
  add(g3, {{make_set_code({1, 2}).structure(), Rational(1, 2)},
           {single(1), Rational(1, 4)},
           {single(0), Rational(1, 4)}});

  // Path codes.
  add(g3, {{make_path_code({1, 2, 3}).structure(), Rational(1)}});
  add(g3, {{make_path_code({1, 2, 3}).structure(), Rational(1, 2)},
           {make_path_code({3, 2, 1}).structure(), Rational(1, 2)}});
  add(g3, {{make_path_code({1, 2}).structure(), Rational(1, 2)},
           {make_path_code({2, 1}).structure(), Rational(1, 4)},
           {make_path_code({1, 0}).structure(), Rational(1, 4)}});
  add(g3, {{make_path_code({1, 0, 2}).structure(), Rational(3, 4)},
           {make_path_code({0, -1}).structure(), Rational(1, 4)}});
  return suite;
}

/// Random finite-support point drawn from one of four code families.
/// Weights are exact rationals k_i / total.
inline SimplexPoint random_simplex_point(Rng& rng) {
  const std::uint64_t family = rng.next_below(4);
  const std::size_t support = 2 + rng.next_below(3);
  std::vector<Structure> codes;
  auto atom = [&]() { return static_cast<Id>(1 + rng.next_below(3)); };
  while (codes.size() < support) {
    Structure code;
    switch (family) {
      case 0:
        code = rng.next_below(3) == 0 ? single(0) : single(atom());
        break;
      case 1: {
        Id a = atom(), b = atom();
        switch (rng.next_below(3)) {
          case 0:
            code = a == b ? edge(a, 0) : edge(a, b);
            break;
          case 1:
            code = edge(a, 0);
            break;
          default:
            code = edge(0, -1);
        }
        break;
      }
      case 2: {
        Id a = atom(), b = atom();
        if (rng.next_below(2) == 0 && a != b)
          code = make_set_code({a, b}).structure();
        else
          code = make_set_code(a == b ? std::vector<Id>{a, 0}
                                      : std::vector<Id>{a, b, 0})
                     .structure();
        break;
      }
      default: {
        Id a = atom(), b = atom();
        if (a == b)
          code = make_path_code({a, 0}).structure();
        else
          code = make_path_code(rng.next_below(2) == 0
                                    ? std::vector<Id>{a, b}
                                    : std::vector<Id>{a, 0, b})
                     .structure();
      }
    }
    if (std::find(codes.begin(), codes.end(), code) == codes.end())
      codes.push_back(code);
  }
  const Signature sig =
      family == 0 ? singleton_signature()
                  : (family == 1 ? pair_signature() : graded_signature(3));
  std::vector<std::pair<Structure, Rational>> entries;
  long total = 0;
  std::vector<long> parts;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    long part = 1 + static_cast<long>(rng.next_below(9));
    parts.push_back(part);
    total += part;
  }
  for (std::size_t i = 0; i < codes.size(); ++i)
    entries.emplace_back(codes[i], Rational(parts[i], total));
  return SimplexPoint(sig, entries);
}

/// Position-dependent law that permutations visibly break: two almost-surely
/// recurring positions followed by an almost-surely fresh one.
inline std::vector<SimplexPoint> adversarial_positional_law() {
  const Signature sig = singleton_signature();
  SimplexPoint atom_heavy(sig, {{single(1), Rational(9, 10)},
                                {single(0), Rational(1, 10)}});
  SimplexPoint blip_heavy(sig, {{single(1), Rational(1, 10)},
                                {single(0), Rational(9, 10)}});
  return {atom_heavy, atom_heavy, blip_heavy};
}

}  // namespace relex::testsupport
