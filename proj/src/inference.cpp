#include "relex/inference.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace relex {

Rational ClassDistribution::total() const {
  Rational sum(0);
  for (const auto& [key, entry] : classes) sum += entry.prob;
  return sum;
}

SimplexPoint estimate_f(const CanonicalSequence& x, int recurrence_threshold) {
  if (recurrence_threshold < 1)
    throw std::invalid_argument("estimate_f: threshold must be at least 1");
  const std::size_t n = x.size();
  if (n == 0) throw std::invalid_argument("estimate_f: empty sequence");

  std::vector<std::set<Id>> domains(n);
  std::map<Id, int> counts;
  for (std::size_t i = 0; i < n; ++i) {
    domains[i] = domain_of(x.items()[i]);
    for (Id v : domains[i]) ++counts[v];
  }
  std::vector<Id> atoms;
  for (const auto& [v, c] : counts)
    if (c >= recurrence_threshold) atoms.push_back(v);

  // Rank atoms by occupancy, splitting ties by per-template profiles and
  // finally by first appearance (ids are already in appearance order).
  using TemplateKey = std::pair<std::string, std::size_t>;
  std::set<Id> atom_set(atoms.begin(), atoms.end());
  std::map<Id, std::map<TemplateKey, int>> profiles;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t in_item = 0;
    for (Id v : domains[i])
      if (atom_set.count(v)) ++in_item;
    TemplateKey key{shape_key(x.items()[i]), in_item};
    for (Id v : domains[i])
      if (atom_set.count(v)) ++profiles[v][key];
  }
  auto profile_less = [&](Id a, Id b) {
    const auto& pa = profiles[a];
    const auto& pb = profiles[b];
    auto it = pa.begin();
    auto jt = pb.begin();
    while (it != pa.end() || jt != pb.end()) {
      if (jt == pb.end() || (it != pa.end() && it->first < jt->first))
        return true;
      if (it == pa.end() || jt->first < it->first) return false;
      if (it->second != jt->second) return it->second > jt->second;
      ++it;
      ++jt;
    }
    return false;
  };
  std::sort(atoms.begin(), atoms.end(), [&](Id a, Id b) {
    if (counts[a] != counts[b]) return counts[a] > counts[b];
    if (profile_less(a, b)) return true;
    if (profile_less(b, a)) return false;
    return a < b;
  });
  std::map<Id, Id> rank;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    rank[atoms[i]] = static_cast<Id>(i) + 1;

  std::vector<std::pair<Structure, Rational>> entries;
  entries.reserve(n);
  const Rational each(1, static_cast<long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    std::map<Id, Id> rho;
    std::vector<Id> strangers;
    for (Id v : domains[i]) {
      auto it = rank.find(v);
      if (it != rank.end())
        rho[v] = it->second;
      else
        strangers.push_back(v);
    }
    std::sort(strangers.begin(), strangers.end(), std::greater<>());
    for (std::size_t s = 0; s < strangers.size(); ++s)
      rho[strangers[s]] = -static_cast<Id>(s);
    Structure code = relabel(x.items()[i], rho);
    entries.emplace_back(blip_class_representative(code), each);
  }
  return SimplexPoint(x.sig(), entries);
}

Rational empirical_propensity(const CanonicalSequence& x, Id element) {
  if (x.size() == 0)
    throw std::invalid_argument("empirical_propensity: empty sequence");
  long hits = 0;
  for (const auto& item : x.items())
    if (domain_of(item).count(element)) ++hits;
  if (hits == 0)
    throw std::invalid_argument("empirical_propensity: element never occurs");
  return Rational(hits, static_cast<long>(x.size()));
}

namespace {

void require_budget(const std::vector<std::size_t>& radices,
                    std::size_t budget) {
  std::size_t total = 1;
  for (std::size_t r : radices) {
    if (r == 0) throw std::invalid_argument("enumeration: empty support");
    if (total > budget / r)
      throw std::invalid_argument(
          "enumeration budget exceeded (limit " + std::to_string(budget) +
          " tuples)");
    total *= r;
  }
}

ClassDistribution enumerate_positional(const Signature& sig,
                                       const std::vector<const SimplexPoint*>& points,
                                       std::size_t budget) {
  std::vector<std::vector<const SimplexPoint::Entry*>> entries(points.size());
  std::vector<std::size_t> radices(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (const auto& [key, entry] : points[i]->support())
      entries[i].push_back(&entry);
    radices[i] = entries[i].size();
  }
  require_budget(radices, budget);

  ClassDistribution dist;
  dist.sig = sig;
  dist.n = points.size();
  std::vector<std::size_t> idx(points.size(), 0);
  std::vector<Structure> codes(points.size());
  for (;;) {
    Rational prob(1);
    for (std::size_t i = 0; i < points.size(); ++i) {
      codes[i] = entries[i][idx[i]]->code;
      prob *= entries[i][idx[i]]->weight;
    }
    CanonicalSequence canon = canonical_form(dagger(sig, codes));
    std::string key = encode_sequence(canon.items());
    auto it = dist.classes.find(key);
    if (it == dist.classes.end())
      dist.classes.emplace(std::move(key),
                           ClassDistribution::Entry{canon.items(), prob});
    else
      it->second.prob += prob;

    std::size_t pos = points.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < radices[pos]) break;
      idx[pos] = 0;
      if (pos == 0) return dist;
    }
    if (points.empty()) return dist;
  }
}

}  // namespace

ClassDistribution exact_distribution(const SimplexPoint& f, std::size_t n,
                                     std::size_t budget) {
  std::vector<const SimplexPoint*> points(n, &f);
  return enumerate_positional(f.sig(), points, budget);
}

ClassDistribution exact_distribution_positional(
    const std::vector<SimplexPoint>& per_position, std::size_t budget) {
  if (per_position.empty())
    throw std::invalid_argument("positional law: no positions");
  const Signature& sig = per_position.front().sig();
  std::vector<const SimplexPoint*> points;
  points.reserve(per_position.size());
  for (const auto& f : per_position) {
    if (f.sig() != sig)
      throw std::invalid_argument("positional law: mixed signatures");
    points.push_back(&f);
  }
  return enumerate_positional(sig, points, budget);
}

ClassDistribution exact_distribution(const MixingMeasure& phi, std::size_t n,
                                     std::size_t budget) {
  if (!phi.finite())
    throw std::invalid_argument(
        "mixture law: components are not finitely enumerable");
  ClassDistribution dist;
  dist.sig = phi.components().front().second.sig();
  dist.n = n;
  for (const auto& [w, f] : phi.components()) {
    ClassDistribution part = exact_distribution(f, n, budget);
    for (const auto& [key, entry] : part.classes) {
      auto it = dist.classes.find(key);
      if (it == dist.classes.end())
        dist.classes.emplace(key,
                             ClassDistribution::Entry{entry.items, w * entry.prob});
      else
        it->second.prob += w * entry.prob;
    }
  }
  return dist;
}

ExchangeabilityReport exchangeability_report(const ClassDistribution& dist) {
  ExchangeabilityReport report;
  report.max_tv = 0;
  std::vector<std::size_t> sigma(dist.n);
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    std::map<std::string, Rational> pushed;
    for (const auto& [key, entry] : dist.classes) {
      std::vector<Structure> items;
      items.reserve(entry.items.size());
      for (std::size_t i = 0; i < sigma.size(); ++i)
        items.push_back(entry.items[sigma[i] - 1]);
      CanonicalSequence canon =
          canonical_form(RelSequence{dist.sig, std::move(items)});
      pushed[encode_sequence(canon.items())] += entry.prob;
    }
    Rational l1(0);
    auto it = dist.classes.begin();
    auto jt = pushed.begin();
    while (it != dist.classes.end() || jt != pushed.end()) {
      if (jt == pushed.end() ||
          (it != dist.classes.end() && it->first < jt->first)) {
        l1 += it->second.prob;
        ++it;
      } else if (it == dist.classes.end() || jt->first < it->first) {
        l1 += jt->second;
        ++jt;
      } else {
        Rational d = it->second.prob - jt->second;
        l1 += d < 0 ? Rational(-d) : d;
        ++it;
        ++jt;
      }
    }
    Rational tv = l1 / 2;
    if (tv > report.max_tv) report.max_tv = tv;
    report.per_sigma.emplace_back(sigma, tv);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return report;
}

ExchangeabilityReport test_exchangeability_exact(const SimplexPoint& f,
                                                 std::size_t n,
                                                 std::size_t budget) {
  return exchangeability_report(exact_distribution(f, n, budget));
}

Chi2Report test_exchangeability_mc(const SequenceSampler& sampler,
                                   std::size_t n,
                                   const std::vector<std::size_t>& sigma,
                                   std::size_t samples, Rng& rng) {
  if (sigma.size() != n)
    throw std::invalid_argument("mc test: sigma length mismatch");
  if (samples == 0) throw std::invalid_argument("mc test: no samples");

  std::map<std::string, std::pair<long, long>> table;
  for (std::size_t s = 0; s < samples; ++s) {
    CanonicalSequence x = sampler(n, rng);
    ++table[encode_sequence(x.items())].first;
  }
  for (std::size_t s = 0; s < samples; ++s) {
    CanonicalSequence x = sampler(n, rng);
    CanonicalSequence y = permute(x, sigma);
    ++table[encode_sequence(y.items())].second;
  }

  // Pool classes whose expected per-group count (total/2) is below 5.
  std::vector<std::pair<long, long>> bins;
  std::pair<long, long> pooled{0, 0};
  for (const auto& [key, cell] : table) {
    if (cell.first + cell.second < 10) {
      pooled.first += cell.first;
      pooled.second += cell.second;
    } else {
      bins.push_back(cell);
    }
  }
  if (pooled.first + pooled.second > 0) bins.push_back(pooled);

  Chi2Report report;
  report.bins = bins.size();
  if (bins.size() < 2) {
    report.uninformative = true;
    return report;
  }
  double chi2 = 0.0;
  for (const auto& [a, b] : bins) {
    double e = static_cast<double>(a + b) / 2.0;
    chi2 += (a - e) * (a - e) / e + (b - e) * (b - e) / e;
  }
  report.chi2 = chi2;
  report.dof = static_cast<long>(bins.size()) - 1;
  boost::math::chi_squared_distribution<double> dist(
      static_cast<double>(report.dof));
  report.p_value = boost::math::cdf(boost::math::complement(dist, chi2));
  return report;
}

}  // namespace relex
