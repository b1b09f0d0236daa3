#include <doctest.h>

#include "support.hpp"

using namespace relex;
using namespace relex::testsupport;

TEST_CASE("estimation recovers the partition frequencies") {
  auto x = canonical_form(singleton_seq({1, 2, 3, 4, 3, 3, 5}));
  SimplexPoint fhat = estimate_f(x);
  CHECK(fhat.support_size() == 2);
  CHECK(fhat.weight_of(single(1)) == Rational(3, 7));
  CHECK(fhat.weight_of(single(0)) == Rational(4, 7));
}

TEST_CASE("estimation degenerates on constant sequences") {
  auto x = canonical_form(pair_seq({{1, 2}, {1, 2}, {1, 2}}));
  SimplexPoint fhat = estimate_f(x);
  CHECK(fhat.support_size() == 1);
  CHECK(fhat.weight_of(edge(1, 2)) == Rational(1));

  CHECK_THROWS_AS(estimate_f(canonical_form(RelSequence{pair_signature(), {}})),
                  std::invalid_argument);
}

TEST_CASE("estimation is label-invariant") {
  auto x = canonical_form(pair_seq({{7, 9}, {2, 7}, {8, 4}, {7, 2}}));
  auto y = canonical_form(pair_seq({{70, 90}, {20, 70}, {80, 40}, {70, 20}}));
  CHECK(simplex_distance(estimate_f(x), estimate_f(y)) == Rational(0));
}

TEST_CASE("estimation is a fixed point on exact frequencies") {
  // 10 items with code frequencies 1/2, 3/10, 1/5 and distinct propensities.
  std::vector<std::pair<Id, Id>> edges;
  for (int i = 0; i < 5; ++i) edges.emplace_back(1, 2);
  for (int i = 0; i < 3; ++i) edges.emplace_back(1, 3);
  for (int i = 0; i < 2; ++i) edges.emplace_back(2, 3);
  auto x = canonical_form(pair_seq(edges));
  SimplexPoint fhat = estimate_f(x);
  CHECK(fhat.weight_of(edge(1, 2)) == Rational(1, 2));
  CHECK(fhat.weight_of(edge(1, 3)) == Rational(3, 10));
  CHECK(fhat.weight_of(edge(2, 3)) == Rational(1, 5));
}

TEST_CASE("empirical propensity counts containing positions") {
  auto x = canonical_form(singleton_seq({1, 2, 3, 4, 3, 3, 5}));
  CHECK(empirical_propensity(x, 3) == Rational(3, 7));
  CHECK(empirical_propensity(x, 1) == Rational(1, 7));
  CHECK_THROWS_AS(empirical_propensity(x, 9), std::invalid_argument);

  auto all = canonical_form(pair_seq({{1, 2}, {1, 3}}));
  CHECK(empirical_propensity(all, 1) == Rational(1));
}

TEST_CASE("exact enumeration matches hand-computed laws") {
  SimplexPoint f(singleton_signature(),
                 {{single(1), Rational(1, 2)}, {single(0), Rational(1, 2)}});
  ClassDistribution dist = exact_distribution(f, 2);
  CHECK(dist.total() == Rational(1));
  REQUIRE(dist.classes.size() == 2);
  auto merged = encode_sequence(
      canonical_form(singleton_seq({1, 1})).items());
  auto split = encode_sequence(
      canonical_form(singleton_seq({1, 2})).items());
  CHECK(dist.classes.at(merged).prob == Rational(1, 4));
  CHECK(dist.classes.at(split).prob == Rational(3, 4));

  SUBCASE("n = 1 merges codes with one canonical form") {
    ClassDistribution one = exact_distribution(f, 1);
    CHECK(one.classes.size() == 1);  // atom and blip both canonicalize to {1}
    CHECK(one.classes.begin()->second.prob == Rational(1));
  }
  SUBCASE("n = 0 is the point mass on the empty sequence") {
    ClassDistribution zero = exact_distribution(f, 0);
    CHECK(zero.classes.size() == 1);
    CHECK(zero.total() == Rational(1));
  }
  SUBCASE("budget guard") {
    CHECK_THROWS_AS(exact_distribution(f, 30, 1000), std::invalid_argument);
  }
}

TEST_CASE("exact enumeration sums to one across the golden suite") {
  for (const auto& f : golden_suite())
    for (std::size_t n = 1; n <= 3; ++n)
      CHECK(exact_distribution(f, n).total() == Rational(1));
}

TEST_CASE("mixture laws combine component laws") {
  SimplexPoint f1(pair_signature(), {{edge(1, 2), Rational(1)}});
  SimplexPoint f2(pair_signature(), {{edge(0, -1), Rational(1)}});
  MixingMeasure phi({{Rational(1, 2), f1}, {Rational(1, 2), f2}});
  ClassDistribution dist = exact_distribution(phi, 2);
  CHECK(dist.total() == Rational(1));
  auto repeated = encode_sequence(
      canonical_form(pair_seq({{1, 2}, {1, 2}})).items());
  auto fresh = encode_sequence(
      canonical_form(pair_seq({{1, 2}, {3, 4}})).items());
  CHECK(dist.classes.at(repeated).prob == Rational(1, 2));
  CHECK(dist.classes.at(fresh).prob == Rational(1, 2));

  MixingMeasure gen([&](Rng&) { return f1; });
  CHECK_THROWS_AS(exact_distribution(gen, 2), std::invalid_argument);
}

TEST_CASE("positional laws reject mixed signatures") {
  SimplexPoint a(pair_signature(), {{edge(1, 2), Rational(1)}});
  SimplexPoint b(singleton_signature(), {{single(1), Rational(1)}});
  CHECK_THROWS_AS(exact_distribution_positional({a, b}),
                  std::invalid_argument);
  CHECK_THROWS_AS(exact_distribution_positional({}), std::invalid_argument);
}

TEST_CASE("iid laws are permutation invariant") {
  for (const auto& f : golden_suite()) {
    ExchangeabilityReport report = test_exchangeability_exact(f, 3);
    CHECK(report.max_tv == Rational(0));
    CHECK(report.per_sigma.size() == 6);
    for (const auto& [sigma, tv] : report.per_sigma) CHECK(tv == Rational(0));
  }
}

TEST_CASE("position-dependent laws are detected") {
  ClassDistribution dist =
      exact_distribution_positional(adversarial_positional_law());
  ExchangeabilityReport report = exchangeability_report(dist);
  CHECK(report.max_tv > Rational(1, 20));

  // Fully deterministic positional spike: two recurring, one fresh.
  SimplexPoint atom(singleton_signature(), {{single(1), Rational(1)}});
  SimplexPoint blip(singleton_signature(), {{single(0), Rational(1)}});
  ClassDistribution spike =
      exact_distribution_positional({atom, atom, blip});
  CHECK(exchangeability_report(spike).max_tv == Rational(1));
}

TEST_CASE("monte carlo test accepts exchangeable samplers") {
  SimplexPoint f(pair_signature(), {{edge(1, 2), Rational(1, 2)},
                                    {edge(1, 0), Rational(1, 4)},
                                    {edge(0, -1), Rational(1, 4)}});
  SequenceSampler sampler = [&](std::size_t n, Rng& rng) {
    return sample_epsilon_f(f, n, rng);
  };
  Rng rng(4242);
  Chi2Report report = test_exchangeability_mc(sampler, 3, {3, 2, 1}, 4000, rng);
  CHECK_FALSE(report.uninformative);
  CHECK(report.dof >= 1);
  CHECK(report.p_value > 0.001);
  CHECK(report.p_value <= 1.0);
}

TEST_CASE("monte carlo test rejects position-biased samplers") {
  auto law = adversarial_positional_law();
  SequenceSampler sampler = [&](std::size_t n, Rng& rng) {
    std::vector<Structure> codes;
    for (std::size_t i = 0; i < n; ++i) {
      const SimplexPoint& f = law[i % law.size()];
      codes.push_back(sample_codes(f, 1, rng)[0].structure());
    }
    return canonical_form(dagger(law[0].sig(), codes));
  };
  Rng rng(777);
  Chi2Report report =
      test_exchangeability_mc(sampler, 3, {3, 2, 1}, 5000, rng);
  CHECK_FALSE(report.uninformative);
  CHECK(report.p_value < 0.001);
}

TEST_CASE("monte carlo test reports degenerate binning") {
  SimplexPoint f(singleton_signature(), {{single(1), Rational(1)}});
  SequenceSampler sampler = [&](std::size_t n, Rng& rng) {
    return sample_epsilon_f(f, n, rng);
  };
  Rng rng(1);
  Chi2Report report = test_exchangeability_mc(sampler, 3, {3, 2, 1}, 500, rng);
  CHECK(report.uninformative);
  CHECK(report.bins <= 1);

  CHECK_THROWS_AS(test_exchangeability_mc(sampler, 3, {1, 2}, 100, rng),
                  std::invalid_argument);
}
