#include <doctest.h>

#include "support.hpp"

using namespace relex;
using namespace relex::testsupport;

TEST_CASE("signature validates the zero-tail rule") {
  CHECK(Signature({2}).arity(1) == 2);
  CHECK(Signature({2}).arity(2) == 0);
  CHECK(Signature({1, 2, 3}).max_slot() == 3);
  CHECK(Signature({2, 0, 0}) == Signature({2}));  // trailing zeros trimmed
  CHECK(Signature(std::vector<int>{}) == Signature());
  CHECK_THROWS_AS(Signature({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Signature({1, 0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Signature({-1}), std::invalid_argument);
  CHECK(graded_signature(4).arities() == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("structures normalize tuples and trim slots") {
  Structure a({{{3, 1}, {1, 2}, {3, 1}}, {}});
  CHECK(a.slots().size() == 1);
  CHECK(a.slot(1) == Structure::Slot{{1, 2}, {3, 1}});
  CHECK(a.slot(2).empty());
  CHECK(a.slot(7).empty());
  CHECK(a.tuple_count() == 2);
  CHECK(Structure().empty());
  CHECK(a == Structure({{{1, 2}, {3, 1}}}));
}

TEST_CASE("domain is the union of tuple components") {
  Structure a = make_structure<Id>(1, {{1, 2}, {2, 3}});
  CHECK(domain_of(a) == std::set<Id>{1, 2, 3});
  CHECK(domain_of(Structure()).empty());
}

TEST_CASE("relabel applies an injective map") {
  Structure a = make_structure<Id>(1, {{1, 2}, {2, 3}});
  std::map<Id, Id> rho{{1, 3}, {2, 1}, {3, 2}};
  CHECK(relabel(a, rho) == make_structure<Id>(1, {{1, 2}, {3, 1}}));

  std::map<Id, Id> missing{{1, 3}, {2, 1}};
  CHECK_THROWS_AS(relabel(a, missing), std::invalid_argument);
  std::map<Id, Id> collapsing{{1, 5}, {2, 5}, {3, 6}};
  CHECK_THROWS_AS(relabel(a, collapsing), std::invalid_argument);
}

TEST_CASE("validation checks arities and zero slots") {
  const Signature sig({2});
  CHECK(validate(edge(1, 2), sig).ok());
  CHECK(validate(Structure(), sig).ok());

  Structure bad_arity = make_structure<Id>(1, {{1, 2, 3}});
  auto report = validate(bad_arity, sig);
  REQUIRE_FALSE(report.ok());
  CHECK(report.to_string().find("arity") != std::string::npos);

  Structure past_zero = make_structure<Id>(2, {{1, 2}});
  CHECK_FALSE(validate(past_zero, sig).ok());
  CHECK_THROWS_AS(require_valid(past_zero, sig), std::invalid_argument);
}

TEST_CASE("encode emits the deterministic grammar") {
  CHECK(encode(Structure()) == "{}");
  CHECK(encode(single(1)) == "{1:[(1)]}");
  CHECK(encode(make_structure<Id>(1, {{3, 1}, {1, 2}})) == "{1:[(1,2);(3,1)]}");
  CHECK(encode(make_structure<Id>(1, {{0}, {-1}})) == "{1:[(-1);(0)]}");

  std::vector<Structure::Slot> slots(3);
  slots[0] = {{5}};
  slots[2] = {{1, 2, 3}};
  CHECK(encode(Structure(slots)) == "{1:[(5)];3:[(1,2,3)]}");
}

TEST_CASE("decode inverts encode") {
  for (const auto& a : {Structure(), single(7), edge(1, 2),
                        make_structure<Id>(1, {{0}, {-1}}),
                        make_set_code({1, 2, 3}).structure()}) {
    CHECK(decode(encode(a)) == a);
  }
  CHECK(decode("{1:[(3,1);(1,2)]}") == decode("{1:[(1,2);(3,1)]}"));

  for (const char* bad :
       {"", "{", "{1:[(1)]", "{1:(1)}", "{1:[()]}", "{1:[(1,)]}", "{0:[(1)]}",
        "{2:[(1)];1:[(2)]}", "{1:[(1)]}x", "nope"}) {
    CHECK_THROWS_AS(decode(bad), std::invalid_argument);
  }
}

TEST_CASE("encode separates distinct structures") {
  std::vector<Structure> all;
  for (Id a = -1; a <= 2; ++a)
    for (Id b = -1; b <= 2; ++b)
      if (a != b) all.push_back(edge(a, b));
  std::set<std::string> keys;
  for (const auto& s : all) keys.insert(encode(s));
  CHECK(keys.size() == all.size());
}
