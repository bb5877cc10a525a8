#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "archcat/archimedean.hpp"
#include "archcat/arrow.hpp"
#include "archcat/preorder.hpp"
#include "fixtures.hpp"

using namespace archcat;
using namespace archcat::testing;

namespace {

std::vector<FiniteCategory> fixture_categories() {
  std::vector<FiniteCategory> out;
  out.push_back(FiniteCategory::from_data(pair_data()));
  out.push_back(FiniteCategory::from_data(loop1_data()));
  out.push_back(FiniteCategory::from_data(singleton_data()));
  out.push_back(to_category(Preorder::from_data(chain3_data())));
  out.push_back(to_category(Preorder::from_data(disc2_data())));
  out.push_back(to_category(Preorder::from_data(indisc2_data())));
  return out;
}

std::vector<std::string> names(const FiniteCategory& c, const std::vector<MorphismId>& ms) {
  std::vector<std::string> out;
  for (MorphismId m : ms) out.push_back(c.morphism_name(m));
  return out;
}

// Composites of every chain of generators, stratified by length. Length L
// composites are w∘m for m a length L-1 composite, so a frontier walk
// enumerates exactly the chains.
std::set<MorphismId> chain_oracle(const FiniteCategory& c, const std::vector<MorphismId>& gens,
                                  int max_len) {
  std::set<MorphismId> all(gens.begin(), gens.end());
  std::set<MorphismId> frontier = all;
  for (int len = 2; len <= max_len; ++len) {
    std::set<MorphismId> next;
    for (MorphismId m : frontier) {
      for (MorphismId w : gens) {
        if (c.composable(w, m)) next.insert(c.compose(w, m));
      }
    }
    all.insert(next.begin(), next.end());
    frontier = std::move(next);
  }
  return all;
}

}  // namespace

TEST_CASE("unit equivalents on the fixtures") {
  FiniteCategory chain = to_category(Preorder::from_data(chain3_data()));
  CHECK(names(chain, unit_equivalents(chain, *chain.morphism("m:1->3"))) ==
        std::vector<std::string>{"m:1->3"});

  FiniteCategory loop = FiniteCategory::from_data(loop1_data());
  CHECK(names(loop, unit_equivalents(loop, *loop.morphism("g"))) ==
        std::vector<std::string>{"id", "g"});

  for (const FiniteCategory& c : fixture_categories()) {
    for (MorphismId v = 0; v < c.morphism_count(); ++v) {
      auto equivalents = unit_equivalents(c, v);
      CHECK(std::count(equivalents.begin(), equivalents.end(), v) == 1);
    }
  }
}

TEST_CASE("closure members on the fixtures") {
  FiniteCategory chain = to_category(Preorder::from_data(chain3_data()));
  CHECK(names(chain, nv_closure(chain, *chain.morphism("m:1->3")).members) ==
        std::vector<std::string>{"m:1->3"});

  FiniteCategory loop = FiniteCategory::from_data(loop1_data());
  NvClosure gclosure = nv_closure(loop, *loop.morphism("g"));
  CHECK(names(loop, gclosure.generators) == std::vector<std::string>{"id", "g"});
  CHECK(names(loop, gclosure.members) == std::vector<std::string>{"id", "g"});

  FiniteCategory disc = to_category(Preorder::from_data(disc2_data()));
  CHECK(names(disc, nv_closure(disc, *disc.morphism("m:1->1")).members) ==
        std::vector<std::string>{"m:1->1"});
}

TEST_CASE("closure equals chain enumeration up to twice the morphism count") {
  for (const FiniteCategory& c : fixture_categories()) {
    REQUIRE(c.morphism_count() <= 8);
    for (MorphismId v = 0; v < c.morphism_count(); ++v) {
      NvClosure closure = nv_closure(c, v);
      std::set<MorphismId> got(closure.members.begin(), closure.members.end());
      CHECK(got == chain_oracle(c, closure.generators, 2 * c.morphism_count()));
      // the unit itself is always a member
      CHECK(got.count(v) == 1);
      // and generators are members
      for (MorphismId g : closure.generators) CHECK(got.count(g) == 1);
    }
  }
}

TEST_CASE("bounded classes") {
  FiniteCategory chain = to_category(Preorder::from_data(chain3_data()));
  SUBCASE("a single morphism is bounded, with the tightest admissible witness") {
    ArchReport r = is_bounded_class(chain, {*chain.morphism("m:2->3")});
    CHECK(r.holds);
    CHECK(*r.witness == "m:2->3");
  }
  SUBCASE("the whole chain is bounded only by its full span") {
    std::vector<MorphismId> all;
    for (MorphismId m = 0; m < chain.morphism_count(); ++m) all.push_back(m);
    ArchReport r = is_bounded_class(chain, all);
    CHECK(r.holds);
    CHECK(*r.witness == "m:1->3");
  }
  SUBCASE("no common bound for a discrete pair") {
    FiniteCategory disc = to_category(Preorder::from_data(disc2_data()));
    ArchReport r = is_bounded_class(disc, {*disc.morphism("m:1->1"), *disc.morphism("m:2->2")});
    CHECK_FALSE(r.holds);
    CHECK(*r.counterexample == "m:2->2");
  }
  SUBCASE("the empty class is bounded whenever any morphism exists") {
    FiniteCategory pair = FiniteCategory::from_data(pair_data());
    ArchReport r = is_bounded_class(pair, {});
    CHECK(r.holds);
    CHECK(*r.witness == "id_A");
  }
  SUBCASE("no morphisms, no bound") {
    FiniteCategory none = FiniteCategory::from_data(empty_data());
    ArchReport r = is_bounded_class(none, {});
    CHECK_FALSE(r.holds);
    CHECK_FALSE(r.counterexample.has_value());
  }
}

TEST_CASE("composition-condition decider") {
  FiniteCategory chain = to_category(Preorder::from_data(chain3_data()));
  ArchReport r = is_archimedean_composition(chain);
  CHECK(r.holds);
  CHECK(*r.witness == "m:1->3");
  CHECK(r.stats.candidates > 0);
  CHECK(r.stats.submorphism_checks > 0);

  FiniteCategory disc = to_category(Preorder::from_data(disc2_data()));
  ArchReport rd = is_archimedean_composition(disc);
  CHECK_FALSE(rd.holds);
  CHECK(*rd.counterexample == "m:2->2");  // best unit m:1->1 misses it

  FiniteCategory indisc = to_category(Preorder::from_data(indisc2_data()));
  ArchReport ri = is_archimedean_composition(indisc);
  CHECK(ri.holds);
  CHECK(*ri.witness == "m:A->A");

  FiniteCategory pair = FiniteCategory::from_data(pair_data());
  ArchReport rp = is_archimedean_composition(pair);
  CHECK(rp.holds);
  CHECK(*rp.witness == "f");

  FiniteCategory loop = FiniteCategory::from_data(loop1_data());
  ArchReport rl = is_archimedean_composition(loop);
  CHECK(rl.holds);
  CHECK(*rl.witness == "g");

  SUBCASE("empty category: the existential has no candidate") {
    ArchReport re = is_archimedean_composition(FiniteCategory::from_data(empty_data()));
    CHECK_FALSE(re.holds);
    CHECK_FALSE(re.witness.has_value());
    CHECK_FALSE(re.counterexample.has_value());
  }
  SUBCASE("single identity satisfies the condition") {
    ArchReport rs = is_archimedean_composition(FiniteCategory::from_data(singleton_data()));
    CHECK(rs.holds);
    CHECK(*rs.witness == "id");
  }
}

TEST_CASE("bounded-closure decider") {
  FiniteCategory disc = to_category(Preorder::from_data(disc2_data()));
  CHECK(is_archimedean_bounded(disc).holds);

  FiniteCategory chain = to_category(Preorder::from_data(chain3_data()));
  ArchReport rc = is_archimedean_bounded(chain);
  CHECK_FALSE(rc.holds);
  CHECK(*rc.counterexample == "m:1->2");  // name-least non-identity; closures in thin categories are bounded

  FiniteCategory loop = FiniteCategory::from_data(loop1_data());
  ArchReport rl = is_archimedean_bounded(loop);
  CHECK_FALSE(rl.holds);
  CHECK(*rl.counterexample == "g");

  FiniteCategory pair = FiniteCategory::from_data(pair_data());
  ArchReport rp = is_archimedean_bounded(pair);
  CHECK_FALSE(rp.holds);
  CHECK(*rp.counterexample == "f");

  SUBCASE("universal over nothing") {
    CHECK(is_archimedean_bounded(FiniteCategory::from_data(empty_data())).holds);
    CHECK(is_archimedean_bounded(FiniteCategory::from_data(singleton_data())).holds);
  }
}
