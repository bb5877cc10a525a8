// Acceptance gate: one binary, one line per criterion, nonzero exit on any
// failure. Everything here re-derives its expectations independently of the
// unit tests (oracle loops, pinned counts, pinned verdicts).

#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "archcat/archimedean.hpp"
#include "archcat/arrow.hpp"
#include "archcat/category.hpp"
#include "archcat/io.hpp"
#include "archcat/preorder.hpp"
#include "archcat/semigroup.hpp"
#include "cli.hpp"
#include "fixtures.hpp"

using namespace archcat;
using namespace archcat::testing;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool pass) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label << "\n";
  if (!pass) ++failures;
}

std::vector<CategoryData> fixture_categories() {
  std::vector<CategoryData> out = {pair_data(), loop1_data(), singleton_data(), empty_data()};
  for (const PreorderData& d : {chain3_data(), disc2_data(), indisc2_data()}) {
    out.push_back(to_category_data(Preorder::from_data(d)));
  }
  return out;
}

// criterion 1/2: the preorder sweeps, with the labeled counts re-pinned here
bool sweep_criterion(bool composition_side) {
  const long long expected_counts[] = {1, 4, 29, 355};
  for (int n = 1; n <= 4; ++n) {
    SweepReport r = composition_side ? verify_prop1(n) : verify_prop2(n);
    if (!r.pass || r.mismatches != 0) return false;
    if (r.checked != expected_counts[n - 1]) return false;
  }
  return true;
}

// criterion 3: thin-category closed forms against the categorical deciders
bool characterization_criterion() {
  for (int n = 1; n <= 3; ++n) {
    for (const Preorder& p : enumerate_preorders(n)) {
      FiniteCategory c = to_category(p);
      struct Arrow {
        MorphismId id;
        int dom, cod;
      };
      std::vector<Arrow> arrows;
      for (int x = 0; x < p.size(); ++x) {
        for (int y = 0; y < p.size(); ++y) {
          if (!p.leq(x, y)) continue;
          auto m = c.morphism("m:" + p.element_name(x) + "->" + p.element_name(y));
          if (!m) return false;
          arrows.push_back({*m, x, y});
        }
      }
      for (const Arrow& f : arrows) {
        for (const Arrow& g : arrows) {
          bool thin_eq = unitary_equiv_thin(p, f.dom, f.cod, g.dom, g.cod);
          if (thin_eq != is_unitary_equivalent(c, f.id, g.id).holds) return false;
          bool thin_sub = submorphism_thin(p, f.dom, f.cod, g.dom, g.cod);
          if (thin_sub != is_submorphism(c, f.id, g.id).holds) return false;
        }
      }
      std::vector<MorphismId> all;
      for (MorphismId m = 0; m < c.morphism_count(); ++m) all.push_back(m);
      if (is_bounded_preorder(p).holds != is_bounded_class(c, all).holds) return false;
    }
  }
  return true;
}

// criterion 4: categories of squares obey the category laws everywhere
bool arrow_criterion() {
  std::vector<CategoryData> bases = fixture_categories();
  for (int n = 1; n <= 3; ++n) {
    for (const Preorder& p : enumerate_preorders(n)) bases.push_back(to_category_data(p));
  }
  for (const CategoryData& data : bases) {
    FiniteCategory base = FiniteCategory::from_data(data);
    ArrowCategory arrows = build_arrow_category(base);
    if (!validate_category(arrows.derived.data()).ok()) return false;
    if (arrows.derived.object_count() != base.morphism_count()) return false;
    for (const Square& sq : arrows.squares) {
      if (!is_commuting_square(base, sq.source, sq.target, sq.a, sq.b)) return false;
    }
    // independent square count
    long long count = 0;
    for (MorphismId s = 0; s < base.morphism_count(); ++s) {
      for (MorphismId t = 0; t < base.morphism_count(); ++t) {
        for (MorphismId a = 0; a < base.morphism_count(); ++a) {
          for (MorphismId b = 0; b < base.morphism_count(); ++b) {
            if (base.dom(a) == base.dom(s) && base.cod(a) == base.dom(t) &&
                base.dom(b) == base.cod(s) && base.cod(b) == base.cod(t) &&
                base.compose(t, a) == base.compose(b, s)) {
              ++count;
            }
          }
        }
      }
    }
    if (count != arrows.derived.morphism_count()) return false;
  }
  // the pinned two-object example: 3 base morphisms, 6 commuting squares
  ArrowCategory pair_arrows = build_arrow_category(FiniteCategory::from_data(pair_data()));
  return pair_arrows.derived.object_count() == 3 && pair_arrows.derived.morphism_count() == 6;
}

// criterion 5: closure membership equals chain reachability
bool closure_criterion() {
  for (const CategoryData& data : fixture_categories()) {
    FiniteCategory c = FiniteCategory::from_data(data);
    if (c.morphism_count() > 8) return false;  // the corpus is meant to stay small
    for (MorphismId v = 0; v < c.morphism_count(); ++v) {
      NvClosure closure = nv_closure(c, v);
      std::set<MorphismId> gens(closure.generators.begin(), closure.generators.end());
      std::set<MorphismId> oracle = gens;
      std::set<MorphismId> frontier = gens;
      for (int len = 2; len <= 2 * c.morphism_count(); ++len) {
        std::set<MorphismId> next;
        for (MorphismId m : frontier) {
          for (MorphismId w : gens) {
            if (c.composable(w, m)) next.insert(c.compose(w, m));
          }
        }
        frontier = std::move(next);
        oracle.insert(frontier.begin(), frontier.end());
      }
      std::set<MorphismId> got(closure.members.begin(), closure.members.end());
      if (got != oracle) return false;
    }
  }
  return true;
}

// criterion 6: the ordered-semigroup sweep with its instance counts
bool semigroup_criterion() {
  const long long expected_instances[] = {1, 28, 1608};
  for (int n = 1; n <= 3; ++n) {
    Lemma1Report r = verify_lemma1(n);
    if (!r.pass || r.implication_failures != 0 || r.agreement_failures != 0) return false;
    if (r.instances != expected_instances[n - 1]) return false;
  }
  return true;
}

// criterion 7: pinned verdicts on the named fixtures
bool regression_criterion() {
  auto cat_of = [](const PreorderData& d) { return to_category(Preorder::from_data(d)); };

  FiniteCategory chain3 = cat_of(chain3_data());
  if (!is_archimedean_composition(chain3).holds) return false;
  if (is_archimedean_bounded(chain3).holds) return false;

  FiniteCategory disc2 = cat_of(disc2_data());
  if (is_archimedean_composition(disc2).holds) return false;
  if (!is_archimedean_bounded(disc2).holds) return false;

  FiniteCategory indisc2 = cat_of(indisc2_data());
  if (!is_archimedean_composition(indisc2).holds) return false;
  if (is_archimedean_bounded(indisc2).holds) return false;

  FiniteCategory loop1 = FiniteCategory::from_data(loop1_data());
  ArchReport loop_report = is_archimedean_composition(loop1);
  if (!loop_report.holds || loop_report.witness != std::optional<std::string>("g")) return false;
  if (is_archimedean_bounded(loop1).holds) return false;

  OrderedSemigroup trunc3 = OrderedSemigroup::from_data(trunc3_data());
  SemigroupReport unit = archimedean_unit(trunc3);
  if (!unit.holds || unit.witness != std::optional<std::string>("1")) return false;
  SemigroupReport bounded = archimedean_bounded_multiples(trunc3);
  if (bounded.holds || bounded.counterexample != std::optional<std::string>("1")) return false;
  return true;
}

// criterion 8: machine reports are identical across runs, timing aside
bool determinism_criterion() {
  auto run_machine = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    archcat::cli::run(args, out, err);
    nlohmann::json doc = nlohmann::json::parse(out.str());
    doc.erase("elapsed_ms");
    return doc.dump();
  };
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", "prop1", "--size", "3", "--format", "machine"},
        std::vector<std::string>{"verify", "prop2", "--size", "3", "--format", "machine"},
        std::vector<std::string>{"verify", "lemma1", "--size", "2", "--format", "machine"}}) {
    if (run_machine(args) != run_machine(args)) return false;
  }
  return true;
}

}  // namespace

int main() {
  report(1, "composition condition matches order boundedness on all preorders up to size 4",
         sweep_criterion(true));
  report(2, "bounded-closure condition matches discreteness on all preorders up to size 4",
         sweep_criterion(false));
  report(3, "closed forms agree with the categorical deciders on all preorders up to size 3",
         characterization_criterion());
  report(4, "square categories obey the category laws on every fixture and small preorder",
         arrow_criterion());
  report(5, "closure members equal chain reachability on every fixture category",
         closure_criterion());
  report(6, "bounded multiples force a trivial element on every semigroup instance up to size 3",
         semigroup_criterion());
  report(7, "pinned fixture verdicts are stable", regression_criterion());
  report(8, "machine reports are byte-identical across runs, timing aside",
         determinism_criterion());

  if (failures == 0) {
    std::cout << "acceptance: all 8 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion(s) failed\n";
  return 1;
}
