#pragma once

#include <algorithm>

#include "archcat/category.hpp"
#include "archcat/preorder.hpp"
#include "archcat/semigroup.hpp"

// Hand-written structures shared across the test binaries. Each returns the
// raw declaration data so tests can also perturb it before validation.
namespace archcat::testing {

// Two objects, one non-identity arrow: A --f--> B.
inline CategoryData pair_data() {
  CategoryData d;
  d.objects = {"A", "B"};
  d.morphisms = {{"id_A", "A", "A"}, {"id_B", "B", "B"}, {"f", "A", "B"}};
  d.identities = {{"A", "id_A"}, {"B", "id_B"}};
  d.composition = {{"id_A", "id_A", "id_A"},
                   {"f", "id_A", "f"},
                   {"id_B", "f", "f"},
                   {"id_B", "id_B", "id_B"}};
  return d;
}

// One object with an involution g (g∘g = id), so g is invertible.
inline CategoryData loop1_data() {
  CategoryData d;
  d.objects = {"*"};
  d.morphisms = {{"id", "*", "*"}, {"g", "*", "*"}};
  d.identities = {{"*", "id"}};
  d.composition = {{"id", "id", "id"}, {"id", "g", "g"}, {"g", "id", "g"}, {"g", "g", "id"}};
  return d;
}

inline CategoryData empty_data() { return CategoryData{}; }

inline CategoryData singleton_data() {
  CategoryData d;
  d.objects = {"*"};
  d.morphisms = {{"id", "*", "*"}};
  d.identities = {{"*", "id"}};
  d.composition = {{"id", "id", "id"}};
  return d;
}

// Total, well-typed single-object table that is NOT associative:
// (p∘p)∘p = q∘p = e but p∘(p∘p) = p∘q = p.
inline CategoryData non_associative_data() {
  CategoryData d;
  d.objects = {"*"};
  d.morphisms = {{"e", "*", "*"}, {"p", "*", "*"}, {"q", "*", "*"}};
  d.identities = {{"*", "e"}};
  d.composition = {{"e", "e", "e"}, {"e", "p", "p"}, {"e", "q", "q"},
                   {"p", "e", "p"}, {"p", "p", "q"}, {"p", "q", "p"},
                   {"q", "e", "q"}, {"q", "p", "e"}, {"q", "q", "q"}};
  return d;
}

// 1 < 2 < 3.
inline PreorderData chain3_data() {
  return {{"1", "2", "3"},
          {{"1", "1"}, {"1", "2"}, {"1", "3"}, {"2", "2"}, {"2", "3"}, {"3", "3"}}};
}

// Two unrelated elements.
inline PreorderData disc2_data() {
  return {{"1", "2"}, {{"1", "1"}, {"2", "2"}}};
}

// A ≤ B ≤ A: one equivalence class, four morphisms.
inline PreorderData indisc2_data() {
  return {{"A", "B"}, {{"A", "A"}, {"A", "B"}, {"B", "A"}, {"B", "B"}}};
}

inline PreorderData singleton_preorder_data() {
  return {{"x"}, {{"x", "x"}}};
}

// Addition truncated at 2 on {0, 1, 2}, total order, zero = 0.
inline SemigroupData trunc3_data() {
  SemigroupData d;
  d.elements = {"0", "1", "2"};
  for (int x = 0; x <= 2; ++x) {
    for (int y = 0; y <= 2; ++y) {
      int z = std::min(x + y, 2);
      d.add.push_back({std::to_string(x), std::to_string(y), std::to_string(z)});
    }
  }
  d.leq = {{"0", "0"}, {"0", "1"}, {"0", "2"}, {"1", "1"}, {"1", "2"}, {"2", "2"}};
  d.zero = "0";
  return d;
}

// a < 0 with idempotent meet-like addition; the positive cone is {0} alone.
inline SemigroupData neg_data() {
  SemigroupData d;
  d.elements = {"a", "0"};
  d.add = {{"a", "a", "a"}, {"a", "0", "a"}, {"0", "a", "a"}, {"0", "0", "0"}};
  d.leq = {{"a", "a"}, {"a", "0"}, {"0", "0"}};
  d.zero = "0";
  return d;
}

// Z/2 with 0 < 1: valid, but + is not monotone (1 ≤ 1 yet 1+1 = 0 < 1+0).
inline SemigroupData xor2_data() {
  SemigroupData d;
  d.elements = {"0", "1"};
  d.add = {{"0", "0", "0"}, {"0", "1", "1"}, {"1", "0", "1"}, {"1", "1", "0"}};
  d.leq = {{"0", "0"}, {"0", "1"}, {"1", "1"}};
  d.zero = "0";
  return d;
}

inline SemigroupData singleton_semigroup_data() {
  return {{"0"}, {{"0", "0", "0"}}, {{"0", "0"}}, "0"};
}

// Right-zero semigroup on an antichain {p, q}: no Archimedean unit exists.
inline SemigroupData antichain2_data() {
  SemigroupData d;
  d.elements = {"p", "q"};
  d.add = {{"p", "p", "p"}, {"p", "q", "q"}, {"q", "p", "p"}, {"q", "q", "q"}};
  d.leq = {{"p", "p"}, {"q", "q"}};
  d.zero = "p";
  return d;
}

// Constant addition lands on c, so the designated zero is not neutral.
inline SemigroupData constant2_data() {
  SemigroupData d;
  d.elements = {"z", "c"};
  d.add = {{"z", "z", "c"}, {"z", "c", "c"}, {"c", "z", "c"}, {"c", "c", "c"}};
  d.leq = {{"z", "z"}, {"z", "c"}, {"c", "c"}};
  d.zero = "z";
  return d;
}

}  // namespace archcat::testing
