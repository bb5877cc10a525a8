#pragma once

#include <optional>
#include <string>
#include <vector>

#include "archcat/category.hpp"

namespace archcat {

// A commuting square from `source` to `target`: legs a : dom(source) -> dom(target)
// and b : cod(source) -> cod(target) with target∘a = b∘source.
struct Square {
  MorphismId source;
  MorphismId target;
  MorphismId a;
  MorphismId b;

  bool operator==(const Square&) const = default;
};

// True when target∘a = b∘source. Throws std::invalid_argument, naming the
// offending leg, when a or b is not typed as required above.
bool is_commuting_square(const FiniteCategory& c, MorphismId source,
                         MorphismId target, MorphismId a, MorphismId b);

// The category whose objects are the morphisms of `base` and whose morphisms
// are the commuting squares between them, composed leg-wise. `derived` is
// produced as ordinary category data and revalidated on construction, so the
// category laws hold by the same checks applied to any input.
struct ArrowCategory {
  const FiniteCategory* base;
  FiniteCategory derived;
  std::vector<Square> squares;  // indexed by derived morphism id
};

// Squares are generated in lexicographic (source, target, a, b) declaration
// order and named "sq(source,target,a,b)" after the base morphism names.
ArrowCategory build_arrow_category(const FiniteCategory& base);

// Witness pair of mutually inverse squares between f and g.
struct EquivalenceResult {
  bool holds = false;
  std::optional<Square> forward;  // f -> g
  std::optional<Square> inverse;  // g -> f
};

// Isomorphism in the arrow category: searches for squares (a, b) : f -> g and
// (a', b') : g -> f inverse to each other leg-wise. The witness is the least
// (a, b, a', b') under lexicographic comparison of morphism names.
EquivalenceResult is_unitary_equivalent(const FiniteCategory& c, MorphismId f,
                                        MorphismId g);

// Fast sufficient check: one commuting square f -> g whose legs are both
// isomorphisms of the base category. Equivalent to is_unitary_equivalent on
// every input (the inverse square is built from the legs' inverses); kept
// separate so the equivalence itself stays testable.
std::optional<Square> find_iso_legged_square(const FiniteCategory& c,
                                             MorphismId f, MorphismId g);

// m has a two-sided inverse in the base category.
bool is_base_isomorphism(const FiniteCategory& c, MorphismId m);

struct SubmorphismResult {
  bool holds = false;
  std::optional<MorphismId> a;  // dom(g) -> dom(f)
  std::optional<MorphismId> b;  // cod(f) -> cod(g)
};

// f is a submorphism of g when g factors as b∘f∘a. Witness is the least
// (a, b) under lexicographic comparison of morphism names.
SubmorphismResult is_submorphism(const FiniteCategory& c, MorphismId f,
                                 MorphismId g);

}  // namespace archcat
