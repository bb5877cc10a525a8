#pragma once

#include <optional>
#include <string>
#include <vector>

#include "archcat/category.hpp"

namespace archcat {

// The class of composites v_n∘…∘v_1 (n ≥ 1) over composable chains whose
// factors are each unitary equivalent to `unit`. `generators` are the
// length-1 chains; `members` the full closure.
struct NvClosure {
  MorphismId unit;
  std::vector<MorphismId> generators;  // ascending declaration order
  std::vector<MorphismId> members;     // ascending declaration order
};

struct ArchStats {
  long long candidates = 0;          // units / bounds examined
  long long submorphism_checks = 0;

  bool operator==(const ArchStats&) const = default;
};

// Outcome of an Archimedean-style decision. witness carries the unit (for
// the composition condition) or the bound (for boundedness) when the
// decision succeeds existentially; counterexample carries the morphism that
// breaks a failed decision. Universal successes and decisions over an empty
// morphism set have neither.
struct ArchReport {
  bool holds = false;
  std::optional<std::string> witness;
  std::optional<std::string> counterexample;
  ArchStats stats;
};

// All morphisms unitary equivalent to v, in declaration order. Contains v.
std::vector<MorphismId> unit_equivalents(const FiniteCategory& c, MorphismId v);

// Reachability closure: breadth-first from the generators along the
// extension step m ↦ w∘m for composable generators w. Exact — every
// realizable composite is reached, and nothing else.
NvClosure nv_closure(const FiniteCategory& c, MorphismId v);

// Some morphism f has every member of ms as a submorphism. Among admissible
// bounds the witness is one minimal under the submorphism preorder (ties by
// name), so the reported bound is never strictly looser than another
// candidate. On failure the counterexample is the name-least member the
// best-covering candidate misses.
ArchReport is_bounded_class(const FiniteCategory& c,
                            const std::vector<MorphismId>& ms);

// ∃ unit v such that every morphism is a submorphism of some member of
// nv_closure(v). Witness = name-least admissible unit. Exact: no length
// cutoff is needed because nv_closure is the exact composite set.
ArchReport is_archimedean_composition(const FiniteCategory& c);

// ∀ v: nv_closure(v) bounded ⟹ v is an identity. Counterexample = the
// name-least non-identity v with bounded closure.
ArchReport is_archimedean_bounded(const FiniteCategory& c);

}  // namespace archcat
