#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "archcat/category.hpp"
#include "archcat/validation.hpp"

namespace archcat {

using ElementId = int;

struct PreorderData {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> pairs;  // x ≤ y

  bool operator==(const PreorderData&) const = default;
};

// Reflexivity and transitivity, all violations in declaration order
// (after name resolution is clean).
ValidationResult validate_preorder(const PreorderData& data);

// Adds the missing reflexive and transitive pairs. Used by the CLI's
// --close convenience flag; library callers get exactly what they wrote.
PreorderData reflexive_transitive_closure(const PreorderData& data);

class Preorder {
 public:
  static Preorder from_data(PreorderData data);

  const PreorderData& data() const { return data_; }
  int size() const { return static_cast<int>(data_.elements.size()); }
  const std::string& element_name(ElementId x) const { return data_.elements.at(x); }
  std::optional<ElementId> element(const std::string& name) const;

  bool leq(ElementId x, ElementId y) const { return rel_.at(static_cast<size_t>(x) * data_.elements.size() + y); }
  // x ≤ y and y ≤ x
  bool equiv(ElementId x, ElementId y) const { return leq(x, y) && leq(y, x); }

 private:
  friend std::vector<Preorder> enumerate_preorders(int n, int cap);
  Preorder() = default;

  PreorderData data_;
  std::vector<bool> rel_;
};

// The thin category of a preorder: one object per element, one morphism
// "m:x->y" per related pair (declaration order of x, then y), identities at
// the reflexive pairs, composition forced by thinness.
CategoryData to_category_data(const Preorder& p);
FiniteCategory to_category(const Preorder& p);

// element -> canonical representative (least element of its ≈-class in
// declaration order)
struct EquivClasses {
  std::vector<ElementId> representative;
};

EquivClasses equiv_classes(const Preorder& p);

// Closed form for unitary equivalence of (A,B) and (C,D): A ≈ C and B ≈ D.
// Both pairs must be related; throws std::invalid_argument otherwise.
bool unitary_equiv_thin(const Preorder& p, ElementId A, ElementId B,
                        ElementId C, ElementId D);

// Closed form for the submorphism relation, (A,B) inside (C,D): C ≤ A and
// B ≤ D. Both pairs must be related.
bool submorphism_thin(const Preorder& p, ElementId A, ElementId B,
                      ElementId C, ElementId D);

struct PreorderBound {
  bool holds = false;
  std::optional<std::pair<ElementId, ElementId>> witness;  // (U, W)
};

// Global bounds: U ≤ A and B ≤ W for every related (A,B), with U ≤ W.
// Witness is least by declaration order of U, then W.
PreorderBound is_bounded_preorder(const Preorder& p);

// Only reflexive pairs are related.
bool is_discrete(const Preorder& p);

// All labeled preorders on elements {"1",...,"n"}, exactly once, in a fixed
// order: reflexive relations enumerated by ascending bitmask over the
// off-diagonal pairs (row-major), filtered for transitivity. Throws
// std::invalid_argument when n < 1 or n > cap (cost guard).
std::vector<Preorder> enumerate_preorders(int n, int cap = 4);

struct SweepReport {
  bool pass = false;
  int checked = 0;
  int mismatches = 0;
  std::optional<PreorderData> counterexample;  // first mismatch, verbatim
  std::string detail;
};

// Archimedean composition condition on to_category(p) vs the closed-form
// boundedness of p, across every enumerated preorder of size n.
SweepReport verify_prop1(int n, int cap = 4);

// Archimedean boundedness condition on to_category(p) vs discreteness of p;
// also asserts that every morphism's ℕ-closure is a bounded class.
SweepReport verify_prop2(int n, int cap = 4);

}  // namespace archcat
