#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "archcat/validation.hpp"

namespace archcat {

struct SemigroupData {
  std::vector<std::string> elements;
  std::vector<std::array<std::string, 3>> add;  // [x, y, z] meaning x+y=z
  std::vector<std::pair<std::string, std::string>> leq;
  std::string zero;

  bool operator==(const SemigroupData&) const = default;
};

// Laws checked in phases: name resolution; table totality; then
// associativity, partial-order axioms (reflexive, transitive,
// antisymmetric), and closure of the positive cone under addition.
// `require_monotone` additionally demands x ≤ y ⟹ x+z ≤ y+z and
// z+x ≤ z+y (off by default: the weaker structure is the subject here).
ValidationResult validate_semigroup(const SemigroupData& data,
                                    bool require_monotone = false);

// Finite partially ordered semigroup with a designated zero. The zero is a
// reference point for the order (E₊ = { x : 0 ≤ x }), not necessarily an
// additive identity; zero_is_neutral() reports whether it happens to be one.
class OrderedSemigroup {
 public:
  static OrderedSemigroup from_data(SemigroupData data,
                                    bool require_monotone = false);

  const SemigroupData& data() const { return data_; }
  int size() const { return static_cast<int>(data_.elements.size()); }
  const std::string& element_name(int x) const { return data_.elements.at(x); }
  std::optional<int> element(const std::string& name) const;

  int add(int x, int y) const { return add_.at(static_cast<size_t>(x) * data_.elements.size() + y); }
  bool leq(int x, int y) const { return leq_.at(static_cast<size_t>(x) * data_.elements.size() + y); }
  int zero() const { return zero_; }

  // E₊ in declaration order.
  std::vector<int> positives() const;
  bool zero_is_neutral() const;

 private:
  friend class SemigroupSweep;
  OrderedSemigroup() = default;

  SemigroupData data_;
  std::vector<int> add_;
  std::vector<bool> leq_;
  int zero_ = 0;
};

// { n·x : n ≥ 1 }, collected as x, x+x, x+x+x, … until the first repeat.
// members in discovery order; |members| ≤ |elements|.
struct MultipleSet {
  int base;
  std::vector<int> members;
};

MultipleSet multiples(const OrderedSemigroup& s, int x);

struct SemigroupReport {
  bool holds = false;
  std::optional<std::string> witness;
  std::optional<std::string> counterexample;
};

// Which elements may bound a multiple set from above.
enum class BoundRange { positives, all_elements };

// ∃ u ∈ E₊ such that every x has x ≤ m for some multiple m of u. Witness is
// the first admissible u in declaration order; on failure the counterexample
// is the first element the best-covering u leaves undominated.
SemigroupReport archimedean_unit(const OrderedSemigroup& s);

// ∀ x ∈ E₊: multiples(x) bounded above (by a y in `range`) ⟹ x = zero.
// Counterexample = first violating x in declaration order.
SemigroupReport archimedean_bounded_multiples(
    const OrderedSemigroup& s, BoundRange range = BoundRange::positives);

// The bounded-multiples condition written two ways: as the implication above,
// and as the biconditional that also demands multiples(zero) be bounded.
// Returns whether they agree (they should, always).
bool check_13_14_equiv(const OrderedSemigroup& s,
                       BoundRange range = BoundRange::positives);

struct Lemma1Report {
  bool pass = false;
  long long instances = 0;           // tables × orders × zeros passing the cone law
  long long zero_neutral = 0;        // of those, how many have a neutral zero
  long long implication_failures = 0;
  long long agreement_failures = 0;  // check_13_14_equiv false anywhere
  std::optional<SemigroupData> counterexample;  // first implication failure
  std::string detail;
};

// Exhaustive check that the bounded-multiples condition implies the unit
// condition over every labeled associative table on n elements, every total
// order on them, and every choice of zero, keeping only instances whose
// positive cone is closed under addition. Expected: zero failures.
Lemma1Report verify_lemma1(int n, int cap = 3);

enum class OrderKind { total, partial };

// Enumerates the same instance space as verify_lemma1 (with OrderKind::total)
// or its partial-order variant, invoking fn on each valid instance. Exposed
// for the property suite; declaration names are "a", "b", "c", ….
void for_each_semigroup_instance(int n, OrderKind kind,
                                 const std::function<void(const OrderedSemigroup&)>& fn,
                                 int cap = 3);

}  // namespace archcat
