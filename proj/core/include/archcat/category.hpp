#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "archcat/validation.hpp"

namespace archcat {

using ObjectId = int;
using MorphismId = int;

struct MorphismDecl {
  std::string name;
  std::string dom;
  std::string cod;

  bool operator==(const MorphismDecl&) const = default;
};

// A finite category presented as explicit data: finitely many objects and
// morphisms, an identity assignment, and a composition table listed as
// triples [g, f, h] meaning g∘f = h (f applied first). This is the exchange
// format; FiniteCategory is the validated, indexed form.
struct CategoryData {
  std::vector<std::string> objects;
  std::vector<MorphismDecl> morphisms;
  // object name -> identity morphism name
  std::vector<std::pair<std::string, std::string>> identities;
  // entries {g, f, h} with g∘f = h
  std::vector<std::array<std::string, 3>> composition;

  bool operator==(const CategoryData&) const = default;
};

// Checks, in order: (a) name well-formedness and reference resolution,
// (b) composition-table structure (defined exactly on composable pairs,
// no duplicates), (c) the category laws (composite typing, identity laws,
// associativity). Later phases run only when earlier ones are clean, so
// the law checks may assume a total, well-typed table.
ValidationResult validate_category(const CategoryData& data);

// Validated finite category with O(1) composition and identity lookup.
// Object/morphism ids are declaration indices into the originating data.
class FiniteCategory {
 public:
  // Throws ValidationError when validate_category(data) reports violations.
  static FiniteCategory from_data(CategoryData data);

  const CategoryData& data() const { return data_; }

  int object_count() const { return static_cast<int>(data_.objects.size()); }
  int morphism_count() const { return static_cast<int>(data_.morphisms.size()); }

  const std::string& object_name(ObjectId a) const { return data_.objects.at(a); }
  const std::string& morphism_name(MorphismId m) const { return data_.morphisms.at(m).name; }

  std::optional<ObjectId> object(const std::string& name) const;
  std::optional<MorphismId> morphism(const std::string& name) const;

  ObjectId dom(MorphismId m) const { return dom_.at(m); }
  ObjectId cod(MorphismId m) const { return cod_.at(m); }
  MorphismId identity_of(ObjectId a) const { return identity_.at(a); }

  bool is_identity(MorphismId m) const {
    return dom(m) == cod(m) && identity_of(dom(m)) == m;
  }

  bool composable(MorphismId g, MorphismId f) const { return cod(f) == dom(g); }

  // g∘f; throws std::invalid_argument when cod(f) != dom(g).
  MorphismId compose(MorphismId g, MorphismId f) const;

  // Morphisms a -> b in declaration order.
  const std::vector<MorphismId>& hom(ObjectId a, ObjectId b) const {
    return hom_.at(static_cast<size_t>(a) * data_.objects.size() + b);
  }

 private:
  FiniteCategory() = default;

  CategoryData data_;
  std::unordered_map<std::string, ObjectId> object_index_;
  std::unordered_map<std::string, MorphismId> morphism_index_;
  std::vector<ObjectId> dom_, cod_;
  std::vector<MorphismId> identity_;       // by object id
  std::vector<MorphismId> table_;          // m*m, -1 on non-composable pairs
  std::vector<std::vector<MorphismId>> hom_;
};

}  // namespace archcat
