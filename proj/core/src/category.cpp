#include "archcat/category.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace archcat {

namespace {

using NameIndex = std::unordered_map<std::string, int>;

// First-declaration index for each name; duplicates keep the first.
NameIndex index_names(const std::vector<std::string>& names) {
  NameIndex index;
  for (int i = 0; i < static_cast<int>(names.size()); ++i) {
    index.emplace(names[i], i);
  }
  return index;
}

}  // namespace

ValidationResult validate_category(const CategoryData& data) {
  ValidationResult result;
  auto add = [&](std::string rule, std::string message) {
    result.violations.push_back({std::move(rule), std::move(message)});
  };

  // Phase 1: names and references. Later phases index by name, so they only
  // run once everything resolves.
  {
    std::unordered_set<std::string> seen;
    for (const auto& o : data.objects) {
      if (o.empty()) add("empty-name", "object with empty name");
      if (!seen.insert(o).second) add("duplicate-object", "object '" + o + "' declared twice");
    }
    seen.clear();
    for (const auto& m : data.morphisms) {
      if (m.name.empty()) add("empty-name", "morphism with empty name");
      if (!seen.insert(m.name).second) add("duplicate-morphism", "morphism '" + m.name + "' declared twice");
    }

    NameIndex objects = index_names(data.objects);
    auto known_object = [&](const std::string& o) { return objects.count(o) > 0; };
    std::unordered_set<std::string> morphism_names(seen.begin(), seen.end());
    auto known_morphism = [&](const std::string& m) { return morphism_names.count(m) > 0; };

    for (const auto& m : data.morphisms) {
      if (!known_object(m.dom)) add("unknown-object", "morphism '" + m.name + "' has unknown dom '" + m.dom + "'");
      if (!known_object(m.cod)) add("unknown-object", "morphism '" + m.name + "' has unknown cod '" + m.cod + "'");
    }
    for (const auto& [obj, mor] : data.identities) {
      if (!known_object(obj)) add("unknown-object", "identity assigned to unknown object '" + obj + "'");
      if (!known_morphism(mor)) add("unknown-morphism", "identity of '" + obj + "' names unknown morphism '" + mor + "'");
    }
    for (const auto& entry : data.composition) {
      for (const auto& name : entry) {
        if (!known_morphism(name)) add("unknown-morphism", "composition entry names unknown morphism '" + name + "'");
      }
    }
  }
  if (!result.ok()) return result;

  NameIndex objects = index_names(data.objects);
  NameIndex morphisms;
  for (int i = 0; i < static_cast<int>(data.morphisms.size()); ++i) {
    morphisms.emplace(data.morphisms[i].name, i);
  }
  auto dom_of = [&](int m) { return objects.at(data.morphisms[m].dom); };
  auto cod_of = [&](int m) { return objects.at(data.morphisms[m].cod); };

  // Phase 2: the shape of the identity assignment and composition table —
  // identities present and well typed, the table defined exactly once on
  // exactly the composable pairs.
  {
    std::vector<int> identity(data.objects.size(), -1);
    std::unordered_set<std::string> assigned;
    for (const auto& [obj, mor] : data.identities) {
      if (!assigned.insert(obj).second) {
        add("duplicate-identity", "object '" + obj + "' assigned two identities");
        continue;
      }
      int m = morphisms.at(mor);
      if (data.morphisms[m].dom != obj || data.morphisms[m].cod != obj) {
        add("identity-typing", "identity of '" + obj + "' is '" + mor + "', not an endomorphism of '" + obj + "'");
      }
      identity[objects.at(obj)] = m;
    }
    for (int a = 0; a < static_cast<int>(data.objects.size()); ++a) {
      if (identity[a] < 0) add("missing-identity", "object '" + data.objects[a] + "' has no identity");
    }

    const size_t n = data.morphisms.size();
    std::vector<char> defined(n * n, 0);
    for (const auto& entry : data.composition) {
      int g = morphisms.at(entry[0]);
      int f = morphisms.at(entry[1]);
      int h = morphisms.at(entry[2]);
      if (cod_of(f) != dom_of(g)) {
        add("non-composable-entry",
            "composition entry compose(" + entry[0] + ", " + entry[1] + ") is not composable");
        continue;
      }
      if (defined[static_cast<size_t>(g) * n + f]) {
        add("duplicate-composite",
            "compose(" + entry[0] + ", " + entry[1] + ") defined twice");
        continue;
      }
      defined[static_cast<size_t>(g) * n + f] = 1;
      if (dom_of(h) != dom_of(f) || cod_of(h) != cod_of(g)) {
        add("composite-typing",
            "compose(" + entry[0] + ", " + entry[1] + ") = " + entry[2] + " has the wrong dom/cod");
      }
    }
    for (int g = 0; g < static_cast<int>(n); ++g) {
      for (int f = 0; f < static_cast<int>(n); ++f) {
        if (cod_of(f) == dom_of(g) && !defined[static_cast<size_t>(g) * n + f]) {
          add("missing-composite",
              "missing composite compose(" + data.morphisms[g].name + ", " + data.morphisms[f].name + ")");
        }
      }
    }
  }
  if (!result.ok()) return result;

  // Phase 3: the category laws over the now total, well-typed table.
  std::vector<int> identity(data.objects.size(), -1);
  for (const auto& [obj, mor] : data.identities) identity[objects.at(obj)] = morphisms.at(mor);
  const size_t n = data.morphisms.size();
  std::vector<int> table(n * n, -1);
  for (const auto& entry : data.composition) {
    table[static_cast<size_t>(morphisms.at(entry[0])) * n + morphisms.at(entry[1])] = morphisms.at(entry[2]);
  }
  auto compose = [&](int g, int f) { return table[static_cast<size_t>(g) * n + f]; };

  for (int f = 0; f < static_cast<int>(n); ++f) {
    const std::string& name = data.morphisms[f].name;
    if (compose(identity[cod_of(f)], f) != f) {
      add("identity-law", "compose(id of '" + data.morphisms[f].cod + "', " + name + ") != " + name);
    }
    if (compose(f, identity[dom_of(f)]) != f) {
      add("identity-law", "compose(" + name + ", id of '" + data.morphisms[f].dom + "') != " + name);
    }
  }
  for (int h = 0; h < static_cast<int>(n); ++h) {
    for (int g = 0; g < static_cast<int>(n); ++g) {
      if (cod_of(g) != dom_of(h)) continue;
      for (int f = 0; f < static_cast<int>(n); ++f) {
        if (cod_of(f) != dom_of(g)) continue;
        if (compose(compose(h, g), f) != compose(h, compose(g, f))) {
          add("associativity",
              "compose(compose(" + data.morphisms[h].name + ", " + data.morphisms[g].name + "), " +
                  data.morphisms[f].name + ") != compose(" + data.morphisms[h].name + ", compose(" +
                  data.morphisms[g].name + ", " + data.morphisms[f].name + "))");
        }
      }
    }
  }
  return result;
}

FiniteCategory FiniteCategory::from_data(CategoryData data) {
  ValidationResult check = validate_category(data);
  if (!check.ok()) {
    throw ValidationError("invalid category", std::move(check.violations));
  }

  FiniteCategory c;
  c.data_ = std::move(data);
  const auto& d = c.data_;
  for (int i = 0; i < static_cast<int>(d.objects.size()); ++i) c.object_index_.emplace(d.objects[i], i);
  for (int i = 0; i < static_cast<int>(d.morphisms.size()); ++i) {
    c.morphism_index_.emplace(d.morphisms[i].name, i);
    c.dom_.push_back(c.object_index_.at(d.morphisms[i].dom));
    c.cod_.push_back(c.object_index_.at(d.morphisms[i].cod));
  }
  c.identity_.assign(d.objects.size(), -1);
  for (const auto& [obj, mor] : d.identities) {
    c.identity_[c.object_index_.at(obj)] = c.morphism_index_.at(mor);
  }

  const size_t n = d.morphisms.size();
  c.table_.assign(n * n, -1);
  for (const auto& entry : d.composition) {
    c.table_[static_cast<size_t>(c.morphism_index_.at(entry[0])) * n + c.morphism_index_.at(entry[1])] =
        c.morphism_index_.at(entry[2]);
  }

  c.hom_.assign(d.objects.size() * d.objects.size(), {});
  for (int m = 0; m < static_cast<int>(n); ++m) {
    c.hom_[static_cast<size_t>(c.dom_[m]) * d.objects.size() + c.cod_[m]].push_back(m);
  }
  return c;
}

std::optional<ObjectId> FiniteCategory::object(const std::string& name) const {
  auto it = object_index_.find(name);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorphismId> FiniteCategory::morphism(const std::string& name) const {
  auto it = morphism_index_.find(name);
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

MorphismId FiniteCategory::compose(MorphismId g, MorphismId f) const {
  if (!composable(g, f)) {
    throw std::invalid_argument("compose(" + morphism_name(g) + ", " + morphism_name(f) +
                                "): cod of the second argument is not dom of the first");
  }
  return table_[static_cast<size_t>(g) * data_.morphisms.size() + f];
}

}  // namespace archcat
