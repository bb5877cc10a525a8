#include "archcat/preorder.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "archcat/archimedean.hpp"

namespace archcat {

ValidationResult validate_preorder(const PreorderData& data) {
  ValidationResult result;
  auto add = [&](std::string rule, std::string message) {
    result.violations.push_back({std::move(rule), std::move(message)});
  };

  {
    std::unordered_set<std::string> seen;
    for (const auto& e : data.elements) {
      if (e.empty()) add("empty-name", "element with empty name");
      if (!seen.insert(e).second) add("duplicate-element", "element '" + e + "' declared twice");
    }
    for (const auto& [x, y] : data.pairs) {
      if (!seen.count(x)) add("unknown-element", "pair references unknown element '" + x + "'");
      if (!seen.count(y)) add("unknown-element", "pair references unknown element '" + y + "'");
    }
  }
  if (!result.ok()) return result;

  const int n = static_cast<int>(data.elements.size());
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) index.emplace(data.elements[i], i);
  std::vector<bool> rel(static_cast<size_t>(n) * n, false);
  for (const auto& [x, y] : data.pairs) {
    rel[static_cast<size_t>(index.at(x)) * n + index.at(y)] = true;
  }

  for (int x = 0; x < n; ++x) {
    if (!rel[static_cast<size_t>(x) * n + x]) {
      add("reflexivity", "missing pair (" + data.elements[x] + ", " + data.elements[x] + ")");
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!rel[static_cast<size_t>(x) * n + y]) continue;
      for (int z = 0; z < n; ++z) {
        if (rel[static_cast<size_t>(y) * n + z] && !rel[static_cast<size_t>(x) * n + z]) {
          add("transitivity", "pairs (" + data.elements[x] + ", " + data.elements[y] + ") and (" +
                                  data.elements[y] + ", " + data.elements[z] + ") need (" +
                                  data.elements[x] + ", " + data.elements[z] + ")");
        }
      }
    }
  }
  return result;
}

PreorderData reflexive_transitive_closure(const PreorderData& data) {
  const int n = static_cast<int>(data.elements.size());
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) index.emplace(data.elements[i], i);

  std::vector<bool> rel(static_cast<size_t>(n) * n, false);
  for (int x = 0; x < n; ++x) rel[static_cast<size_t>(x) * n + x] = true;
  for (const auto& [x, y] : data.pairs) {
    auto ix = index.find(x);
    auto iy = index.find(y);
    if (ix == index.end() || iy == index.end()) {
      // leave unknown names for the validator to report
      return data;
    }
    rel[static_cast<size_t>(ix->second) * n + iy->second] = true;
  }
  // Floyd–Warshall style saturation
  for (int k = 0; k < n; ++k) {
    for (int x = 0; x < n; ++x) {
      if (!rel[static_cast<size_t>(x) * n + k]) continue;
      for (int y = 0; y < n; ++y) {
        if (rel[static_cast<size_t>(k) * n + y]) rel[static_cast<size_t>(x) * n + y] = true;
      }
    }
  }

  PreorderData out;
  out.elements = data.elements;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (rel[static_cast<size_t>(x) * n + y]) out.pairs.emplace_back(data.elements[x], data.elements[y]);
    }
  }
  return out;
}

Preorder Preorder::from_data(PreorderData data) {
  ValidationResult check = validate_preorder(data);
  if (!check.ok()) {
    throw ValidationError("invalid preorder", std::move(check.violations));
  }
  Preorder p;
  p.data_ = std::move(data);
  const int n = p.size();
  p.rel_.assign(static_cast<size_t>(n) * n, false);
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) index.emplace(p.data_.elements[i], i);
  for (const auto& [x, y] : p.data_.pairs) {
    p.rel_[static_cast<size_t>(index.at(x)) * n + index.at(y)] = true;
  }
  return p;
}

std::optional<ElementId> Preorder::element(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (data_.elements[i] == name) return i;
  }
  return std::nullopt;
}

CategoryData to_category_data(const Preorder& p) {
  CategoryData out;
  out.objects = p.data().elements;
  const int n = p.size();

  auto morphism_name = [&](int x, int y) {
    return "m:" + p.element_name(x) + "->" + p.element_name(y);
  };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!p.leq(x, y)) continue;
      out.morphisms.push_back({morphism_name(x, y), p.element_name(x), p.element_name(y)});
      if (x == y) out.identities.emplace_back(p.element_name(x), morphism_name(x, x));
    }
  }
  // composition forced by thinness: m:y->z ∘ m:x->y = m:x->z
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!p.leq(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (!p.leq(y, z)) continue;
        out.composition.push_back({morphism_name(y, z), morphism_name(x, y), morphism_name(x, z)});
      }
    }
  }
  return out;
}

FiniteCategory to_category(const Preorder& p) {
  return FiniteCategory::from_data(to_category_data(p));
}

EquivClasses equiv_classes(const Preorder& p) {
  EquivClasses classes;
  classes.representative.resize(p.size());
  for (int x = 0; x < p.size(); ++x) {
    int rep = x;
    for (int y = 0; y < x; ++y) {
      if (p.equiv(x, y)) {
        rep = y;  // least equivalent element wins
        break;
      }
    }
    classes.representative[x] = rep;
  }
  return classes;
}

namespace {

void require_related(const Preorder& p, ElementId x, ElementId y) {
  if (!p.leq(x, y)) {
    throw std::invalid_argument("pair (" + p.element_name(x) + ", " + p.element_name(y) +
                                ") is not in the relation");
  }
}

}  // namespace

bool unitary_equiv_thin(const Preorder& p, ElementId A, ElementId B,
                        ElementId C, ElementId D) {
  require_related(p, A, B);
  require_related(p, C, D);
  return p.equiv(A, C) && p.equiv(B, D);
}

bool submorphism_thin(const Preorder& p, ElementId A, ElementId B,
                      ElementId C, ElementId D) {
  require_related(p, A, B);
  require_related(p, C, D);
  return p.leq(C, A) && p.leq(B, D);
}

PreorderBound is_bounded_preorder(const Preorder& p) {
  PreorderBound result;
  const int n = p.size();
  for (int u = 0; u < n && !result.holds; ++u) {
    for (int w = 0; w < n && !result.holds; ++w) {
      if (!p.leq(u, w)) continue;
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) {
        for (int b = 0; b < n && ok; ++b) {
          if (p.leq(a, b) && !(p.leq(u, a) && p.leq(b, w))) ok = false;
        }
      }
      if (ok) {
        result.holds = true;
        result.witness = {u, w};
      }
    }
  }
  return result;
}

bool is_discrete(const Preorder& p) {
  for (int x = 0; x < p.size(); ++x) {
    for (int y = 0; y < p.size(); ++y) {
      if (x != y && p.leq(x, y)) return false;
    }
  }
  return true;
}

std::vector<Preorder> enumerate_preorders(int n, int cap) {
  if (n < 1) throw std::invalid_argument("size must be at least 1");
  if (n > cap) throw std::invalid_argument("size " + std::to_string(n) + " exceeds the cap of " +
                                           std::to_string(cap));

  std::vector<std::string> elements;
  for (int i = 1; i <= n; ++i) elements.push_back(std::to_string(i));

  // off-diagonal slots in row-major order; bit k of the mask switches slot k
  std::vector<std::pair<int, int>> slots;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y) slots.emplace_back(x, y);
    }
  }

  std::vector<Preorder> out;
  for (unsigned long mask = 0; mask < (1ul << slots.size()); ++mask) {
    std::vector<bool> rel(static_cast<size_t>(n) * n, false);
    for (int x = 0; x < n; ++x) rel[static_cast<size_t>(x) * n + x] = true;
    for (size_t k = 0; k < slots.size(); ++k) {
      if (mask & (1ul << k)) rel[static_cast<size_t>(slots[k].first) * n + slots[k].second] = true;
    }

    bool transitive = true;
    for (int x = 0; x < n && transitive; ++x) {
      for (int y = 0; y < n && transitive; ++y) {
        if (!rel[static_cast<size_t>(x) * n + y]) continue;
        for (int z = 0; z < n; ++z) {
          if (rel[static_cast<size_t>(y) * n + z] && !rel[static_cast<size_t>(x) * n + z]) {
            transitive = false;
            break;
          }
        }
      }
    }
    if (!transitive) continue;

    Preorder p;
    p.data_.elements = elements;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (rel[static_cast<size_t>(x) * n + y]) p.data_.pairs.emplace_back(elements[x], elements[y]);
      }
    }
    p.rel_ = std::move(rel);
    out.push_back(std::move(p));
  }
  return out;
}

SweepReport verify_prop1(int n, int cap) {
  SweepReport report;
  for (const Preorder& p : enumerate_preorders(n, cap)) {
    ++report.checked;
    FiniteCategory c = to_category(p);
    bool archimedean = is_archimedean_composition(c).holds;
    bool bounded = is_bounded_preorder(p).holds;
    if (archimedean != bounded) {
      ++report.mismatches;
      if (!report.counterexample) {
        report.counterexample = p.data();
        report.detail = "composition condition " + std::string(archimedean ? "holds" : "fails") +
                        " but closed-form boundedness " + std::string(bounded ? "holds" : "fails");
      }
    }
  }
  report.pass = report.mismatches == 0;
  return report;
}

SweepReport verify_prop2(int n, int cap) {
  SweepReport report;
  for (const Preorder& p : enumerate_preorders(n, cap)) {
    ++report.checked;
    FiniteCategory c = to_category(p);
    bool mismatch = is_archimedean_bounded(c).holds != is_discrete(p);

    // side condition: every morphism's ℕ-closure is a bounded class
    std::string unbounded;
    for (MorphismId v = 0; v < c.morphism_count() && unbounded.empty(); ++v) {
      if (!is_bounded_class(c, nv_closure(c, v).members).holds) {
        unbounded = c.morphism_name(v);
      }
    }

    if (mismatch || !unbounded.empty()) {
      ++report.mismatches;
      if (!report.counterexample) {
        report.counterexample = p.data();
        report.detail = mismatch ? "boundedness condition disagrees with discreteness"
                                 : "closure of " + unbounded + " is not a bounded class";
      }
    }
  }
  report.pass = report.mismatches == 0;
  return report;
}

}  // namespace archcat
