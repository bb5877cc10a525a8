#include "archcat/archimedean.hpp"

#include <algorithm>
#include <deque>

#include "archcat/arrow.hpp"

namespace archcat {

std::vector<MorphismId> unit_equivalents(const FiniteCategory& c, MorphismId v) {
  std::vector<MorphismId> out;
  for (MorphismId g = 0; g < c.morphism_count(); ++g) {
    if (is_unitary_equivalent(c, g, v).holds) out.push_back(g);
  }
  return out;
}

NvClosure nv_closure(const FiniteCategory& c, MorphismId v) {
  NvClosure closure;
  closure.unit = v;
  closure.generators = unit_equivalents(c, v);

  // breadth-first over the extension step m ↦ w∘m; the reachable set only
  // grows, so visiting each morphism once suffices
  std::vector<char> member(c.morphism_count(), 0);
  std::deque<MorphismId> queue;
  for (MorphismId g : closure.generators) {
    if (!member[g]) {
      member[g] = 1;
      queue.push_back(g);
    }
  }
  while (!queue.empty()) {
    MorphismId m = queue.front();
    queue.pop_front();
    for (MorphismId w : closure.generators) {
      if (!c.composable(w, m)) continue;
      MorphismId next = c.compose(w, m);
      if (!member[next]) {
        member[next] = 1;
        queue.push_back(next);
      }
    }
  }
  for (MorphismId m = 0; m < c.morphism_count(); ++m) {
    if (member[m]) closure.members.push_back(m);
  }
  return closure;
}

namespace {

bool name_less(const FiniteCategory& c, MorphismId x, MorphismId y) {
  return c.morphism_name(x) < c.morphism_name(y);
}

}  // namespace

ArchReport is_bounded_class(const FiniteCategory& c,
                            const std::vector<MorphismId>& ms) {
  ArchReport report;

  std::vector<MorphismId> admissible;
  // best-covering candidate for the failure diagnostic
  MorphismId best = -1;
  int best_covered = -1;
  MorphismId best_uncovered = -1;

  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    ++report.stats.candidates;
    int covered = 0;
    MorphismId first_uncovered = -1;
    for (MorphismId m : ms) {
      ++report.stats.submorphism_checks;
      if (is_submorphism(c, m, f).holds) {
        ++covered;
      } else if (first_uncovered < 0 || name_less(c, m, first_uncovered)) {
        first_uncovered = m;
      }
    }
    if (covered == static_cast<int>(ms.size())) {
      admissible.push_back(f);
    } else if (covered > best_covered ||
               (covered == best_covered && name_less(c, f, best))) {
      best_covered = covered;
      best = f;
      best_uncovered = first_uncovered;
    }
  }

  if (admissible.empty()) {
    report.holds = false;
    if (best_uncovered >= 0) report.counterexample = c.morphism_name(best_uncovered);
    return report;
  }

  report.holds = true;
  // prefer the tightest bound: minimal under the submorphism preorder among
  // admissible candidates, name as tiebreak
  MorphismId witness = -1;
  for (MorphismId f : admissible) {
    bool minimal = true;
    for (MorphismId g : admissible) {
      if (g == f) continue;
      report.stats.submorphism_checks += 2;
      if (is_submorphism(c, g, f).holds && !is_submorphism(c, f, g).holds) {
        minimal = false;
        break;
      }
    }
    if (minimal && (witness < 0 || name_less(c, f, witness))) witness = f;
  }
  report.witness = c.morphism_name(witness);
  return report;
}

ArchReport is_archimedean_composition(const FiniteCategory& c) {
  ArchReport report;

  std::vector<MorphismId> units(c.morphism_count());
  for (MorphismId v = 0; v < c.morphism_count(); ++v) units[v] = v;
  std::sort(units.begin(), units.end(),
            [&](MorphismId x, MorphismId y) { return name_less(c, x, y); });

  MorphismId best = -1;
  int best_covered = -1;
  MorphismId best_uncovered = -1;

  for (MorphismId v : units) {
    ++report.stats.candidates;
    NvClosure closure = nv_closure(c, v);
    int covered = 0;
    MorphismId first_uncovered = -1;
    for (MorphismId f = 0; f < c.morphism_count(); ++f) {
      bool dominated = false;
      for (MorphismId m : closure.members) {
        ++report.stats.submorphism_checks;
        if (is_submorphism(c, f, m).holds) {
          dominated = true;
          break;
        }
      }
      if (dominated) {
        ++covered;
      } else if (first_uncovered < 0 || name_less(c, f, first_uncovered)) {
        first_uncovered = f;
      }
    }
    if (covered == c.morphism_count()) {
      report.holds = true;
      report.witness = c.morphism_name(v);  // units scanned name-ascending
      return report;
    }
    if (covered > best_covered) {
      best_covered = covered;
      best = v;
      best_uncovered = first_uncovered;
    }
  }

  report.holds = false;
  if (best >= 0 && best_uncovered >= 0) report.counterexample = c.morphism_name(best_uncovered);
  return report;
}

ArchReport is_archimedean_bounded(const FiniteCategory& c) {
  ArchReport report;

  std::vector<MorphismId> units(c.morphism_count());
  for (MorphismId v = 0; v < c.morphism_count(); ++v) units[v] = v;
  std::sort(units.begin(), units.end(),
            [&](MorphismId x, MorphismId y) { return name_less(c, x, y); });

  for (MorphismId v : units) {
    ++report.stats.candidates;
    NvClosure closure = nv_closure(c, v);
    ArchReport bounded = is_bounded_class(c, closure.members);
    report.stats.submorphism_checks += bounded.stats.submorphism_checks;
    if (bounded.holds && !c.is_identity(v)) {
      report.holds = false;
      report.counterexample = c.morphism_name(v);
      return report;
    }
  }
  report.holds = true;
  return report;
}

}  // namespace archcat
