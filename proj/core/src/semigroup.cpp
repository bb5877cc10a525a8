#include "archcat/semigroup.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace archcat {

ValidationResult validate_semigroup(const SemigroupData& data, bool require_monotone) {
  ValidationResult result;
  auto add = [&](std::string rule, std::string message) {
    result.violations.push_back({std::move(rule), std::move(message)});
  };

  // Phase 1: names.
  {
    std::unordered_set<std::string> seen;
    for (const auto& e : data.elements) {
      if (e.empty()) add("empty-name", "element with empty name");
      if (!seen.insert(e).second) add("duplicate-element", "element '" + e + "' declared twice");
    }
    for (const auto& entry : data.add) {
      for (const auto& name : entry) {
        if (!seen.count(name)) add("unknown-element", "addition entry references unknown element '" + name + "'");
      }
    }
    for (const auto& [x, y] : data.leq) {
      if (!seen.count(x)) add("unknown-element", "order pair references unknown element '" + x + "'");
      if (!seen.count(y)) add("unknown-element", "order pair references unknown element '" + y + "'");
    }
    if (!seen.count(data.zero)) add("unknown-element", "zero '" + data.zero + "' is not an element");
  }
  if (!result.ok()) return result;

  const int n = static_cast<int>(data.elements.size());
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) index.emplace(data.elements[i], i);

  // Phase 2: the addition table is total and single-valued.
  std::vector<int> table(static_cast<size_t>(n) * n, -1);
  {
    for (const auto& entry : data.add) {
      size_t slot = static_cast<size_t>(index.at(entry[0])) * n + index.at(entry[1]);
      if (table[slot] >= 0) {
        add("duplicate-entry", "sum " + entry[0] + " + " + entry[1] + " defined twice");
        continue;
      }
      table[slot] = index.at(entry[2]);
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (table[static_cast<size_t>(x) * n + y] < 0) {
          add("missing-entry", "sum " + data.elements[x] + " + " + data.elements[y] + " is undefined");
        }
      }
    }
  }
  if (!result.ok()) return result;

  std::vector<bool> rel(static_cast<size_t>(n) * n, false);
  for (const auto& [x, y] : data.leq) {
    rel[static_cast<size_t>(index.at(x)) * n + index.at(y)] = true;
  }
  auto leq = [&](int x, int y) { return rel[static_cast<size_t>(x) * n + y]; };
  auto sum = [&](int x, int y) { return table[static_cast<size_t>(x) * n + y]; };

  // Phase 3: the algebraic and order laws.
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (sum(sum(x, y), z) != sum(x, sum(y, z))) {
          add("associativity", "(" + data.elements[x] + " + " + data.elements[y] + ") + " + data.elements[z] +
                                  " != " + data.elements[x] + " + (" + data.elements[y] + " + " + data.elements[z] + ")");
        }
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    if (!leq(x, x)) add("reflexivity", "missing pair (" + data.elements[x] + ", " + data.elements[x] + ")");
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!leq(x, y)) continue;
      if (x != y && leq(y, x)) {
        if (x < y) add("antisymmetry", "both (" + data.elements[x] + ", " + data.elements[y] + ") and (" +
                                           data.elements[y] + ", " + data.elements[x] + ") present");
        continue;
      }
      for (int z = 0; z < n; ++z) {
        if (leq(y, z) && !leq(x, z)) {
          add("transitivity", "pairs (" + data.elements[x] + ", " + data.elements[y] + ") and (" +
                                  data.elements[y] + ", " + data.elements[z] + ") need (" +
                                  data.elements[x] + ", " + data.elements[z] + ")");
        }
      }
    }
  }
  {
    int zero = index.at(data.zero);
    for (int x = 0; x < n; ++x) {
      if (!leq(zero, x)) continue;
      for (int y = 0; y < n; ++y) {
        if (!leq(zero, y)) continue;
        if (!leq(zero, sum(x, y))) {
          add("positive-cone", data.elements[x] + " + " + data.elements[y] + " = " +
                                   data.elements[sum(x, y)] + " leaves the positive cone");
        }
      }
    }
  }
  if (require_monotone) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (!leq(x, y)) continue;
        for (int z = 0; z < n; ++z) {
          if (!leq(sum(x, z), sum(y, z))) {
            add("monotonicity", data.elements[x] + " <= " + data.elements[y] + " but " +
                                    data.elements[x] + " + " + data.elements[z] + " !<= " +
                                    data.elements[y] + " + " + data.elements[z]);
          }
          if (!leq(sum(z, x), sum(z, y))) {
            add("monotonicity", data.elements[x] + " <= " + data.elements[y] + " but " +
                                    data.elements[z] + " + " + data.elements[x] + " !<= " +
                                    data.elements[z] + " + " + data.elements[y]);
          }
        }
      }
    }
  }
  return result;
}

OrderedSemigroup OrderedSemigroup::from_data(SemigroupData data, bool require_monotone) {
  ValidationResult check = validate_semigroup(data, require_monotone);
  if (!check.ok()) {
    throw ValidationError("invalid ordered semigroup", std::move(check.violations));
  }

  OrderedSemigroup s;
  s.data_ = std::move(data);
  const int n = s.size();
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) index.emplace(s.data_.elements[i], i);
  s.add_.assign(static_cast<size_t>(n) * n, -1);
  for (const auto& entry : s.data_.add) {
    s.add_[static_cast<size_t>(index.at(entry[0])) * n + index.at(entry[1])] = index.at(entry[2]);
  }
  s.leq_.assign(static_cast<size_t>(n) * n, false);
  for (const auto& [x, y] : s.data_.leq) {
    s.leq_[static_cast<size_t>(index.at(x)) * n + index.at(y)] = true;
  }
  s.zero_ = index.at(s.data_.zero);
  return s;
}

std::optional<int> OrderedSemigroup::element(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (data_.elements[i] == name) return i;
  }
  return std::nullopt;
}

std::vector<int> OrderedSemigroup::positives() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x) {
    if (leq(zero_, x)) out.push_back(x);
  }
  return out;
}

bool OrderedSemigroup::zero_is_neutral() const {
  for (int x = 0; x < size(); ++x) {
    if (add(zero_, x) != x || add(x, zero_) != x) return false;
  }
  return true;
}

MultipleSet multiples(const OrderedSemigroup& s, int x) {
  if (x < 0 || x >= s.size()) throw std::invalid_argument("element id out of range");
  MultipleSet out;
  out.base = x;
  std::vector<char> seen(s.size(), 0);
  int current = x;
  while (!seen[current]) {
    seen[current] = 1;
    out.members.push_back(current);
    current = s.add(current, x);
  }
  return out;
}

namespace {

// x is dominated by some multiple of u
bool dominated(const OrderedSemigroup& s, const MultipleSet& mu, int x) {
  for (int m : mu.members) {
    if (s.leq(x, m)) return true;
  }
  return false;
}

bool multiples_bounded(const OrderedSemigroup& s, int x, BoundRange range) {
  MultipleSet mx = multiples(s, x);
  for (int y = 0; y < s.size(); ++y) {
    if (range == BoundRange::positives && !s.leq(s.zero(), y)) continue;
    bool bounds_all = true;
    for (int m : mx.members) {
      if (!s.leq(m, y)) {
        bounds_all = false;
        break;
      }
    }
    if (bounds_all) return true;
  }
  return false;
}

}  // namespace

SemigroupReport archimedean_unit(const OrderedSemigroup& s) {
  SemigroupReport report;
  int best = -1;
  int best_covered = -1;
  int best_undominated = -1;

  for (int u = 0; u < s.size(); ++u) {
    if (!s.leq(s.zero(), u)) continue;  // u ranges over E₊
    MultipleSet mu = multiples(s, u);
    int covered = 0;
    int first_undominated = -1;
    for (int x = 0; x < s.size(); ++x) {
      if (dominated(s, mu, x)) {
        ++covered;
      } else if (first_undominated < 0) {
        first_undominated = x;
      }
    }
    if (covered == s.size()) {
      report.holds = true;
      report.witness = s.element_name(u);
      return report;
    }
    if (covered > best_covered) {
      best_covered = covered;
      best = u;
      best_undominated = first_undominated;
    }
  }
  report.holds = false;
  if (best >= 0) report.counterexample = s.element_name(best_undominated);
  return report;
}

SemigroupReport archimedean_bounded_multiples(const OrderedSemigroup& s, BoundRange range) {
  SemigroupReport report;
  for (int x = 0; x < s.size(); ++x) {
    if (!s.leq(s.zero(), x)) continue;
    if (multiples_bounded(s, x, range) && x != s.zero()) {
      report.holds = false;
      report.counterexample = s.element_name(x);
      return report;
    }
  }
  report.holds = true;
  return report;
}

bool check_13_14_equiv(const OrderedSemigroup& s, BoundRange range) {
  // implication form: bounded multiples force x = zero, for positive x
  bool implication = archimedean_bounded_multiples(s, range).holds;
  // biconditional form: additionally, multiples(zero) must itself be bounded
  bool biconditional = implication && multiples_bounded(s, s.zero(), range);
  return implication == biconditional;
}

namespace {

const char* kInstanceNames[] = {"a", "b", "c", "d", "e", "f"};

}  // namespace

class SemigroupSweep {
 public:
  static OrderedSemigroup build(int n, const std::vector<int>& table,
                                const std::vector<bool>& rel, int zero) {
    OrderedSemigroup s;
    for (int i = 0; i < n; ++i) s.data_.elements.push_back(kInstanceNames[i]);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        s.data_.add.push_back({s.data_.elements[x], s.data_.elements[y],
                               s.data_.elements[table[static_cast<size_t>(x) * n + y]]});
      }
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (rel[static_cast<size_t>(x) * n + y]) {
          s.data_.leq.emplace_back(s.data_.elements[x], s.data_.elements[y]);
        }
      }
    }
    s.data_.zero = s.data_.elements[zero];
    s.add_ = table;
    s.leq_ = rel;
    s.zero_ = zero;
    return s;
  }
};

void for_each_semigroup_instance(int n, OrderKind kind,
                                 const std::function<void(const OrderedSemigroup&)>& fn,
                                 int cap) {
  if (n < 1) throw std::invalid_argument("size must be at least 1");
  if (n > cap) throw std::invalid_argument("size " + std::to_string(n) + " exceeds the cap of " +
                                           std::to_string(cap));
  if (n > static_cast<int>(std::size(kInstanceNames))) {
    throw std::invalid_argument("size exceeds the instance name pool");
  }

  const size_t cells = static_cast<size_t>(n) * n;
  std::vector<int> table(cells, 0);

  auto associative = [&](const std::vector<int>& t) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          if (t[static_cast<size_t>(t[static_cast<size_t>(x) * n + y]) * n + z] !=
              t[static_cast<size_t>(x) * n + t[static_cast<size_t>(y) * n + z]]) {
            return false;
          }
        }
      }
    }
    return true;
  };

  auto cone_closed = [&](const std::vector<int>& t, const std::vector<bool>& rel, int zero) {
    for (int x = 0; x < n; ++x) {
      if (!rel[static_cast<size_t>(zero) * n + x]) continue;
      for (int y = 0; y < n; ++y) {
        if (!rel[static_cast<size_t>(zero) * n + y]) continue;
        if (!rel[static_cast<size_t>(zero) * n + t[static_cast<size_t>(x) * n + y]]) return false;
      }
    }
    return true;
  };

  // orders to sweep: every total order as a permutation (rank vectors), or
  // every labeled partial order
  std::vector<std::vector<bool>> orders;
  if (kind == OrderKind::total) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      // perm lists the elements from least to greatest
      std::vector<int> rank(n);
      for (int i = 0; i < n; ++i) rank[perm[i]] = i;
      std::vector<bool> rel(cells, false);
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (rank[x] <= rank[y]) rel[static_cast<size_t>(x) * n + y] = true;
        }
      }
      orders.push_back(std::move(rel));
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    std::vector<std::pair<int, int>> slots;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (x != y) slots.emplace_back(x, y);
      }
    }
    for (unsigned long mask = 0; mask < (1ul << slots.size()); ++mask) {
      std::vector<bool> rel(cells, false);
      for (int x = 0; x < n; ++x) rel[static_cast<size_t>(x) * n + x] = true;
      for (size_t k = 0; k < slots.size(); ++k) {
        if (mask & (1ul << k)) rel[static_cast<size_t>(slots[k].first) * n + slots[k].second] = true;
      }
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) {
        for (int y = 0; y < n && ok; ++y) {
          if (!rel[static_cast<size_t>(x) * n + y]) continue;
          if (x != y && rel[static_cast<size_t>(y) * n + x]) ok = false;  // antisymmetry
          for (int z = 0; z < n && ok; ++z) {
            if (rel[static_cast<size_t>(y) * n + z] && !rel[static_cast<size_t>(x) * n + z]) ok = false;
          }
        }
      }
      if (ok) orders.push_back(std::move(rel));
    }
  }

  // odometer over the table cells, row-major, value ascending
  while (true) {
    if (associative(table)) {
      for (const auto& rel : orders) {
        for (int zero = 0; zero < n; ++zero) {
          if (!cone_closed(table, rel, zero)) continue;
          fn(SemigroupSweep::build(n, table, rel, zero));
        }
      }
    }
    int cell = static_cast<int>(cells) - 1;
    while (cell >= 0 && table[cell] == n - 1) {
      table[cell] = 0;
      --cell;
    }
    if (cell < 0) break;
    ++table[cell];
  }
}

Lemma1Report verify_lemma1(int n, int cap) {
  Lemma1Report report;
  for_each_semigroup_instance(n, OrderKind::total, [&](const OrderedSemigroup& s) {
    ++report.instances;
    if (s.zero_is_neutral()) ++report.zero_neutral;
    bool bounded_multiples = archimedean_bounded_multiples(s).holds;
    bool unit = archimedean_unit(s).holds;
    if (bounded_multiples && !unit) {
      ++report.implication_failures;
      if (!report.counterexample) {
        report.counterexample = s.data();
        report.detail = "bounded-multiples condition holds but no Archimedean unit exists";
      }
    }
    if (!check_13_14_equiv(s)) {
      ++report.agreement_failures;
      if (!report.counterexample) {
        report.counterexample = s.data();
        report.detail = "the two bounded-multiples formulations disagree";
      }
    }
  }, cap);
  report.pass = report.implication_failures == 0 && report.agreement_failures == 0;
  return report;
}

}  // namespace archcat
