#include "archcat/arrow.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace archcat {

bool is_commuting_square(const FiniteCategory& c, MorphismId source,
                         MorphismId target, MorphismId a, MorphismId b) {
  if (c.dom(a) != c.dom(source) || c.cod(a) != c.dom(target)) {
    throw std::invalid_argument("square leg a (" + c.morphism_name(a) +
                                ") is not typed dom(source) -> dom(target)");
  }
  if (c.dom(b) != c.cod(source) || c.cod(b) != c.cod(target)) {
    throw std::invalid_argument("square leg b (" + c.morphism_name(b) +
                                ") is not typed cod(source) -> cod(target)");
  }
  return c.compose(target, a) == c.compose(b, source);
}

ArrowCategory build_arrow_category(const FiniteCategory& base) {
  std::vector<Square> squares;

  const int m = base.morphism_count();
  for (int s = 0; s < m; ++s) {
    for (int t = 0; t < m; ++t) {
      for (MorphismId a : base.hom(base.dom(s), base.dom(t))) {
        for (MorphismId b : base.hom(base.cod(s), base.cod(t))) {
          if (base.compose(t, a) == base.compose(b, s)) {
            squares.push_back({s, t, a, b});
          }
        }
      }
    }
  }

  CategoryData derived;
  for (int f = 0; f < m; ++f) derived.objects.push_back(base.morphism_name(f));

  auto square_name = [&](const Square& q) {
    return "sq(" + base.morphism_name(q.source) + "," + base.morphism_name(q.target) + "," +
           base.morphism_name(q.a) + "," + base.morphism_name(q.b) + ")";
  };
  std::map<std::tuple<int, int, int, int>, int> square_index;
  for (int i = 0; i < static_cast<int>(squares.size()); ++i) {
    const Square& q = squares[i];
    derived.morphisms.push_back({square_name(q), base.morphism_name(q.source), base.morphism_name(q.target)});
    square_index.emplace(std::tuple{q.source, q.target, q.a, q.b}, i);
  }
  for (int f = 0; f < m; ++f) {
    // identity square: both legs are base identities
    Square idq{f, f, base.identity_of(base.dom(f)), base.identity_of(base.cod(f))};
    derived.identities.emplace_back(base.morphism_name(f),
                                    derived.morphisms[square_index.at({idq.source, idq.target, idq.a, idq.b})].name);
  }
  for (int i = 0; i < static_cast<int>(squares.size()); ++i) {
    for (int j = 0; j < static_cast<int>(squares.size()); ++j) {
      const Square& g = squares[i];
      const Square& f = squares[j];
      if (f.target != g.source) continue;
      // composition is leg-wise
      Square h{f.source, g.target, base.compose(g.a, f.a), base.compose(g.b, f.b)};
      int k = square_index.at({h.source, h.target, h.a, h.b});
      derived.composition.push_back({derived.morphisms[i].name, derived.morphisms[j].name, derived.morphisms[k].name});
    }
  }

  return ArrowCategory{&base, FiniteCategory::from_data(std::move(derived)), std::move(squares)};
}

namespace {

// hom pairs (a, b) making a commuting square f -> g, in declaration order
std::vector<std::pair<MorphismId, MorphismId>> commuting_pairs(const FiniteCategory& c,
                                                               MorphismId f, MorphismId g) {
  std::vector<std::pair<MorphismId, MorphismId>> out;
  for (MorphismId a : c.hom(c.dom(f), c.dom(g))) {
    for (MorphismId b : c.hom(c.cod(f), c.cod(g))) {
      if (c.compose(g, a) == c.compose(b, f)) out.emplace_back(a, b);
    }
  }
  return out;
}

// lexicographic comparison by morphism name
bool name_tuple_less(const FiniteCategory& c, std::initializer_list<MorphismId> lhs,
                     std::initializer_list<MorphismId> rhs) {
  auto l = lhs.begin();
  auto r = rhs.begin();
  for (; l != lhs.end(); ++l, ++r) {
    if (c.morphism_name(*l) != c.morphism_name(*r)) return c.morphism_name(*l) < c.morphism_name(*r);
  }
  return false;
}

}  // namespace

EquivalenceResult is_unitary_equivalent(const FiniteCategory& c, MorphismId f,
                                        MorphismId g) {
  EquivalenceResult result;
  auto forward = commuting_pairs(c, f, g);
  auto backward = commuting_pairs(c, g, f);

  MorphismId id_dom_f = c.identity_of(c.dom(f));
  MorphismId id_cod_f = c.identity_of(c.cod(f));
  MorphismId id_dom_g = c.identity_of(c.dom(g));
  MorphismId id_cod_g = c.identity_of(c.cod(g));

  for (auto [a, b] : forward) {
    for (auto [a2, b2] : backward) {
      if (c.compose(a2, a) != id_dom_f || c.compose(b2, b) != id_cod_f) continue;
      if (c.compose(a, a2) != id_dom_g || c.compose(b, b2) != id_cod_g) continue;
      if (result.holds &&
          !name_tuple_less(c, {a, b, a2, b2},
                           {result.forward->a, result.forward->b, result.inverse->a, result.inverse->b})) {
        continue;
      }
      result.holds = true;
      result.forward = Square{f, g, a, b};
      result.inverse = Square{g, f, a2, b2};
    }
  }
  return result;
}

bool is_base_isomorphism(const FiniteCategory& c, MorphismId m) {
  for (MorphismId inv : c.hom(c.cod(m), c.dom(m))) {
    if (c.compose(inv, m) == c.identity_of(c.dom(m)) &&
        c.compose(m, inv) == c.identity_of(c.cod(m))) {
      return true;
    }
  }
  return false;
}

std::optional<Square> find_iso_legged_square(const FiniteCategory& c,
                                             MorphismId f, MorphismId g) {
  for (auto [a, b] : commuting_pairs(c, f, g)) {
    if (is_base_isomorphism(c, a) && is_base_isomorphism(c, b)) {
      return Square{f, g, a, b};
    }
  }
  return std::nullopt;
}

SubmorphismResult is_submorphism(const FiniteCategory& c, MorphismId f,
                                 MorphismId g) {
  SubmorphismResult result;
  for (MorphismId a : c.hom(c.dom(g), c.dom(f))) {
    for (MorphismId b : c.hom(c.cod(f), c.cod(g))) {
      if (c.compose(b, c.compose(f, a)) != g) continue;
      if (result.holds && !name_tuple_less(c, {a, b}, {*result.a, *result.b})) continue;
      result.holds = true;
      result.a = a;
      result.b = b;
    }
  }
  return result;
}

}  // namespace archcat
