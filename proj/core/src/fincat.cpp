#include "fcmt/fincat.hpp"

#include "fcmt/errors.hpp"

namespace fcmt {

std::optional<std::uint32_t> FinCategory::object_index(const std::string& name) const {
  for (std::uint32_t i = 0; i < objects.size(); ++i)
    if (objects[i] == name) return i;
  return std::nullopt;
}

std::optional<std::uint32_t> FinCategory::morphism_index(const std::string& name) const {
  for (std::uint32_t i = 0; i < morphisms.size(); ++i)
    if (morphisms[i].name == name) return i;
  return std::nullopt;
}

void FinCategory::check() const {
  for (const auto& m : morphisms)
    if (m.dom >= objects.size() || m.cod >= objects.size())
      throw NotACategory("morphism '" + m.name + "' has endpoints out of range");
  if (identities.size() != objects.size())
    throw NotACategory("identity table has the wrong size");
  for (std::uint32_t a = 0; a < identities.size(); ++a) {
    if (identities[a] >= morphisms.size())
      throw NotACategory("identity of '" + objects[a] + "' out of range");
    const auto& id = morphisms[identities[a]];
    if (id.dom != a || id.cod != a)
      throw NotACategory("identity of '" + objects[a] + "' is not an endomorphism");
  }
  for (std::uint32_t g = 0; g < morphisms.size(); ++g)
    for (std::uint32_t f = 0; f < morphisms.size(); ++f) {
      if (morphisms[g].dom != morphisms[f].cod) continue;
      auto it = compose.find(key(g, f));
      if (it == compose.end())
        throw NotACategory("missing composite " + morphisms[g].name + " o " + morphisms[f].name);
      if (it->second >= morphisms.size()) throw NotACategory("composite out of range");
      const auto& c = morphisms[it->second];
      if (c.dom != morphisms[f].dom || c.cod != morphisms[g].cod)
        throw NotACategory("composite " + morphisms[g].name + " o " + morphisms[f].name +
                           " has the wrong endpoints");
    }
  LawReport laws = check_laws();
  if (!laws.pass)
    throw NotACategory(laws.violations.front().law + " at " + laws.violations.front().witness);
}

LawReport FinCategory::check_laws() const {
  LawReport rep;
  for (std::uint32_t f = 0; f < morphisms.size(); ++f) {
    rep.count("cat-unit", 2);
    if (comp(f, identities[morphisms[f].dom]) != f) rep.add("cat-unit", morphisms[f].name + " o id");
    if (comp(identities[morphisms[f].cod], f) != f) rep.add("cat-unit", "id o " + morphisms[f].name);
  }
  for (std::uint32_t f = 0; f < morphisms.size(); ++f)
    for (std::uint32_t g = 0; g < morphisms.size(); ++g) {
      if (morphisms[g].dom != morphisms[f].cod) continue;
      for (std::uint32_t h = 0; h < morphisms.size(); ++h) {
        if (morphisms[h].dom != morphisms[g].cod) continue;
        rep.count("cat-assoc");
        if (comp(h, comp(g, f)) != comp(comp(h, g), f))
          rep.add("cat-assoc", morphisms[h].name + "," + morphisms[g].name + "," + morphisms[f].name);
      }
    }
  rep.pass = rep.violations.empty();
  return rep;
}

FinCategory discrete_category(std::uint32_t n) {
  FinCategory c;
  for (std::uint32_t i = 0; i < n; ++i) {
    c.objects.push_back("x" + std::to_string(i));
    c.morphisms.push_back({"id" + std::to_string(i), i, i});
    c.identities.push_back(i);
    c.compose[FinCategory::key(i, i)] = i;
  }
  return c;
}

FinCategory arrow_category() {
  FinCategory c;
  c.objects = {"0", "1"};
  c.morphisms = {{"id0", 0, 0}, {"id1", 1, 1}, {"u", 0, 1}};
  c.identities = {0, 1};
  c.compose[FinCategory::key(0, 0)] = 0;
  c.compose[FinCategory::key(1, 1)] = 1;
  c.compose[FinCategory::key(2, 0)] = 2;
  c.compose[FinCategory::key(1, 2)] = 2;
  return c;
}

FinCategory monoid_category(const std::vector<std::string>& elems,
                            const std::vector<std::vector<std::uint32_t>>& table,
                            std::uint32_t unit) {
  FinCategory c;
  c.objects = {"*"};
  for (std::uint32_t i = 0; i < elems.size(); ++i) c.morphisms.push_back({elems[i], 0, 0});
  c.identities = {unit};
  for (std::uint32_t g = 0; g < elems.size(); ++g)
    for (std::uint32_t f = 0; f < elems.size(); ++f)
      c.compose[FinCategory::key(g, f)] = table[g][f];
  return c;
}

FinCategory chain_poset(std::uint32_t n) {
  FinCategory c;
  for (std::uint32_t i = 0; i < n; ++i) c.objects.push_back(std::to_string(i));
  std::vector<std::vector<std::uint32_t>> leq(n, std::vector<std::uint32_t>(n, 0));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i; j < n; ++j) {
      leq[i][j] = static_cast<std::uint32_t>(c.morphisms.size());
      c.morphisms.push_back({"le_" + std::to_string(i) + "_" + std::to_string(j), i, j});
    }
  for (std::uint32_t i = 0; i < n; ++i) c.identities.push_back(leq[i][i]);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i; j < n; ++j)
      for (std::uint32_t k = j; k < n; ++k)
        c.compose[FinCategory::key(leq[j][k], leq[i][j])] = leq[i][k];
  return c;
}

FinCategory parallel_pair_category() {
  FinCategory c;
  c.objects = {"a", "b"};
  c.morphisms = {{"ida", 0, 0}, {"idb", 1, 1}, {"s", 0, 1}, {"t", 0, 1}};
  c.identities = {0, 1};
  c.compose[FinCategory::key(0, 0)] = 0;
  c.compose[FinCategory::key(1, 1)] = 1;
  c.compose[FinCategory::key(2, 0)] = 2;
  c.compose[FinCategory::key(1, 2)] = 2;
  c.compose[FinCategory::key(3, 0)] = 3;
  c.compose[FinCategory::key(1, 3)] = 3;
  return c;
}

void FinFunctor::check(const FinCategory& from, const FinCategory& to) const {
  if (obj_map.size() != from.objects.size()) throw NotAFunctor("object map has the wrong size");
  if (mor_map.size() != from.morphisms.size()) throw NotAFunctor("morphism map has the wrong size");
  for (auto o : obj_map)
    if (o >= to.objects.size()) throw NotAFunctor("object map value out of range");
  for (auto m : mor_map)
    if (m >= to.morphisms.size()) throw NotAFunctor("morphism map value out of range");
  LawReport laws = check_laws(from, to);
  if (!laws.pass)
    throw NotAFunctor(laws.violations.front().law + " at " + laws.violations.front().witness);
}

LawReport FinFunctor::check_laws(const FinCategory& from, const FinCategory& to) const {
  LawReport rep;
  for (std::uint32_t f = 0; f < from.morphisms.size(); ++f) {
    rep.count("functor-endpoints");
    const auto& m = from.morphisms[f];
    const auto& fm = to.morphisms[mor_map[f]];
    if (fm.dom != obj_map[m.dom] || fm.cod != obj_map[m.cod])
      rep.add("functor-endpoints", m.name);
  }
  for (std::uint32_t a = 0; a < from.objects.size(); ++a) {
    rep.count("functor-identities");
    if (mor_map[from.identities[a]] != to.identities[obj_map[a]])
      rep.add("functor-identities", from.objects[a]);
  }
  for (std::uint32_t f = 0; f < from.morphisms.size(); ++f)
    for (std::uint32_t g = 0; g < from.morphisms.size(); ++g) {
      if (from.morphisms[g].dom != from.morphisms[f].cod) continue;
      rep.count("functor-composition");
      // The images may fail to be composable at all; that is a violation,
      // not a lookup error.
      if (to.morphisms[mor_map[g]].dom != to.morphisms[mor_map[f]].cod ||
          mor_map[from.comp(g, f)] != to.comp(mor_map[g], mor_map[f]))
        rep.add("functor-composition", from.morphisms[g].name + " o " + from.morphisms[f].name);
    }
  rep.pass = rep.violations.empty();
  return rep;
}

FinFunctor identity_functor(const FinCategory& c) {
  FinFunctor F;
  for (std::uint32_t i = 0; i < c.objects.size(); ++i) F.obj_map.push_back(i);
  for (std::uint32_t i = 0; i < c.morphisms.size(); ++i) F.mor_map.push_back(i);
  return F;
}

void Profunctor::check(const FinCategory& c, const FinCategory& d) const {
  for (const auto& e : elems)
    if (e.c >= c.objects.size() || e.d >= d.objects.size())
      throw NotAProfunctor("element '" + e.name + "' positioned out of range");
  for (std::uint32_t u = 0; u < c.morphisms.size(); ++u)
    for (std::uint32_t e = 0; e < elems.size(); ++e) {
      if (c.morphisms[u].cod != elems[e].c) continue;
      auto it = act_c.find(key(u, e));
      if (it == act_c.end())
        throw NotAProfunctor("missing C-action " + elems[e].name + "." + c.morphisms[u].name);
      if (it->second >= elems.size()) throw NotAProfunctor("C-action value out of range");
      const auto& r = elems[it->second];
      if (r.c != c.morphisms[u].dom || r.d != elems[e].d)
        throw NotAProfunctor("C-action lands at the wrong position");
    }
  for (std::uint32_t w = 0; w < d.morphisms.size(); ++w)
    for (std::uint32_t e = 0; e < elems.size(); ++e) {
      if (d.morphisms[w].dom != elems[e].d) continue;
      auto it = act_d.find(key(w, e));
      if (it == act_d.end())
        throw NotAProfunctor("missing D-action " + d.morphisms[w].name + "." + elems[e].name);
      if (it->second >= elems.size()) throw NotAProfunctor("D-action value out of range");
      const auto& r = elems[it->second];
      if (r.c != elems[e].c || r.d != d.morphisms[w].cod)
        throw NotAProfunctor("D-action lands at the wrong position");
    }
  LawReport laws = check_laws(c, d);
  if (!laws.pass)
    throw NotAProfunctor(laws.violations.front().law + " at " + laws.violations.front().witness);
}

LawReport Profunctor::check_laws(const FinCategory& c, const FinCategory& d) const {
  LawReport rep;
  auto actc = [&](std::uint32_t u, std::uint32_t e) { return act_c.at(key(u, e)); };
  auto actd = [&](std::uint32_t w, std::uint32_t e) { return act_d.at(key(w, e)); };

  for (std::uint32_t e = 0; e < elems.size(); ++e) {
    rep.count("prof-units", 2);
    if (actc(c.identities[elems[e].c], e) != e) rep.add("prof-units", elems[e].name + " . id");
    if (actd(d.identities[elems[e].d], e) != e) rep.add("prof-units", "id . " + elems[e].name);
  }
  for (std::uint32_t e = 0; e < elems.size(); ++e) {
    for (std::uint32_t u = 0; u < c.morphisms.size(); ++u) {
      if (c.morphisms[u].cod != elems[e].c) continue;
      for (std::uint32_t u2 = 0; u2 < c.morphisms.size(); ++u2) {
        if (c.morphisms[u2].cod != c.morphisms[u].dom) continue;
        rep.count("prof-c-functorial");
        if (actc(u2, actc(u, e)) != actc(c.comp(u, u2), e))
          rep.add("prof-c-functorial", elems[e].name + " . " + c.morphisms[u].name + " . " +
                                           c.morphisms[u2].name);
      }
      for (std::uint32_t w = 0; w < d.morphisms.size(); ++w) {
        if (d.morphisms[w].dom != elems[e].d) continue;
        rep.count("prof-commute");
        if (actd(w, actc(u, e)) != actc(u, actd(w, e)))
          rep.add("prof-commute", d.morphisms[w].name + " . " + elems[e].name + " . " +
                                      c.morphisms[u].name);
      }
    }
    for (std::uint32_t w = 0; w < d.morphisms.size(); ++w) {
      if (d.morphisms[w].dom != elems[e].d) continue;
      for (std::uint32_t w2 = 0; w2 < d.morphisms.size(); ++w2) {
        if (d.morphisms[w2].dom != d.morphisms[w].cod) continue;
        rep.count("prof-d-functorial");
        if (actd(w2, actd(w, e)) != actd(d.comp(w2, w), e))
          rep.add("prof-d-functorial", d.morphisms[w2].name + " . " + d.morphisms[w].name + " . " +
                                           elems[e].name);
      }
    }
  }
  rep.pass = rep.violations.empty();
  return rep;
}

Profunctor hom_profunctor(const FinCategory& c) {
  Profunctor p;
  for (const auto& m : c.morphisms) p.elems.push_back({m.name, m.dom, m.cod});
  for (std::uint32_t u = 0; u < c.morphisms.size(); ++u)
    for (std::uint32_t e = 0; e < c.morphisms.size(); ++e) {
      if (c.morphisms[u].cod == c.morphisms[e].dom) p.act_c[Profunctor::key(u, e)] = c.comp(e, u);
      if (c.morphisms[u].dom == c.morphisms[e].cod) p.act_d[Profunctor::key(u, e)] = c.comp(u, e);
    }
  return p;
}

}  // namespace fcmt
