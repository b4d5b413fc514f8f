#include <doctest.h>

#include "fcmt/bim.hpp"
#include "fcmt/compose.hpp"
#include "fcmt/enrich.hpp"
#include "fcmt/law_check.hpp"
#include "fcmt/restrict.hpp"
#include "fcmt/span_bridge.hpp"
#include "support/fixtures.hpp"

using namespace fcmt;
using namespace fcmt::testing;

namespace {

FinCategory z3_category() {
  return monoid_category({"g0", "g1", "g2"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0);
}

}  // namespace

TEST_CASE("the arrow category is a Span monad") {
  auto enc = cat_to_monad(arrow_category());
  LawReport rep = check_monad(*enc.oracle, enc.monad);
  CHECK(rep.pass);
  CHECK(rep.checked.at("monad-assoc") == 1);
}

TEST_CASE("a remapped multiplication entry breaks the monad laws") {
  auto enc = cat_to_monad(z3_category());
  const SpanFcOracle& V = *enc.oracle;
  auto table = V.cell_table(enc.monad.mult);
  REQUIRE(table.size() == 9);
  // Remap one composable pair to a different group element.
  auto mutated = table;
  mutated[4] = (mutated[4] + 1) % 3;
  Monad bad = enc.monad;
  bad.mult = V.make_cell(enc.monad.mult.frame, mutated);
  LawReport rep = check_monad(V, bad);
  CHECK_FALSE(rep.pass);
  CHECK(!rep.violations.front().witness.empty());
}

TEST_CASE("the discrete category gives the identity-span monad") {
  auto enc = cat_to_monad(discrete_category(3));
  const SpanUniverse& u = enc.oracle->universe();
  const SpanData& hom = u.spans[enc.monad.endo.index];
  CHECK(hom.apex.size() == 3);
  CHECK(hom.leg_l == hom.leg_r);
  CHECK(check_monad(*enc.oracle, enc.monad).pass);
}

TEST_CASE("the hom profunctor is a bimodule over its category") {
  FinCategory c = arrow_category();
  auto enc = profunctor_to_bimodule(c, c, hom_profunctor(c));
  CHECK(check_monad(*enc.oracle, enc.src).pass);
  CHECK(check_bimodule(*enc.oracle, enc.bimodule).pass);
}

TEST_CASE("a corrupted action entry breaks the bimodule laws") {
  FinCategory c = z3_category();
  auto enc = profunctor_to_bimodule(c, c, hom_profunctor(c));
  const SpanFcOracle& V = *enc.oracle;
  auto table = V.cell_table(enc.bimodule.act_src);
  REQUIRE(table.size() == 9);
  auto mutated = table;
  mutated[2] = (mutated[2] + 1) % 3;
  Bimodule bad = enc.bimodule;
  bad.act_src = V.make_cell(enc.bimodule.act_src.frame, mutated);
  CHECK_FALSE(check_bimodule(V, bad).pass);
}

TEST_CASE("over the identity monad, trivial actions must be projections") {
  // Identity monad on {x}; module span with two parallel elements.
  SpanSceneBuilder b;
  std::uint32_t c = b.add_category("C", discrete_category(1));
  b.add_span("M", c, c, {"e1", "e2"}, {0, 0}, {0, 0});
  auto scene = b.build();
  const SpanFcOracle& V = *scene.oracle;
  const Monad& idm = scene.monads[0];

  Bimodule shape;
  shape.carrier = *V.horizontal_named("M");
  shape.src = shape.tgt = idm;

  Frame sf = bimodule_act_src_frame(V, shape);
  Frame tf = bimodule_act_tgt_frame(V, shape);

  Bimodule good = shape;
  good.act_src = V.make_cell(sf, {0, 1});  // projection
  good.act_tgt = V.make_cell(tf, {0, 1});
  CHECK(check_bimodule(V, good).pass);

  Bimodule swapped = shape;
  swapped.act_src = V.make_cell(sf, {1, 0});  // swap is a valid cell but no action
  swapped.act_tgt = V.make_cell(tf, {0, 1});
  CHECK_FALSE(check_bimodule(V, swapped).pass);
}

TEST_CASE("identity monad maps pass and functors convert to monad maps") {
  FinCategory c = arrow_category();
  auto enc = functor_to_monad_map(c, c, identity_functor(c));
  CHECK(check_monad_map(*enc.oracle, enc.map, enc.src, enc.tgt).pass);
}

TEST_CASE("a non-functorial morphism map fails the monad map checks") {
  // C = D = Z/2 as a one-object category; send the identity to g.
  FinCategory c = monoid_category({"e", "g"}, {{0, 1}, {1, 0}}, 0);
  SpanSceneBuilder b;
  std::uint32_t i = b.add_category("C", c);
  std::uint32_t j = b.add_category("D", c);
  b.add_all_object_functions(i, j);
  auto scene = b.build();
  const SpanFcOracle& V = *scene.oracle;

  MonadMap bad;
  bad.vert = *V.vertical_by_table(0, 1, {0});
  bad.cell = V.make_cell(monad_map_frame(scene.monads[i].endo, scene.monads[j].endo, bad.vert),
                         {1, 0});  // e -> g, g -> e: breaks unit preservation
  LawReport rep = check_monad_map(V, bad, scene.monads[i], scene.monads[j]);
  CHECK_FALSE(rep.pass);
  bool unit_broken = false;
  for (const auto& v : rep.violations) unit_broken |= v.law == "monad-map-unit";
  CHECK(unit_broken);
}

TEST_CASE("equivariant cells between hom profunctors are exactly natural families") {
  // C with two objects and a non-identity arrow; M = N = hom profunctor.
  FinCategory c = arrow_category();
  auto enc = profunctor_to_bimodule(c, c, hom_profunctor(c));
  const SpanFcOracle& V = *enc.oracle;

  BimCellContext ctx;
  ctx.source = {enc.bimodule};
  ctx.target = enc.bimodule;
  ctx.left = MonadMap{V.id_vert(enc.src.carrier), V.id_cell(enc.src.endo)};
  ctx.right = MonadMap{V.id_vert(enc.tgt.carrier), V.id_cell(enc.tgt.endo)};

  Frame uf;
  uf.source = Path::of({enc.bimodule.carrier});
  uf.left = V.id_vert(enc.src.carrier);
  uf.right = V.id_vert(enc.tgt.carrier);
  uf.target = enc.bimodule.carrier;

  // Direct naturality oracle over the action tables.
  Profunctor p = hom_profunctor(c);
  auto natural = [&](const std::vector<std::uint32_t>& table) {
    for (std::uint32_t e = 0; e < p.elems.size(); ++e) {
      for (std::uint32_t u = 0; u < c.morphisms.size(); ++u) {
        if (c.morphisms[u].cod == p.elems[e].c)
          if (table[p.act_c.at(Profunctor::key(u, e))] !=
              p.act_c.at(Profunctor::key(u, table[e])))
            return false;
        if (c.morphisms[u].dom == p.elems[e].d)
          if (table[p.act_d.at(Profunctor::key(u, e))] !=
              p.act_d.at(Profunctor::key(u, table[e])))
            return false;
      }
    }
    return true;
  };

  std::size_t expected = 0;
  std::vector<std::vector<std::uint32_t>> all =
      brute_span_cells(V.universe(), {enc.bimodule.carrier.index}, 0,
                       V.vertical_table(uf.left), V.vertical_table(uf.right),
                       enc.bimodule.carrier.index);
  for (const auto& t : all) expected += natural(t) ? 1 : 0;

  std::size_t got = 0;
  for (const TwoCell& cell : V.cells(uf))
    if (check_bim_cell(V, cell, ctx).pass) {
      ++got;
      CHECK(natural(V.cell_table(cell)));
    }
  CHECK(got == expected);
  CHECK(got >= 1);  // at least the identity family
}

TEST_CASE("identity cells on bimodule carriers are equivariant") {
  FinCategory c = arrow_category();
  auto enc = profunctor_to_bimodule(c, c, hom_profunctor(c));
  const SpanFcOracle& V = *enc.oracle;
  BimCellContext ctx;
  ctx.source = {enc.bimodule};
  ctx.target = enc.bimodule;
  ctx.left = MonadMap{V.id_vert(enc.src.carrier), V.id_cell(enc.src.endo)};
  ctx.right = MonadMap{V.id_vert(enc.tgt.carrier), V.id_cell(enc.tgt.endo)};
  CHECK(check_bim_cell(V, V.id_cell(enc.bimodule.carrier), ctx).pass);
}

TEST_CASE("the whiskered unit is an equivariant nullary cell") {
  // F: 1 -> Z/2 picks the object; theta = eta whiskered by F.
  FinCategory one = discrete_category(1);
  FinCategory z2 = monoid_category({"e", "g"}, {{0, 1}, {1, 0}}, 0);
  FinFunctor F;
  F.obj_map = {0};
  F.mor_map = {0};
  auto enc = functor_to_monad_map(one, z2, F);
  const SpanFcOracle& V = *enc.oracle;

  TwoCell theta = compose_cells(V, enc.tgt.unit, std::vector<TwoCell>{},
                                std::vector<VertId>{enc.map.vert});

  Bimodule regular;
  regular.carrier = enc.tgt.endo;
  regular.src = regular.tgt = enc.tgt;
  regular.act_src = enc.tgt.mult;
  regular.act_tgt = enc.tgt.mult;
  REQUIRE(check_bimodule(V, regular).pass);

  BimCellContext ctx;
  ctx.anchor = enc.src;
  ctx.target = regular;
  ctx.left = ctx.right = enc.map;
  CHECK(check_bim_cell(V, theta, ctx).pass);
}

TEST_CASE("Bim of the terminal fc-multicategory is terminal") {
  auto V = span_fc(terminal_universe());
  auto B = bim_oracle(V);
  CHECK(B->monads().size() == 1);
  CHECK(B->monad_maps().size() == 1);
  CHECK(B->bimodule_entries().size() == 1);
  HorId m = B->horizontals(ObjectId{0}, ObjectId{0}).at(0);
  for (std::size_t n = 0; n <= 2; ++n) {
    Frame f;
    f.source = n ? Path::of(std::vector<HorId>(n, m)) : Path::empty_at(ObjectId{0});
    f.left = f.right = B->id_vert(ObjectId{0});
    f.target = m;
    CHECK(B->cells(f).size() == 1);
  }
}

TEST_CASE("Bim oracles pass the generic law checker at (2,2)") {
  SUBCASE("over a small span universe") {
    FinSet base{"S", {"1", "2", "3"}};
    auto sub = parbjn_from_subsets(base, {{"C1", {"1", "2"}}, {"C2", {"2", "3"}}});
    auto B = bim_oracle(sub.oracle);
    CHECK(check_fc_laws(*B, {2, 2, 10000, false}).pass);
  }
  SUBCASE("over the monoidal poset v2") {
    auto B = bim_oracle(monoidal_fc(v2_poset_presentation()));
    CHECK(B->monads().size() == 1);
    CHECK(check_fc_laws(*B, {2, 2, 10000, false}).pass);
  }
}

TEST_CASE("Bim monads over a monoidal base are exactly its monoid objects") {
  auto V = monoidal_fc(v2_poset_presentation());
  auto B = bim_oracle(V);

  // Independent enumeration: an object M with morphisms mu: M(x)M -> M and
  // eta: I -> M satisfying the monoid laws, straight off the tables.
  const auto& p = V->presentation();
  std::size_t direct = 0;
  for (std::uint32_t M = 0; M < p.objects.size(); ++M) {
    std::uint32_t mm = p.tensor_obj[M][M];
    for (std::uint32_t mu = 0; mu < p.morphisms.size(); ++mu) {
      if (p.morphisms[mu].dom != mm || p.morphisms[mu].cod != M) continue;
      for (std::uint32_t eta = 0; eta < p.morphisms.size(); ++eta) {
        if (p.morphisms[eta].dom != p.unit || p.morphisms[eta].cod != M) continue;
        auto K = StrictMonoidalPresentation::key;
        auto comp = [&](std::uint32_t g, std::uint32_t f) { return p.compose.at(K(g, f)); };
        auto tens = [&](std::uint32_t f, std::uint32_t g) { return p.tensor_mor.at(K(f, g)); };
        std::uint32_t idM = p.identities[M];
        bool assoc = comp(mu, tens(mu, idM)) == comp(mu, tens(idM, mu));
        bool unit_l = comp(mu, tens(idM, eta)) == idM;
        bool unit_r = comp(mu, tens(eta, idM)) == idM;
        if (assoc && unit_l && unit_r) ++direct;
      }
    }
  }
  CHECK(B->monads().size() == direct);
  CHECK(direct == 1);
}

TEST_CASE("restricting a Bim oracle to identity verticals keeps its cells") {
  FinSet base{"S", {"1", "2", "3"}};
  auto sub = parbjn_from_subsets(base, {{"C1", {"1", "2"}}, {"C2", {"2", "3"}}});
  auto B = bim_oracle(sub.oracle);
  auto R = restrict_verticals_to_identities(B);

  for (ObjectId a : B->objects())
    for (ObjectId b : B->objects())
      for (HorId m : B->horizontals(a, b)) {
        Frame f;
        f.source = Path::of({m});
        f.left = B->id_vert(a);
        f.right = B->id_vert(b);
        f.target = m;
        CHECK(R->cells(f) == B->cells(f));
        if (a != b) CHECK(R->verticals(a, b).empty());
      }
  CHECK(check_fc_laws(*R, {2, 2, 10000, false}).pass);
}

TEST_CASE("category to monad round trips on the nose") {
  for (const FinCategory& c :
       {arrow_category(), monoid_category({"e", "g"}, {{0, 1}, {1, 0}}, 0),
        discrete_category(3), chain_poset(3), parallel_pair_category()}) {
    auto enc = cat_to_monad(c);
    FinCategory back = monad_to_cat(*enc.oracle, enc.monad);
    CHECK(back.objects == c.objects);
    REQUIRE(back.morphisms.size() == c.morphisms.size());
    for (std::size_t i = 0; i < c.morphisms.size(); ++i) {
      CHECK(back.morphisms[i].name == c.morphisms[i].name);
      CHECK(back.morphisms[i].dom == c.morphisms[i].dom);
      CHECK(back.morphisms[i].cod == c.morphisms[i].cod);
    }
    CHECK(back.identities == c.identities);
    for (const auto& [k, v] : c.compose) CHECK(back.compose.at(k) == v);
  }
}

TEST_CASE("monad_to_cat rejects non-monads") {
  auto enc = cat_to_monad(z3_category());
  const SpanFcOracle& V = *enc.oracle;
  auto table = V.cell_table(enc.monad.mult);
  auto mutated = table;
  mutated[0] = (mutated[0] + 1) % 3;
  Monad bad = enc.monad;
  bad.mult = V.make_cell(enc.monad.mult.frame, mutated);
  CHECK_THROWS_AS(monad_to_cat(V, bad), NotAMonad);
}

TEST_CASE("profunctors round trip through bimodules") {
  FinCategory c = arrow_category();
  Profunctor p = hom_profunctor(c);
  auto enc = profunctor_to_bimodule(c, c, p);
  Profunctor back = bimodule_to_profunctor(*enc.oracle, enc.bimodule);
  REQUIRE(back.elems.size() == p.elems.size());
  CHECK(back.act_c == p.act_c);
  CHECK(back.act_d == p.act_d);
}

TEST_CASE("Bim over a one-category universe matches direct enumeration") {
  // Category structures over the arrow category's dom/cod data are unique,
  // so Bim must find exactly one monad on that carrier.
  auto enc = cat_to_monad(arrow_category());
  auto B = bim_oracle(enc.oracle);
  std::size_t on_carrier = 0;
  for (const Monad& m : B->monads())
    if (m.endo == enc.monad.endo) ++on_carrier;
  CHECK(on_carrier == 1);
  CHECK(B->find_monad(enc.monad).has_value());
}
