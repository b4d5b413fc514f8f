#include <doctest.h>

#include <random>

#include "fcmt/enrich.hpp"
#include "fcmt/law_check.hpp"
#include "fcmt/span_bridge.hpp"

using namespace fcmt;

namespace {

bool is_preorder(const std::vector<std::vector<bool>>& r) {
  const std::size_t n = r.size();
  for (std::size_t a = 0; a < n; ++a)
    if (!r[a][a]) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (r[a][b] && r[b][c] && !r[a][c]) return false;
  return true;
}

bool is_monoid(const std::vector<std::uint32_t>& t, std::uint32_t e, std::uint32_t n) {
  auto mul = [&](std::uint32_t x, std::uint32_t y) { return t[x * n + y]; };
  for (std::uint32_t x = 0; x < n; ++x)
    if (mul(e, x) != x || mul(x, e) != x) return false;
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) return false;
  return true;
}

std::vector<FinSet> random_family(std::mt19937& rng, const FinSet& base, std::size_t count) {
  std::vector<FinSet> out;
  for (std::size_t i = 0; i < count; ++i) {
    FinSet c;
    c.name = "C" + std::to_string(i);
    for (const auto& e : base.elems)
      if (rng() % 2) c.elems.push_back(e);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

TEST_CASE("the three-element preorder over v2 passes; broken reflexivity cannot build") {
  auto V = monoidal_fc(v2_poset_presentation());
  std::vector<std::vector<bool>> r{{true, true}, {false, true}};  // p<=p, p<=q, q<=q
  auto C = relation_enriched(*V, r);
  REQUIRE(C.has_value());
  CHECK(check_enriched(*V, *C).pass);

  r[0][0] = false;  // drop reflexivity at p
  CHECK_FALSE(relation_enriched(*V, r).has_value());
}

TEST_CASE("relations over v2 build and pass exactly when they are preorders") {
  auto V = monoidal_fc(v2_poset_presentation());
  for (std::size_t n = 1; n <= 2; ++n) {
    const std::uint32_t cells = static_cast<std::uint32_t>(n * n);
    for (std::uint32_t bits = 0; bits < (1u << cells); ++bits) {
      std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
      for (std::uint32_t i = 0; i < cells; ++i) r[i / n][i % n] = (bits >> i) & 1;
      auto C = relation_enriched(*V, r);
      bool pass = C.has_value() && check_enriched(*V, *C).pass;
      CHECK(pass == is_preorder(r));
    }
  }
}

TEST_CASE("one-object tables over the endomorphism multicategory are monoids exactly") {
  auto V = endo_multicat(FinSet{"S", {"0", "1"}});
  for (std::uint32_t e = 0; e < 2; ++e)
    for (std::uint32_t bits = 0; bits < 16; ++bits) {
      std::vector<std::uint32_t> table(4);
      for (std::uint32_t i = 0; i < 4; ++i) table[i] = (bits >> i) & 1;
      EnrichedCategory C = table_enriched(*V, table, e);
      CHECK(check_enriched(*V, C).pass == is_monoid(table, e, 2));
    }
}

TEST_CASE("the subset family from the worked example") {
  FinSet base{"S", {"1", "2", "3"}};
  auto sub = parbjn_from_subsets(base, {{"C1", {"1", "2"}}, {"C2", {"2", "3"}}});
  const SpanFcOracle& V = *sub.oracle;
  const EnrichedCategory& C = sub.category;

  const SpanUniverse& u = V.universe();
  // hom(C1, C2) has apex {2}.
  const SpanData& h12 = u.spans[C.hom(0, 1).index];
  CHECK(h12.apex == std::vector<std::string>{"2"});
  // comp(C1, C2, C1) targets hom(C1, C1) whose apex is all of C1.
  const SpanData& h11 = u.spans[C.hom(0, 0).index];
  CHECK(h11.apex == std::vector<std::string>{"1", "2"});
  CHECK(check_enriched(V, C).pass);
}

TEST_CASE("a disjoint family has empty off-diagonal homs and still passes") {
  FinSet base{"S", {"1", "2", "3", "4"}};
  auto sub = parbjn_from_subsets(base, {{"C1", {"1", "2"}}, {"C2", {"3", "4"}}});
  const SpanUniverse& u = sub.oracle->universe();
  CHECK(u.spans[sub.category.hom(0, 1).index].apex.empty());
  CHECK(u.spans[sub.category.hom(1, 0).index].apex.empty());
  CHECK(check_enriched(*sub.oracle, sub.category).pass);
}

TEST_CASE("random subset families always pass") {
  std::mt19937 rng(911);
  FinSet base{"S", {"1", "2", "3", "4", "5", "6"}};
  for (int iter = 0; iter < 12; ++iter) {
    auto family = random_family(rng, base, 1 + iter % 4);
    auto sub = parbjn_from_subsets(base, family);
    CHECK(check_enriched(*sub.oracle, sub.category).pass);
  }
}

TEST_CASE("subsets must come from the base set") {
  FinSet base{"S", {"1", "2"}};
  CHECK_THROWS_AS(parbjn_from_subsets(base, {{"C1", {"1", "7"}}}), NotASubset);
}

TEST_CASE("the classical adapter reproduces the direct v2 construction cell for cell") {
  auto V = monoidal_fc(v2_poset_presentation());
  std::vector<std::vector<bool>> r{{true, true}, {false, true}};
  auto direct = relation_enriched(*V, r);
  REQUIRE(direct.has_value());

  ClassicalEnrichedData data;
  data.labels = {"p", "q"};
  auto name = [&](bool b) { return std::string(b ? "1" : "0"); };
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) data.hom_objects.push_back(name(r[a][b]));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c) {
        bool dom = r[a][b] && r[b][c];
        data.comp_morphisms.push_back(dom ? (r[a][c] ? "m11" : "m01")
                                          : (r[a][c] ? "m01" : "m00"));
      }
  for (std::size_t a = 0; a < 2; ++a) data.id_morphisms.push_back("m11");

  EnrichedCategory C = classical_enriched_adapter(*V, data);
  CHECK(check_enriched(*V, C).pass);
  REQUIRE(C.comp.size() == direct->comp.size());
  for (std::size_t i = 0; i < C.comp.size(); ++i) CHECK(C.comp[i] == direct->comp[i]);
  for (std::size_t i = 0; i < C.ids.size(); ++i) CHECK(C.ids[i] == direct->ids[i]);
}

TEST_CASE("the one-object adapter over the Z/2 presentation") {
  // Z/2 as a one-object monoidal presentation: objects {I}, morphisms {z, o}
  // with composition and tensor both addition mod 2.
  StrictMonoidalPresentation m;
  m.objects = {"I"};
  m.unit = 0;
  m.tensor_obj = {{0}};
  m.morphisms = {{"z", 0, 0}, {"o", 0, 0}};
  m.identities = {0};
  auto K = StrictMonoidalPresentation::key;
  m.compose[K(0, 0)] = 0;
  m.compose[K(0, 1)] = 1;
  m.compose[K(1, 0)] = 1;
  m.compose[K(1, 1)] = 0;
  m.tensor_mor = m.compose;
  auto V = monoidal_fc(m);

  for (std::string comp : {"z", "o"})
    for (std::string id : {"z", "o"}) {
      ClassicalEnrichedData data;
      data.labels = {"*"};
      data.hom_objects = {"I"};
      data.comp_morphisms = {comp};
      data.id_morphisms = {id};
      EnrichedCategory C = classical_enriched_adapter(*V, data);
      // Units demand comp + id = z; associativity is automatic here.
      bool expect = comp == id;
      CHECK(check_enriched(*V, C).pass == expect);
    }
}

TEST_CASE("an empty label set is vacuously enriched") {
  auto V = monoidal_fc(v2_poset_presentation());
  ClassicalEnrichedData data;
  EnrichedCategory C = classical_enriched_adapter(*V, data);
  CHECK(check_enriched(*V, C).pass);
  CHECK(C.size() == 0);
}

TEST_CASE("enrich_to_bim over the subset construction produces identity-like monads") {
  FinSet base{"S", {"1", "2", "3"}};
  auto sub = parbjn_from_subsets(base, {{"C1", {"1", "2"}}, {"C2", {"2", "3"}}});
  auto B = bim_oracle(sub.oracle);
  EnrichedCategory over_bim = enrich_to_bim(*B, sub.category);
  CHECK(check_enriched(*B, over_bim).pass);

  // Each end monad is the identity-on-C_i category.
  for (std::size_t a = 0; a < sub.category.size(); ++a) {
    Monad m = enriched_end_monad(sub.category, a);
    CHECK(check_monad(*sub.oracle, m).pass);
    FinCategory cat = monad_to_cat(*sub.oracle, m);
    CHECK(cat.morphisms.size() == cat.objects.size());  // identities only
    for (const auto& mor : cat.morphisms) CHECK(mor.dom == mor.cod);
  }
  for (std::size_t a = 0; a < sub.category.size(); ++a)
    for (std::size_t b = 0; b < sub.category.size(); ++b)
      CHECK(check_bimodule(*sub.oracle, enriched_hom_bimodule(sub.category, a, b)).pass);
}

TEST_CASE("enrich_to_bim turns a one-object table enrichment into a monoid object") {
  auto V = endo_multicat(FinSet{"S", {"0", "1"}});
  // The or-monoid on {0,1}.
  EnrichedCategory C = table_enriched(*V, {0, 1, 1, 1}, 0);
  REQUIRE(check_enriched(*V, C).pass);
  auto B = bim_oracle(V);
  EnrichedCategory over_bim = enrich_to_bim(*B, C);
  CHECK(check_enriched(*B, over_bim).pass);
  Monad m = enriched_end_monad(C, 0);
  CHECK(check_monad(*V, m).pass);
  CHECK(B->find_monad(m).has_value());
}

TEST_CASE("enrich_to_bim rejects unlawful input") {
  auto V = endo_multicat(FinSet{"S", {"0", "1"}});
  EnrichedCategory C = table_enriched(*V, {0, 1, 1, 0}, 1);  // xor with wrong unit
  REQUIRE_FALSE(check_enriched(*V, C).pass);
  auto B = bim_oracle(V);
  CHECK_THROWS_AS(enrich_to_bim(*B, C), SourceInvalid);
}

TEST_CASE("enrich_to_bim of the empty category is empty and passes") {
  auto V = span_fc(SpanUniverse{});
  EnrichedCategory C;
  REQUIRE(check_enriched(*V, C).pass);
  auto B = bim_oracle(V);
  EnrichedCategory over_bim = enrich_to_bim(*B, C);
  CHECK(over_bim.size() == 0);
  CHECK(check_enriched(*B, over_bim).pass);
}
