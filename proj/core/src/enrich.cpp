#include "fcmt/enrich.hpp"

#include <algorithm>
#include <unordered_set>

#include "fcmt/compose.hpp"
#include "fcmt/errors.hpp"

namespace fcmt {

namespace {

TwoCell compose_derived(const FcOracle& V, const TwoCell& theta,
                        const std::vector<TwoCell>& children) {
  std::vector<VertId> bd;
  bd.push_back(children.front().frame.left);
  for (const auto& c : children) bd.push_back(c.frame.right);
  return compose_cells(V, theta, children, bd);
}

Frame comp_frame(const FcOracle& V, const EnrichedCategory& C, std::size_t a, std::size_t b,
                 std::size_t c) {
  Frame f;
  f.source = Path::of({C.hom(a, b), C.hom(b, c)});
  f.left = V.id_vert(C.ends[a]);
  f.right = V.id_vert(C.ends[c]);
  f.target = C.hom(a, c);
  return f;
}

Frame id_frame(const FcOracle& V, const EnrichedCategory& C, std::size_t a) {
  Frame f;
  f.source = Path::empty_at(C.ends[a]);
  f.left = f.right = V.id_vert(C.ends[a]);
  f.target = C.hom(a, a);
  return f;
}

}  // namespace

LawReport check_enriched(const FcOracle& V, const EnrichedCategory& C) {
  const std::size_t n = C.size();
  if (C.ends.size() != n || C.homs.size() != n * n || C.comp.size() != n * n * n ||
      C.ids.size() != n)
    throw FrameError("enriched category tables have inconsistent sizes");

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (C.hom(a, b).src != C.ends[a] || C.hom(a, b).dst != C.ends[b])
        throw FrameError("hom(" + C.labels[a] + "," + C.labels[b] +
                         ") does not run between the ends");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (C.comp_at(a, b, c).frame != comp_frame(V, C, a, b, c))
          throw FrameError("comp(" + C.labels[a] + "," + C.labels[b] + "," + C.labels[c] +
                           ") has the wrong frame");
  for (std::size_t a = 0; a < n; ++a)
    if (C.id_at(a).frame != id_frame(V, C, a))
      throw FrameError("id(" + C.labels[a] + ") has the wrong frame");

  LawReport rep;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          TwoCell lhs = compose_derived(
              V, C.comp_at(a, c, d), {C.comp_at(a, b, c), id_cell(V, C.hom(c, d))});
          TwoCell rhs = compose_derived(
              V, C.comp_at(a, b, d), {id_cell(V, C.hom(a, b)), C.comp_at(b, c, d)});
          rep.count("enriched-assoc");
          if (lhs != rhs)
            rep.add("enriched-assoc", "(" + C.labels[a] + "," + C.labels[b] + "," + C.labels[c] +
                                          "," + C.labels[d] + "): " + V.describe_cell(lhs) +
                                          " != " + V.describe_cell(rhs));
        }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      TwoCell idm = id_cell(V, C.hom(a, b));
      TwoCell lhs = compose_derived(V, C.comp_at(a, a, b), {C.id_at(a), idm});
      rep.count("enriched-unit-left");
      if (lhs != idm)
        rep.add("enriched-unit-left",
                "(" + C.labels[a] + "," + C.labels[b] + "): got " + V.describe_cell(lhs));
      TwoCell rhs = compose_derived(V, C.comp_at(a, b, b), {idm, C.id_at(b)});
      rep.count("enriched-unit-right");
      if (rhs != idm)
        rep.add("enriched-unit-right",
                "(" + C.labels[a] + "," + C.labels[b] + "): got " + V.describe_cell(rhs));
    }
  rep.pass = rep.violations.empty();
  return rep;
}

Monad enriched_end_monad(const EnrichedCategory& C, std::size_t a) {
  return Monad{C.ends[a], C.hom(a, a), C.comp_at(a, a, a), C.id_at(a)};
}

Bimodule enriched_hom_bimodule(const EnrichedCategory& C, std::size_t a, std::size_t b) {
  Bimodule bm;
  bm.carrier = C.hom(a, b);
  bm.src = enriched_end_monad(C, a);
  bm.tgt = enriched_end_monad(C, b);
  bm.act_src = C.comp_at(a, a, b);
  bm.act_tgt = C.comp_at(a, b, b);
  return bm;
}

SubsetEnrichment parbjn_from_subsets(const FinSet& base, const std::vector<FinSet>& family) {
  std::unordered_set<std::string> base_elems(base.elems.begin(), base.elems.end());
  for (const auto& c : family)
    for (const auto& e : c.elems)
      if (!base_elems.count(e))
        throw NotASubset("element '" + e + "' of '" + c.name + "' is not in '" + base.name + "'");

  const std::size_t n = family.size();
  SpanUniverse u;
  for (const auto& c : family) u.sets.push_back(c);

  auto member = [&](const FinSet& s, const std::string& e) {
    return s.find(e).has_value();
  };
  // hom(i,j) in row-major order; apex elements listed in base-set order.
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      SpanData sp;
      sp.name = "hom_" + family[i].name + "_" + family[j].name;
      sp.src = i;
      sp.dst = j;
      for (const auto& e : base.elems) {
        if (!member(family[i], e) || !member(family[j], e)) continue;
        sp.apex.push_back(e);
        sp.leg_l.push_back(*family[i].find(e));
        sp.leg_r.push_back(*family[j].find(e));
      }
      u.spans.push_back(std::move(sp));
    }
  u.partial_bijections_only = true;

  SubsetEnrichment out;
  out.oracle = span_fc(std::move(u));
  const SpanFcOracle& V = *out.oracle;
  const SpanUniverse& uu = V.universe();

  EnrichedCategory C;
  for (const auto& c : family) C.labels.push_back(c.name);
  for (std::uint32_t i = 0; i < n; ++i) C.ends.push_back(V.object(i));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      C.homs.push_back(V.horizontal(static_cast<std::uint32_t>(i * n + j)));

  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c) {
        Frame f = comp_frame(V, C, a, b, c);
        PathLimit L = V.limit_of(f.source);
        const SpanData& tgt = uu.spans[C.hom(a, c).index];
        const SpanData& ab = uu.spans[C.hom(a, b).index];
        std::vector<std::uint32_t> table;
        for (const auto& t : L.tuples) {
          // The matched pair is one element of the triple intersection.
          const std::string& e = ab.apex[t[0]];
          std::uint32_t k = 0;
          while (k < tgt.apex.size() && tgt.apex[k] != e) ++k;
          table.push_back(k);
        }
        C.comp.push_back(V.make_cell(f, table));
      }
  for (std::uint32_t a = 0; a < n; ++a) {
    Frame f = id_frame(V, C, a);
    const SpanData& tgt = uu.spans[C.hom(a, a).index];
    std::vector<std::uint32_t> table;
    for (const auto& e : family[a].elems) {
      std::uint32_t k = 0;
      while (k < tgt.apex.size() && tgt.apex[k] != e) ++k;
      table.push_back(k);
    }
    C.ids.push_back(V.make_cell(f, table));
  }
  out.category = std::move(C);
  return out;
}

EnrichedCategory classical_enriched_adapter(const MonoidalFcOracle& V,
                                            const ClassicalEnrichedData& data) {
  const std::size_t n = data.labels.size();
  if (data.hom_objects.size() != n * n || data.comp_morphisms.size() != n * n * n ||
      data.id_morphisms.size() != n)
    throw MalformedData("classical enrichment tables have inconsistent sizes");

  EnrichedCategory C;
  C.labels = data.labels;
  C.ends.assign(n, ObjectId{0});
  for (const auto& h : data.hom_objects) {
    auto hor = V.horizontal_named(h);
    if (!hor) throw MalformedData("unknown hom object '" + h + "'");
    C.homs.push_back(*hor);
  }
  try {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          C.comp.push_back(V.make_cell(comp_frame(V, C, a, b, c),
                                       data.comp_morphisms[(a * n + b) * n + c]));
    for (std::size_t a = 0; a < n; ++a)
      C.ids.push_back(V.make_cell(id_frame(V, C, a), data.id_morphisms[a]));
  } catch (const FrameError& e) {
    throw MalformedData(e.what());
  }
  return C;
}

EnrichedCategory enrich_to_bim(const BimOracle& BV, const EnrichedCategory& C) {
  LawReport pre = check_enriched(BV.base(), C);
  if (!pre.pass)
    throw SourceInvalid("input fails check_enriched: " + pre.violations.front().law + " at " +
                        pre.violations.front().witness);

  const std::size_t n = C.size();
  EnrichedCategory out;
  out.labels = C.labels;

  for (std::size_t a = 0; a < n; ++a) {
    auto x = BV.find_monad(enriched_end_monad(C, a));
    if (!x) throw SourceInvalid("end monad of '" + C.labels[a] + "' not present in Bim(V)");
    out.ends.push_back(*x);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto h = BV.find_bimodule(enriched_hom_bimodule(C, a, b));
      if (!h)
        throw SourceInvalid("hom bimodule (" + C.labels[a] + "," + C.labels[b] +
                            ") not present in Bim(V)");
      out.homs.push_back(*h);
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        out.comp.push_back(
            TwoCell{C.comp_at(a, b, c).id, comp_frame(BV, out, a, b, c)});
  for (std::size_t a = 0; a < n; ++a)
    out.ids.push_back(TwoCell{C.id_at(a).id, id_frame(BV, out, a)});
  return out;
}

StrictMonoidalPresentation v2_poset_presentation() {
  StrictMonoidalPresentation m;
  m.objects = {"0", "1"};
  m.unit = 1;
  m.tensor_obj = {{0, 0}, {0, 1}};
  m.morphisms = {{"m00", 0, 0}, {"m11", 1, 1}, {"m01", 0, 1}};
  m.identities = {0, 1};
  auto K = StrictMonoidalPresentation::key;
  m.compose[K(0, 0)] = 0;
  m.compose[K(1, 1)] = 1;
  m.compose[K(2, 0)] = 2;
  m.compose[K(1, 2)] = 2;
  for (std::uint32_t f = 0; f < 3; ++f)
    for (std::uint32_t g = 0; g < 3; ++g) {
      const auto& a = m.morphisms[f];
      const auto& b = m.morphisms[g];
      std::uint32_t dom = m.tensor_obj[a.dom][b.dom];
      std::uint32_t cod = m.tensor_obj[a.cod][b.cod];
      // All homs are subsingletons, so the tensor value is forced.
      std::uint32_t value = dom == 0 ? (cod == 0 ? 0 : 2) : 1;
      m.tensor_mor[K(f, g)] = value;
    }
  return m;
}

std::optional<EnrichedCategory> relation_enriched(const MonoidalFcOracle& v2,
                                                  const std::vector<std::vector<bool>>& relation) {
  const std::size_t n = relation.size();
  EnrichedCategory C;
  for (std::size_t a = 0; a < n; ++a) C.labels.push_back("p" + std::to_string(a));
  C.ends.assign(n, ObjectId{0});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      C.homs.push_back(v2.horizontal(relation[a][b] ? 1 : 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Frame f = comp_frame(v2, C, a, b, c);
        auto cs = v2.cells(f);
        if (cs.empty()) return std::nullopt;
        C.comp.push_back(cs.front());
      }
  for (std::size_t a = 0; a < n; ++a) {
    Frame f = id_frame(v2, C, a);
    auto cs = v2.cells(f);
    if (cs.empty()) return std::nullopt;
    C.ids.push_back(cs.front());
  }
  return C;
}

EnrichedCategory table_enriched(const EndoMulticatOracle& V,
                                const std::vector<std::uint32_t>& mult_table,
                                std::uint32_t unit) {
  EnrichedCategory C;
  C.labels = {"*"};
  C.ends = {ObjectId{0}};
  C.homs = {V.hom()};
  C.comp = {V.make_op(2, mult_table)};
  C.ids = {V.make_op(0, {unit})};
  return C;
}

}  // namespace fcmt
