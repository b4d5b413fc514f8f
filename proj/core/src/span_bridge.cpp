#include "fcmt/span_bridge.hpp"

#include "fcmt/errors.hpp"

namespace fcmt {

namespace {

std::vector<std::uint32_t> mult_table_of(const SpanFcOracle& V, const FinCategory& c,
                                         const Frame& mult_frame) {
  PathLimit L = V.limit_of(mult_frame.source);
  std::vector<std::uint32_t> table;
  table.reserve(L.size());
  for (const auto& t : L.tuples) table.push_back(c.comp(t[1], t[0]));
  return table;
}

}  // namespace

std::uint32_t SpanSceneBuilder::add_category(const std::string& name, FinCategory c) {
  c.check();
  cats_.push_back({name, std::move(c)});
  return static_cast<std::uint32_t>(cats_.size() - 1);
}

std::uint32_t SpanSceneBuilder::add_functor(const std::string& name, std::uint32_t from,
                                            std::uint32_t to, FinFunctor F) {
  F.check(cats_.at(from).c, cats_.at(to).c);
  funs_.push_back({name, from, to, std::move(F)});
  return static_cast<std::uint32_t>(funs_.size() - 1);
}

std::uint32_t SpanSceneBuilder::add_profunctor(const std::string& name, std::uint32_t from,
                                               std::uint32_t to, Profunctor p) {
  p.check(cats_.at(from).c, cats_.at(to).c);
  profs_.push_back({name, from, to, std::move(p)});
  return static_cast<std::uint32_t>(profs_.size() - 1);
}

void SpanSceneBuilder::add_all_object_functions(std::uint32_t from, std::uint32_t to) {
  all_fn_pairs_.emplace_back(from, to);
}

void SpanSceneBuilder::add_span(const std::string& name, std::uint32_t from, std::uint32_t to,
                                std::vector<std::string> apex, std::vector<std::uint32_t> leg_l,
                                std::vector<std::uint32_t> leg_r) {
  extra_spans_.emplace_back(name, from, to, std::move(apex), std::move(leg_l), std::move(leg_r));
}

SpanSceneBuilder::Scene SpanSceneBuilder::build() const {
  SpanUniverse u;
  std::vector<std::uint32_t> ob_set(cats_.size());
  std::vector<std::uint32_t> hom_span(cats_.size());

  for (std::uint32_t k = 0; k < cats_.size(); ++k) {
    const auto& [name, c] = cats_[k];
    ob_set[k] = static_cast<std::uint32_t>(u.sets.size());
    u.sets.push_back(FinSet{name + ".ob", c.objects});
    SpanData hom;
    hom.name = name + ".hom";
    hom.src = hom.dst = ob_set[k];
    for (const auto& m : c.morphisms) {
      hom.apex.push_back(m.name);
      hom.leg_l.push_back(m.dom);
      hom.leg_r.push_back(m.cod);
    }
    hom_span[k] = static_cast<std::uint32_t>(u.spans.size());
    u.spans.push_back(std::move(hom));
  }

  for (const auto& f : funs_) {
    FinFunction fn;
    fn.name = f.name;
    fn.dom = ob_set[f.from];
    fn.cod = ob_set[f.to];
    fn.table = f.F.obj_map;
    u.functions.push_back(std::move(fn));
  }

  for (const auto& [from, to] : all_fn_pairs_) {
    const std::size_t nd = cats_[from].c.objects.size();
    const std::size_t nc = cats_[to].c.objects.size();
    if (nd > 0 && nc == 0) continue;
    std::vector<std::vector<std::uint32_t>> tables;
    std::vector<std::uint32_t> cur(nd, 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == nd) {
        tables.push_back(cur);
        return;
      }
      for (std::uint32_t v = 0; v < nc; ++v) {
        cur[i] = v;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
    for (std::size_t s = 0; s < tables.size(); ++s) {
      FinFunction fn;
      fn.name =
          "all_" + std::to_string(from) + "_" + std::to_string(to) + "_" + std::to_string(s);
      fn.dom = ob_set[from];
      fn.cod = ob_set[to];
      fn.table = tables[s];
      u.functions.push_back(std::move(fn));
    }
  }

  for (const auto& p : profs_) {
    SpanData sp;
    sp.name = p.name;
    sp.src = ob_set[p.from];
    sp.dst = ob_set[p.to];
    for (const auto& e : p.p.elems) {
      sp.apex.push_back(e.name);
      sp.leg_l.push_back(e.c);
      sp.leg_r.push_back(e.d);
    }
    u.spans.push_back(std::move(sp));
  }

  for (const auto& [name, from, to, apex, ll, lr] : extra_spans_) {
    SpanData sp;
    sp.name = name;
    sp.src = ob_set[from];
    sp.dst = ob_set[to];
    sp.apex = apex;
    sp.leg_l = ll;
    sp.leg_r = lr;
    u.spans.push_back(std::move(sp));
  }

  Scene scene;
  scene.oracle = span_fc(std::move(u));
  const SpanFcOracle& V = *scene.oracle;

  for (std::uint32_t k = 0; k < cats_.size(); ++k) {
    const FinCategory& c = cats_[k].c;
    Monad m;
    m.carrier = V.object(ob_set[k]);
    m.endo = V.horizontal(hom_span[k]);
    Frame mf = monad_mult_frame(V, m.carrier, m.endo);
    m.mult = V.make_cell(mf, mult_table_of(V, c, mf));
    Frame uf = monad_unit_frame(V, m.carrier, m.endo);
    m.unit = V.make_cell(uf, c.identities);
    scene.monads.push_back(std::move(m));
  }

  for (const auto& f : funs_) {
    MonadMap mm;
    auto vert = V.vertical_by_table(ob_set[f.from], ob_set[f.to], f.F.obj_map);
    if (!vert) throw FcError("scene build: functor object map missing from the closure");
    mm.vert = *vert;
    Frame fr = monad_map_frame(scene.monads[f.from].endo, scene.monads[f.to].endo, mm.vert);
    mm.cell = V.make_cell(fr, f.F.mor_map);
    scene.functor_maps.push_back(std::move(mm));
  }

  for (std::uint32_t pi = 0; pi < profs_.size(); ++pi) {
    const auto& p = profs_[pi];
    Bimodule b;
    b.carrier = V.horizontal(static_cast<std::uint32_t>(hom_span.size()) + pi);
    b.src = scene.monads[p.from];
    b.tgt = scene.monads[p.to];

    Frame sf = bimodule_act_src_frame(V, b);
    PathLimit sl = V.limit_of(sf.source);
    std::vector<std::uint32_t> stab;
    for (const auto& t : sl.tuples) stab.push_back(p.p.act_c.at(Profunctor::key(t[0], t[1])));
    b.act_src = V.make_cell(sf, stab);

    Frame tf = bimodule_act_tgt_frame(V, b);
    PathLimit tl = V.limit_of(tf.source);
    std::vector<std::uint32_t> ttab;
    for (const auto& t : tl.tuples) ttab.push_back(p.p.act_d.at(Profunctor::key(t[1], t[0])));
    b.act_tgt = V.make_cell(tf, ttab);

    scene.profunctor_bimodules.push_back(std::move(b));
  }
  return scene;
}

CatSpanEncoding cat_to_monad(const FinCategory& c) {
  SpanSceneBuilder b;
  b.add_category("C", c);
  auto scene = b.build();
  return {scene.oracle, scene.monads[0]};
}

FinCategory monad_to_cat(const SpanFcOracle& V, const Monad& m) {
  LawReport rep = check_monad(V, m);
  if (!rep.pass)
    throw NotAMonad(rep.violations.front().law + " at " + rep.violations.front().witness);

  const SpanUniverse& u = V.universe();
  const FinSet& obs = u.sets[m.carrier.index];
  const SpanData& hom = u.spans[m.endo.index];

  FinCategory c;
  c.objects = obs.elems;
  for (std::uint32_t i = 0; i < hom.apex.size(); ++i)
    c.morphisms.push_back({hom.apex[i], hom.leg_l[i], hom.leg_r[i]});

  PathLimit L = V.limit_of(m.mult.frame.source);
  std::vector<std::uint32_t> mult = V.cell_table(m.mult);
  for (std::uint32_t t = 0; t < L.size(); ++t)
    c.compose[FinCategory::key(L.tuples[t][1], L.tuples[t][0])] = mult[t];
  c.identities = V.cell_table(m.unit);
  c.check();
  return c;
}

FunctorSpanEncoding functor_to_monad_map(const FinCategory& c, const FinCategory& d,
                                         const FinFunctor& F) {
  SpanSceneBuilder b;
  std::uint32_t i = b.add_category("C", c);
  std::uint32_t j = b.add_category("D", d);
  b.add_functor("F", i, j, F);
  auto scene = b.build();
  return {scene.oracle, scene.monads[i], scene.monads[j], scene.functor_maps[0]};
}

ProfunctorSpanEncoding profunctor_to_bimodule(const FinCategory& c, const FinCategory& d,
                                              const Profunctor& p) {
  SpanSceneBuilder b;
  std::uint32_t i = b.add_category("C", c);
  std::uint32_t j = b.add_category("D", d);
  b.add_profunctor("P", i, j, p);
  auto scene = b.build();
  return {scene.oracle, scene.monads[i], scene.monads[j], scene.profunctor_bimodules[0]};
}

Profunctor bimodule_to_profunctor(const SpanFcOracle& V, const Bimodule& b) {
  const SpanUniverse& u = V.universe();
  const SpanData& sp = u.spans[b.carrier.index];

  Profunctor p;
  for (std::uint32_t i = 0; i < sp.apex.size(); ++i)
    p.elems.push_back({sp.apex[i], sp.leg_l[i], sp.leg_r[i]});

  PathLimit sl = V.limit_of(b.act_src.frame.source);
  std::vector<std::uint32_t> stab = V.cell_table(b.act_src);
  for (std::uint32_t t = 0; t < sl.size(); ++t)
    p.act_c[Profunctor::key(sl.tuples[t][0], sl.tuples[t][1])] = stab[t];

  PathLimit tl = V.limit_of(b.act_tgt.frame.source);
  std::vector<std::uint32_t> ttab = V.cell_table(b.act_tgt);
  for (std::uint32_t t = 0; t < tl.size(); ++t)
    p.act_d[Profunctor::key(tl.tuples[t][1], tl.tuples[t][0])] = ttab[t];
  return p;
}

}  // namespace fcmt
