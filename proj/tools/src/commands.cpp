#include "commands.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fcmt/compose.hpp"
#include "fcmt/law_check.hpp"
#include "fcmt/span_bridge.hpp"
#include "structure_io.hpp"

namespace fcmt::cli {

namespace {

class IoError : public FcError {
 public:
  explicit IoError(const std::string& msg) : FcError("io error: " + msg) {}
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CheckBounds bounds_of(const CheckConfig& cfg) {
  return CheckBounds{cfg.max_arity, cfg.max_nesting, cfg.max_cells_per_frame, cfg.parallel};
}

void emit(const CheckConfig& cfg, const json& machine, const std::string& human,
          std::ostream& out) {
  if (cfg.format == "machine")
    out << machine.dump(2) << "\n";
  else
    out << human;
}

std::string human_report(const std::string& title, const LawReport& rep) {
  std::ostringstream ss;
  ss << title << ": " << (rep.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& [law, n] : rep.checked) ss << "  checked " << law << ": " << n << "\n";
  for (const auto& v : rep.violations) ss << "  violation [" << v.law << "] " << v.witness << "\n";
  return ss.str();
}

json base_machine(const std::string& command, const CheckConfig& cfg) {
  json out;
  out["command"] = command;
  out["seed"] = cfg.seed;
  return out;
}

int emit_error(const std::string& command, const CheckConfig& cfg, const std::string& msg,
               int code, std::ostream& out, std::ostream& err) {
  json machine = base_machine(command, cfg);
  machine["error"] = msg;
  machine["exit"] = code;
  emit(cfg, machine, command + ": error: " + msg + "\n", out);
  if (cfg.format != "machine") err << msg << "\n";
  return code;
}

/// An enriched category together with the oracle it lives over and any
/// presentation-level law report collected while building.
struct EnrichedBundle {
  std::shared_ptr<const FcOracle> oracle;
  EnrichedCategory cat;
  LawReport presentation_laws;
  std::string base_kind;
};

EnrichedBundle build_enriched(const json& doc) {
  EnrichedFile f = load_enriched(doc);
  EnrichedBundle out;
  out.base_kind = kind_of(f.base);
  const std::size_t n = f.objects.size();

  if (out.base_kind == "span-universe") {
    SpanUniverse u = load_span_universe(f.base);
    auto V = span_fc(std::move(u));
    out.oracle = V;
    out.presentation_laws.pass = true;
    EnrichedCategory C;
    C.labels = f.objects;
    if (f.ends.size() != n) throw MalformedData("span-based enrichment needs an ends table");
    for (const auto& e : f.ends) {
      auto x = V->object_named(e);
      if (!x) throw MalformedData("unknown end set '" + e + "'");
      C.ends.push_back(*x);
    }
    for (const auto& h : f.homs) {
      auto m = V->horizontal_named(h);
      if (!m) throw MalformedData("unknown hom span '" + h + "'");
      C.homs.push_back(*m);
    }
    auto cell_at = [&](const Frame& fr, const json& spec) {
      std::vector<std::pair<std::vector<std::string>, std::string>> entries;
      for (const auto& e : spec)
        entries.emplace_back(std::vector<std::string>(e[0].begin(), e[0].end()),
                             e[1].get<std::string>());
      return cell_from_entries(*V, fr, entries);
    };
    if (!f.comp.is_array() || f.comp.size() != n * n * n)
      throw MalformedData("comp table must list every (a,b,c) triple");
    C.comp.resize(n * n * n, TwoCell{});
    for (const auto& e : f.comp) {
      std::size_t a = 0, b = 0, c = 0;
      auto find = [&](const json& v) -> std::size_t {
        for (std::size_t i = 0; i < n; ++i)
          if (f.objects[i] == v.get<std::string>()) return i;
        throw MalformedData("unknown enriched object in comp");
      };
      a = find(e.at(0));
      b = find(e.at(1));
      c = find(e.at(2));
      Frame fr;
      fr.source = Path::of({C.hom(a, b), C.hom(b, c)});
      fr.left = V->id_vert(C.ends[a]);
      fr.right = V->id_vert(C.ends[c]);
      fr.target = C.hom(a, c);
      C.comp[(a * n + b) * n + c] = cell_at(fr, e.at(3));
    }
    if (!f.ids.is_array() || f.ids.size() != n)
      throw MalformedData("ids table must list every object");
    C.ids.resize(n, TwoCell{});
    for (const auto& e : f.ids) {
      std::size_t a = 0;
      for (; a < n; ++a)
        if (f.objects[a] == e.at(0).get<std::string>()) break;
      if (a == n) throw MalformedData("unknown enriched object in ids");
      Frame fr;
      fr.source = Path::empty_at(C.ends[a]);
      fr.left = fr.right = V->id_vert(C.ends[a]);
      fr.target = C.hom(a, a);
      C.ids[a] = cell_at(fr, e.at(1));
    }
    out.cat = std::move(C);
    return out;
  }

  if (out.base_kind == "monoidal") {
    StrictMonoidalPresentation m = load_monoidal(f.base);
    out.presentation_laws = m.check_laws();
    if (!out.presentation_laws.pass) return out;
    auto V = monoidal_fc(std::move(m));
    out.oracle = V;
    ClassicalEnrichedData data;
    data.labels = f.objects;
    data.hom_objects = f.homs;
    if (!f.comp.is_array() || f.comp.size() != n * n * n)
      throw MalformedData("comp table must list every (a,b,c) triple");
    data.comp_morphisms.resize(n * n * n);
    auto find = [&](const json& v) -> std::size_t {
      for (std::size_t i = 0; i < n; ++i)
        if (f.objects[i] == v.get<std::string>()) return i;
      throw MalformedData("unknown enriched object in comp");
    };
    for (const auto& e : f.comp)
      data.comp_morphisms[(find(e.at(0)) * n + find(e.at(1))) * n + find(e.at(2))] =
          e.at(3).get<std::string>();
    data.id_morphisms.resize(n);
    for (const auto& e : f.ids) data.id_morphisms[find(e.at(0))] = e.at(1).get<std::string>();
    out.cat = classical_enriched_adapter(*V, data);
    return out;
  }
  throw MalformedData("enriched base kind '" + out.base_kind + "' is not supported");
}

std::shared_ptr<const FcOracle> oracle_of_kind(const json& doc, LawReport& presentation_laws,
                                               std::uint32_t* arity_cap = nullptr) {
  const std::string kind = kind_of(doc);
  presentation_laws.pass = true;
  if (kind == "span-universe") return span_fc(load_span_universe(doc));
  if (kind == "monoidal") {
    StrictMonoidalPresentation m = load_monoidal(doc);
    presentation_laws = m.check_laws();
    if (!presentation_laws.pass) return nullptr;
    return monoidal_fc(std::move(m));
  }
  if (kind == "multicat") {
    MulticatPresentation p = load_multicat(doc);
    presentation_laws = p.check_laws();
    if (!presentation_laws.pass) return nullptr;
    if (arity_cap) *arity_cap = p.arity_bound;
    return multicat_fc(std::move(p));
  }
  if (kind == "double") {
    StrictDoublePresentation d = load_double(doc);
    presentation_laws = d.check_laws();
    if (!presentation_laws.pass) return nullptr;
    return double_fc(std::move(d));
  }
  throw MalformedData("kind '" + kind + "' does not present an fc-multicategory");
}

std::vector<std::pair<std::vector<std::string>, std::string>> entries_of_cell(
    const SpanFcOracle& V, const TwoCell& cell) {
  PathLimit L = V.limit_of(cell.frame.source);
  const SpanUniverse& u = V.universe();
  const SpanData& tgt = u.spans[cell.frame.target.index];
  auto table = V.cell_table(cell);
  std::vector<std::pair<std::vector<std::string>, std::string>> out;
  for (std::uint32_t t = 0; t < L.size(); ++t) {
    std::vector<std::string> names;
    if (L.length == 0)
      names.push_back(u.sets[L.start_set].elems[t]);
    else
      for (std::size_t i = 0; i < L.length; ++i)
        names.push_back(u.spans[cell.frame.source.cells[i].index].apex[L.tuples[t][i]]);
    out.emplace_back(std::move(names), tgt.apex[table[t]]);
  }
  return out;
}

json monad_demo_file(const FinCategory& c, bool mutate) {
  auto enc = cat_to_monad(c);
  const SpanFcOracle& V = *enc.oracle;
  auto mult = entries_of_cell(V, enc.monad.mult);
  auto unit = entries_of_cell(V, enc.monad.unit);
  if (mutate) {
    // Remap one non-identity composable pair to the next group element; the
    // result is still a well-formed cell but fails associativity.
    for (auto& [tuple, value] : mult) {
      if (tuple[0] == "g1" && tuple[1] == "g1") {
        value = "g0";
        break;
      }
    }
  }
  const SpanUniverse& u = V.universe();
  return serialize_monad_file(u, u.sets[enc.monad.carrier.index].name,
                              u.spans[enc.monad.endo.index].name, mult, unit);
}

FinCategory z3_category() {
  return monoid_category({"g0", "g1", "g2"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0);
}

SpanUniverse u1_universe() {
  SpanUniverse u;
  u.sets.push_back({"X", {"x1", "x2"}});
  u.sets.push_back({"Y", {"y1", "y2"}});
  u.sets.push_back({"Z", {"z1"}});
  SpanData A;
  A.name = "A";
  A.src = 0;
  A.dst = 1;
  A.apex = {"a1", "a2", "a3"};
  A.leg_l = {0, 0, 1};
  A.leg_r = {0, 1, 1};
  u.spans.push_back(A);
  SpanData B;
  B.name = "B";
  B.src = 1;
  B.dst = 2;
  B.apex = {"b1", "b2"};
  B.leg_l = {1, 1};
  B.leg_r = {0, 0};
  u.spans.push_back(B);
  return u;
}

}  // namespace

int cmd_check(const std::string& path, const CheckConfig& cfg, std::ostream& out,
              std::ostream& err) {
  json machine = base_machine("check", cfg);
  try {
    json doc = parse_document(slurp(path));
    const std::string kind = kind_of(doc);
    machine["kind"] = kind;
    LawReport rep;

    if (kind == "span-universe" || kind == "monoidal" || kind == "multicat" || kind == "double") {
      LawReport pres;
      std::uint32_t arity_cap = cfg.max_arity;
      auto V = oracle_of_kind(doc, pres, &arity_cap);
      rep.merge(pres);
      if (pres.pass) {
        CheckBounds bounds = bounds_of(cfg);
        // Tabulated presentations cannot be driven past their arity bound.
        bounds.max_arity = std::min(bounds.max_arity, arity_cap);
        rep.merge(check_fc_laws(*V, bounds));
      }
    } else if (kind == "monad") {
      MonadFile f = load_monad(doc);
      auto V = span_fc(f.universe);
      Monad m = resolve_monad(*V, f);
      rep = check_monad(*V, m);
    } else if (kind == "bimodule") {
      BimoduleFile f = load_bimodule(doc);
      auto V = span_fc(f.universe);
      Bimodule b = resolve_bimodule(*V, f);
      rep.merge(check_monad(*V, b.src));
      rep.merge(check_monad(*V, b.tgt));
      if (rep.pass) rep.merge(check_bimodule(*V, b));
    } else if (kind == "enriched") {
      EnrichedBundle bundle = build_enriched(doc);
      rep.merge(bundle.presentation_laws);
      if (rep.pass) rep.merge(check_enriched(*bundle.oracle, bundle.cat));
    } else if (kind == "subset-family") {
      SubsetFamilyFile f = load_subset_family(doc);
      auto sub = parbjn_from_subsets(f.base, f.subsets);
      rep = check_enriched(*sub.oracle, sub.category);
    } else {
      throw MalformedData("unknown kind '" + kind + "'");
    }

    rep.pass = rep.violations.empty();
    std::sort(rep.violations.begin(), rep.violations.end());
    int code = rep.pass ? 0 : 1;
    machine["report"] = report_json(rep);
    machine["exit"] = code;
    emit(cfg, machine, human_report("check " + kind, rep), out);
    return code;
  } catch (const SourceInvalid& e) {
    return emit_error("check", cfg, e.what(), 1, out, err);
  } catch (const FcError& e) {
    return emit_error("check", cfg, e.what(), 2, out, err);
  } catch (const json::exception& e) {
    return emit_error("check", cfg, e.what(), 2, out, err);
  }
}

int cmd_bim(const std::string& path, const CheckConfig& cfg, std::ostream& out,
            std::ostream& err) {
  json machine = base_machine("bim", cfg);
  try {
    json doc = parse_document(slurp(path));
    const std::string kind = kind_of(doc);
    machine["kind"] = kind;
    LawReport pres;
    auto V = oracle_of_kind(doc, pres);
    if (!pres.pass) {
      machine["report"] = report_json(pres);
      machine["exit"] = 1;
      emit(cfg, machine, human_report("bim " + kind, pres), out);
      return 1;
    }
    auto B = bim_oracle(V);

    json monads = json::array();
    for (ObjectId x : B->objects()) monads.push_back(B->describe(x));
    json maps = json::array();
    for (const auto& e : B->monad_maps())
      maps.push_back(json::array(
          {e.from, e.to, B->base().describe(e.map.vert), B->base().describe_cell(e.map.cell)}));
    json bims = json::array();
    for (const auto& e : B->bimodule_entries())
      bims.push_back(json::array({e.from, e.to, B->base().describe(e.data.carrier)}));

    // Cell counts over every frame of arity <= min(2, max_arity).
    json counts = json::object();
    std::uint32_t amax = std::min<std::uint32_t>(2, cfg.max_arity);
    auto objs = B->objects();
    for (std::uint32_t n = 0; n <= amax; ++n) {
      std::vector<Path> paths;
      if (n == 0) {
        for (ObjectId x : objs) paths.push_back(Path::empty_at(x));
      } else {
        std::vector<HorId> acc;
        std::function<void(ObjectId)> grow = [&](ObjectId at) {
          if (acc.size() == n) {
            paths.push_back(Path::of(acc));
            return;
          }
          for (ObjectId y : objs)
            for (HorId m : B->horizontals(at, y)) {
              acc.push_back(m);
              grow(y);
              acc.pop_back();
            }
        };
        for (ObjectId x : objs) grow(x);
      }
      std::uint64_t total = 0;
      for (const Path& src : paths) {
        for (ObjectId a : objs)
          for (VertId f : B->verticals(src.start(), a))
            for (ObjectId b : objs)
              for (VertId g : B->verticals(src.end(), b))
                for (HorId tgt : B->horizontals(a, b)) {
                  Frame fr{src, f, g, tgt};
                  total += B->cells(fr).size();
                }
      }
      counts[std::to_string(n)] = total;
    }

    machine["monads"] = monads;
    machine["monad_maps"] = maps;
    machine["bimodules"] = bims;
    machine["cell_counts"] = counts;
    machine["exit"] = 0;

    std::ostringstream human;
    human << "bim " << kind << ": " << monads.size() << " monads, " << maps.size()
          << " monad maps, " << bims.size() << " bimodules\n";
    for (const auto& m : monads) human << "  monad " << m.get<std::string>() << "\n";
    for (const auto& e : maps)
      human << "  map " << e[0] << "->" << e[1] << " " << e[2].get<std::string>() << "\n";
    for (const auto& e : bims)
      human << "  bimodule " << e[0] << "->" << e[1] << " " << e[2].get<std::string>() << "\n";
    for (const auto& [k, v] : counts.items())
      human << "  cells at arity " << k << ": " << v << "\n";
    emit(cfg, machine, human.str(), out);
    return 0;
  } catch (const FcError& e) {
    return emit_error("bim", cfg, e.what(), 2, out, err);
  } catch (const json::exception& e) {
    return emit_error("bim", cfg, e.what(), 2, out, err);
  }
}

int cmd_derive_bim(const std::string& path, const CheckConfig& cfg, std::ostream& out,
                   std::ostream& err) {
  json machine = base_machine("derive-bim", cfg);
  try {
    json doc = parse_document(slurp(path));
    const std::string kind = kind_of(doc);
    machine["kind"] = kind;

    std::shared_ptr<const FcOracle> oracle;
    EnrichedCategory cat;
    if (kind == "enriched") {
      EnrichedBundle bundle = build_enriched(doc);
      if (!bundle.presentation_laws.pass)
        throw SourceInvalid("base presentation fails its laws");
      oracle = bundle.oracle;
      cat = std::move(bundle.cat);
    } else if (kind == "subset-family") {
      SubsetFamilyFile f = load_subset_family(doc);
      auto sub = parbjn_from_subsets(f.base, f.subsets);
      oracle = sub.oracle;
      cat = std::move(sub.category);
    } else {
      throw MalformedData("derive-bim takes an enriched or subset-family file");
    }

    LawReport pre = check_enriched(*oracle, cat);
    if (!pre.pass)
      throw SourceInvalid("input fails check_enriched: " + pre.violations.front().law + " at " +
                          pre.violations.front().witness);

    auto B = bim_oracle(oracle);
    EnrichedCategory derived = enrich_to_bim(*B, cat);
    LawReport rep = check_enriched(*B, derived);

    json ends = json::array();
    for (std::size_t a = 0; a < derived.size(); ++a)
      ends.push_back(json::array({derived.labels[a], B->describe(derived.ends[a])}));
    json homs = json::array();
    for (std::size_t a = 0; a < derived.size(); ++a)
      for (std::size_t b = 0; b < derived.size(); ++b)
        homs.push_back(json::array(
            {derived.labels[a], derived.labels[b], B->describe(derived.hom(a, b))}));
    json comps = json::array();
    for (std::size_t a = 0; a < derived.size(); ++a)
      for (std::size_t b = 0; b < derived.size(); ++b)
        for (std::size_t c = 0; c < derived.size(); ++c)
          comps.push_back(json::array({derived.labels[a], derived.labels[b], derived.labels[c],
                                       B->describe_cell(derived.comp_at(a, b, c))}));

    machine["ends"] = ends;
    machine["homs"] = homs;
    machine["comp"] = comps;
    machine["report"] = report_json(rep);
    int code = rep.pass ? 0 : 1;
    machine["exit"] = code;

    std::ostringstream human;
    human << "derive-bim " << kind << ": " << (rep.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& e : ends)
      human << "  end " << e[0].get<std::string>() << " -> " << e[1].get<std::string>() << "\n";
    for (const auto& e : homs)
      human << "  hom (" << e[0].get<std::string>() << "," << e[1].get<std::string>() << ") -> "
            << e[2].get<std::string>() << "\n";
    emit(cfg, machine, human.str(), out);
    return code;
  } catch (const SourceInvalid& e) {
    return emit_error("derive-bim", cfg, e.what(), 1, out, err);
  } catch (const FcError& e) {
    return emit_error("derive-bim", cfg, e.what(), 2, out, err);
  } catch (const json::exception& e) {
    return emit_error("derive-bim", cfg, e.what(), 2, out, err);
  }
}

int cmd_demo(const std::string& name, const std::string& dir, const CheckConfig& cfg,
             std::ostream& out, std::ostream& err) {
  try {
    json doc;
    if (name == "u1") {
      doc = serialize(u1_universe());
    } else if (name == "v2") {
      doc = serialize(v2_poset_presentation());
    } else if (name == "arrow") {
      doc = monad_demo_file(arrow_category(), false);
    } else if (name == "z3") {
      doc = monad_demo_file(z3_category(), false);
    } else if (name == "z3-mutated") {
      doc = monad_demo_file(z3_category(), true);
    } else if (name == "subsets") {
      doc = serialize_subset_family(FinSet{"S", {"1", "2", "3"}},
                                    {{"C1", {"1", "2"}}, {"C2", {"2", "3"}}});
    } else {
      throw UnknownDemo(name);
    }

    std::string target_dir = dir;
    if (target_dir.empty()) {
      const char* env = std::getenv("FCMT_DEMO_DIR");
      target_dir = env ? env : ".";
    }
    std::string path = target_dir + "/" + name + ".json";
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot write '" + path + "'");
    f << doc.dump(2) << "\n";

    json machine = base_machine("demo", cfg);
    machine["name"] = name;
    machine["path"] = path;
    machine["exit"] = 0;
    emit(cfg, machine, "wrote " + path + "\n", out);
    return 0;
  } catch (const FcError& e) {
    return emit_error("demo", cfg, e.what(), 2, out, err);
  }
}

int cmd_compose_span(const std::string& path, const std::vector<std::string>& spans,
                     const std::string& anchor, const CheckConfig& cfg, std::ostream& out,
                     std::ostream& err) {
  json machine = base_machine("compose-span", cfg);
  try {
    json doc = parse_document(slurp(path));
    if (kind_of(doc) != "span-universe")
      throw MalformedData("compose-span takes a span-universe file");
    SpanUniverse u = load_span_universe(doc);
    SpanData limit = path_limit(u, spans, anchor);

    json span;
    span["name"] = limit.name;
    span["src"] = u.sets[limit.src].name;
    span["dst"] = u.sets[limit.dst].name;
    span["apex"] = limit.apex;
    json ll = json::object(), lr = json::object();
    for (std::size_t i = 0; i < limit.apex.size(); ++i) {
      ll[limit.apex[i]] = u.sets[limit.src].elems[limit.leg_l[i]];
      lr[limit.apex[i]] = u.sets[limit.dst].elems[limit.leg_r[i]];
    }
    span["leg_l"] = ll;
    span["leg_r"] = lr;
    machine["span"] = span;
    machine["exit"] = 0;

    std::ostringstream human;
    human << limit.name << ": " << u.sets[limit.src].name << " <- {";
    for (std::size_t i = 0; i < limit.apex.size(); ++i)
      human << (i ? "," : "") << limit.apex[i];
    human << "} -> " << u.sets[limit.dst].name << "\n";
    emit(cfg, machine, human.str(), out);
    return 0;
  } catch (const FcError& e) {
    return emit_error("compose-span", cfg, e.what(), 2, out, err);
  } catch (const json::exception& e) {
    return emit_error("compose-span", cfg, e.what(), 2, out, err);
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite fc-multicategories: law checking, Bim, enrichment"};
  app.require_subcommand(1);

  CheckConfig cfg;
  std::string file, demo_name, dir, anchor;
  std::vector<std::string> spans;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--max-arity", cfg.max_arity, "path length bound");
    sub->add_option("--max-nesting", cfg.max_nesting, "composition nesting bound");
    sub->add_option("--max-cells-per-frame", cfg.max_cells_per_frame, "per-frame cell budget");
    sub->add_option("--seed", cfg.seed, "seed echoed into reports");
    sub->add_flag("--parallel", cfg.parallel, "check frames concurrently");
    sub->add_option("--format", cfg.format, "human|machine")
        ->check(CLI::IsMember({"human", "machine"}));
  };

  CLI::App* check = app.add_subcommand("check", "law-check a structure file");
  check->add_option("file", file)->required();
  add_common(check);

  CLI::App* bim = app.add_subcommand("bim", "materialize the Bim construction");
  bim->add_option("file", file)->required();
  add_common(bim);

  CLI::App* derive = app.add_subcommand("derive-bim", "transfer an enriched category to Bim");
  derive->add_option("file", file)->required();
  add_common(derive);

  CLI::App* demo = app.add_subcommand("demo", "write a shipped example file");
  demo->add_option("name", demo_name)->required();
  demo->add_option("--dir", dir, "output directory (default FCMT_DEMO_DIR or .)");
  add_common(demo);

  CLI::App* comp = app.add_subcommand("compose-span", "limit of a span path");
  comp->add_option("file", file)->required();
  comp->add_option("spans", spans, "span names along the path");
  comp->add_option("--anchor", anchor, "anchor set for the empty path");
  add_common(comp);

  std::vector<const char*> argv;
  argv.push_back("fcmt");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  if (check->parsed()) return cmd_check(file, cfg, out, err);
  if (bim->parsed()) return cmd_bim(file, cfg, out, err);
  if (derive->parsed()) return cmd_derive_bim(file, cfg, out, err);
  if (demo->parsed()) return cmd_demo(demo_name, dir, cfg, out, err);
  if (comp->parsed()) return cmd_compose_span(file, spans, anchor, cfg, out, err);
  err << "no command\n";
  return 2;
}

}  // namespace fcmt::cli
