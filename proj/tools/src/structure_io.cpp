#include "structure_io.hpp"

#include <algorithm>

namespace fcmt::cli {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw MalformedData(msg); }

const json& need(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::string need_string(const json& doc, const char* key) {
  const json& v = need(doc, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const json& v, const char* what) {
  if (!v.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) bad(std::string(what) + " must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::uint32_t set_index(const SpanUniverse& u, const std::string& name) {
  auto i = u.set_index(name);
  if (!i) bad("unknown set '" + name + "'");
  return *i;
}

std::uint32_t elem_index(const FinSet& s, const std::string& name) {
  auto i = s.find(name);
  if (!i) bad("unknown element '" + name + "' of set '" + s.name + "'");
  return *i;
}

std::vector<std::pair<std::vector<std::string>, std::string>> entry_list(const json& v,
                                                                         const char* what) {
  if (!v.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::pair<std::vector<std::string>, std::string>> out;
  for (const auto& e : v) {
    if (!e.is_array() || e.size() != 2 || !e[1].is_string())
      bad(std::string(what) + " entries must be [[names...], name]");
    out.emplace_back(string_list(e[0], what), e[1].get<std::string>());
  }
  return out;
}

json entries_json(const std::vector<std::pair<std::vector<std::string>, std::string>>& entries) {
  json out = json::array();
  for (const auto& [tuple, value] : entries) {
    json t = json::array();
    for (const auto& n : tuple) t.push_back(n);
    out.push_back(json::array({t, value}));
  }
  return out;
}

}  // namespace

json parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(e.what(), line, col);
  }
  if (!doc.is_object()) bad("document must be an object");
  if (need(doc, "format_version") != kFormatVersion)
    bad("unsupported format_version (want " + std::to_string(kFormatVersion) + ")");
  need_string(doc, "kind");
  return doc;
}

std::string kind_of(const json& doc) { return doc.at("kind").get<std::string>(); }

SpanUniverse load_span_universe(const json& doc) {
  SpanUniverse u;
  for (const auto& s : need(doc, "sets")) {
    FinSet fs;
    fs.name = need_string(s, "name");
    fs.elems = string_list(need(s, "elems"), "set elems");
    u.sets.push_back(std::move(fs));
  }
  if (doc.contains("functions"))
    for (const auto& f : doc["functions"]) {
      FinFunction fn;
      fn.name = need_string(f, "name");
      fn.dom = set_index(u, need_string(f, "dom"));
      fn.cod = set_index(u, need_string(f, "cod"));
      const json& map = need(f, "map");
      if (!map.is_object()) bad("function map must be an object");
      fn.table.assign(u.sets[fn.dom].size(), 0);
      std::vector<bool> seen(u.sets[fn.dom].size(), false);
      for (const auto& [k, v] : map.items()) {
        std::uint32_t d = elem_index(u.sets[fn.dom], k);
        if (!v.is_string()) bad("function map values must be strings");
        fn.table[d] = elem_index(u.sets[fn.cod], v.get<std::string>());
        seen[d] = true;
      }
      for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) bad("function '" + fn.name + "' misses element '" +
                          u.sets[fn.dom].elems[i] + "'");
      u.functions.push_back(std::move(fn));
    }
  if (doc.contains("spans"))
    for (const auto& s : doc["spans"]) {
      SpanData sp;
      sp.name = need_string(s, "name");
      sp.src = set_index(u, need_string(s, "src"));
      sp.dst = set_index(u, need_string(s, "dst"));
      sp.apex = string_list(need(s, "apex"), "span apex");
      const json& ll = need(s, "leg_l");
      const json& lr = need(s, "leg_r");
      for (const auto& a : sp.apex) {
        if (!ll.contains(a) || !lr.contains(a)) bad("span '" + sp.name + "' legs miss '" + a + "'");
        sp.leg_l.push_back(elem_index(u.sets[sp.src], ll.at(a).get<std::string>()));
        sp.leg_r.push_back(elem_index(u.sets[sp.dst], lr.at(a).get<std::string>()));
      }
      u.spans.push_back(std::move(sp));
    }
  u.partial_bijections_only = doc.value("partial_bijections_only", false);
  u.validate();
  return u;
}

json serialize(const SpanUniverse& u) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["kind"] = "span-universe";
  doc["sets"] = json::array();
  for (const auto& s : u.sets) doc["sets"].push_back({{"name", s.name}, {"elems", s.elems}});
  doc["functions"] = json::array();
  for (const auto& f : u.functions) {
    json map = json::object();
    for (std::size_t i = 0; i < f.table.size(); ++i)
      map[u.sets[f.dom].elems[i]] = u.sets[f.cod].elems[f.table[i]];
    doc["functions"].push_back({{"name", f.name},
                                {"dom", u.sets[f.dom].name},
                                {"cod", u.sets[f.cod].name},
                                {"map", map}});
  }
  doc["spans"] = json::array();
  for (const auto& s : u.spans) {
    json ll = json::object(), lr = json::object();
    for (std::size_t i = 0; i < s.apex.size(); ++i) {
      ll[s.apex[i]] = u.sets[s.src].elems[s.leg_l[i]];
      lr[s.apex[i]] = u.sets[s.dst].elems[s.leg_r[i]];
    }
    doc["spans"].push_back({{"name", s.name},
                            {"src", u.sets[s.src].name},
                            {"dst", u.sets[s.dst].name},
                            {"apex", s.apex},
                            {"leg_l", ll},
                            {"leg_r", lr}});
  }
  doc["partial_bijections_only"] = u.partial_bijections_only;
  return doc;
}

StrictMonoidalPresentation load_monoidal(const json& doc) {
  StrictMonoidalPresentation m;
  m.objects = string_list(need(doc, "objects"), "objects");
  auto obj = [&](const std::string& n) {
    auto i = m.object_index(n);
    if (!i) bad("unknown object '" + n + "'");
    return *i;
  };
  m.unit = obj(need_string(doc, "unit"));
  m.tensor_obj.assign(m.objects.size(), std::vector<std::uint32_t>(m.objects.size(), 0));
  {
    std::vector<std::vector<bool>> seen(m.objects.size(),
                                        std::vector<bool>(m.objects.size(), false));
    for (const auto& t : need(doc, "tensor_obj")) {
      auto trip = string_list(t, "tensor_obj entry");
      if (trip.size() != 3) bad("tensor_obj entries are [x, y, x(x)y]");
      m.tensor_obj[obj(trip[0])][obj(trip[1])] = obj(trip[2]);
      seen[obj(trip[0])][obj(trip[1])] = true;
    }
    for (std::size_t a = 0; a < m.objects.size(); ++a)
      for (std::size_t b = 0; b < m.objects.size(); ++b)
        if (!seen[a][b]) bad("tensor_obj misses " + m.objects[a] + " (x) " + m.objects[b]);
  }
  for (const auto& f : need(doc, "morphisms"))
    m.morphisms.push_back({need_string(f, "name"), obj(need_string(f, "dom")),
                           obj(need_string(f, "cod"))});
  auto mor = [&](const std::string& n) {
    auto i = m.morphism_index(n);
    if (!i) bad("unknown morphism '" + n + "'");
    return *i;
  };
  m.identities.assign(m.objects.size(), 0);
  {
    const json& ids = need(doc, "identities");
    for (std::size_t a = 0; a < m.objects.size(); ++a) {
      if (!ids.contains(m.objects[a])) bad("identities miss object '" + m.objects[a] + "'");
      m.identities[a] = mor(ids.at(m.objects[a]).get<std::string>());
    }
  }
  for (const auto& t : need(doc, "compose")) {
    auto trip = string_list(t, "compose entry");
    if (trip.size() != 3) bad("compose entries are [g, f, g o f]");
    m.compose[StrictMonoidalPresentation::key(mor(trip[0]), mor(trip[1]))] = mor(trip[2]);
  }
  for (const auto& t : need(doc, "tensor_mor")) {
    auto trip = string_list(t, "tensor_mor entry");
    if (trip.size() != 3) bad("tensor_mor entries are [f, g, f(x)g]");
    m.tensor_mor[StrictMonoidalPresentation::key(mor(trip[0]), mor(trip[1]))] = mor(trip[2]);
  }
  m.validate_structure();
  return m;
}

json serialize(const StrictMonoidalPresentation& m) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["kind"] = "monoidal";
  doc["objects"] = m.objects;
  doc["unit"] = m.objects[m.unit];
  doc["tensor_obj"] = json::array();
  for (std::size_t a = 0; a < m.objects.size(); ++a)
    for (std::size_t b = 0; b < m.objects.size(); ++b)
      doc["tensor_obj"].push_back(
          json::array({m.objects[a], m.objects[b], m.objects[m.tensor_obj[a][b]]}));
  doc["morphisms"] = json::array();
  for (const auto& f : m.morphisms)
    doc["morphisms"].push_back(
        {{"name", f.name}, {"dom", m.objects[f.dom]}, {"cod", m.objects[f.cod]}});
  doc["identities"] = json::object();
  for (std::size_t a = 0; a < m.objects.size(); ++a)
    doc["identities"][m.objects[a]] = m.morphisms[m.identities[a]].name;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> comp(m.compose.begin(), m.compose.end());
  std::sort(comp.begin(), comp.end());
  doc["compose"] = json::array();
  for (const auto& [k, v] : comp)
    doc["compose"].push_back(json::array({m.morphisms[k >> 32].name,
                                          m.morphisms[k & 0xffffffffu].name,
                                          m.morphisms[v].name}));
  std::vector<std::pair<std::uint64_t, std::uint32_t>> tens(m.tensor_mor.begin(),
                                                            m.tensor_mor.end());
  std::sort(tens.begin(), tens.end());
  doc["tensor_mor"] = json::array();
  for (const auto& [k, v] : tens)
    doc["tensor_mor"].push_back(json::array({m.morphisms[k >> 32].name,
                                             m.morphisms[k & 0xffffffffu].name,
                                             m.morphisms[v].name}));
  return doc;
}

MulticatPresentation load_multicat(const json& doc) {
  MulticatPresentation p;
  p.objects = string_list(need(doc, "objects"), "objects");
  p.arity_bound = need(doc, "arity_bound").get<std::uint32_t>();
  auto obj = [&](const std::string& n) {
    auto i = p.object_index(n);
    if (!i) bad("unknown object '" + n + "'");
    return *i;
  };
  for (const auto& o : need(doc, "operations")) {
    MulticatPresentation::Op op;
    op.name = need_string(o, "name");
    for (const auto& i : string_list(need(o, "inputs"), "operation inputs"))
      op.inputs.push_back(obj(i));
    op.output = obj(need_string(o, "output"));
    p.ops.push_back(std::move(op));
  }
  auto op_of = [&](const std::string& n) {
    auto i = p.op_index(n);
    if (!i) bad("unknown operation '" + n + "'");
    return *i;
  };
  p.identities.assign(p.objects.size(), 0);
  const json& ids = need(doc, "identities");
  for (std::size_t c = 0; c < p.objects.size(); ++c) {
    if (!ids.contains(p.objects[c])) bad("identities miss object '" + p.objects[c] + "'");
    p.identities[c] = op_of(ids.at(p.objects[c]).get<std::string>());
  }
  for (const auto& e : need(doc, "compose")) {
    std::vector<std::uint32_t> key{op_of(need_string(e, "op"))};
    for (const auto& c : string_list(need(e, "children"), "compose children"))
      key.push_back(op_of(c));
    p.compose[key] = op_of(need_string(e, "result"));
  }
  p.validate_structure();
  return p;
}

json serialize(const MulticatPresentation& p) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["kind"] = "multicat";
  doc["objects"] = p.objects;
  doc["arity_bound"] = p.arity_bound;
  doc["operations"] = json::array();
  for (const auto& op : p.ops) {
    json inputs = json::array();
    for (auto i : op.inputs) inputs.push_back(p.objects[i]);
    doc["operations"].push_back(
        {{"name", op.name}, {"inputs", inputs}, {"output", p.objects[op.output]}});
  }
  doc["identities"] = json::object();
  for (std::size_t c = 0; c < p.objects.size(); ++c)
    doc["identities"][p.objects[c]] = p.ops[p.identities[c]].name;
  std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>> entries(p.compose.begin(),
                                                                            p.compose.end());
  std::sort(entries.begin(), entries.end());
  doc["compose"] = json::array();
  for (const auto& [k, v] : entries) {
    json children = json::array();
    for (std::size_t i = 1; i < k.size(); ++i) children.push_back(p.ops[k[i]].name);
    doc["compose"].push_back(
        {{"op", p.ops[k[0]].name}, {"children", children}, {"result", p.ops[v].name}});
  }
  return doc;
}

namespace {

FinCategory load_fincat(const json& doc, const std::vector<std::string>& objects) {
  FinCategory c;
  c.objects = objects;
  auto obj = [&](const std::string& n) {
    auto i = c.object_index(n);
    if (!i) bad("unknown object '" + n + "'");
    return *i;
  };
  for (const auto& f : need(doc, "morphisms"))
    c.morphisms.push_back(
        {need_string(f, "name"), obj(need_string(f, "dom")), obj(need_string(f, "cod"))});
  auto mor = [&](const std::string& n) {
    auto i = c.morphism_index(n);
    if (!i) bad("unknown morphism '" + n + "'");
    return *i;
  };
  c.identities.assign(objects.size(), 0);
  const json& ids = need(doc, "identities");
  for (std::size_t a = 0; a < objects.size(); ++a) {
    if (!ids.contains(objects[a])) bad("identities miss object '" + objects[a] + "'");
    c.identities[a] = mor(ids.at(objects[a]).get<std::string>());
  }
  for (const auto& t : need(doc, "compose")) {
    auto trip = string_list(t, "compose entry");
    if (trip.size() != 3) bad("compose entries are [g, f, g o f]");
    c.compose[FinCategory::key(mor(trip[0]), mor(trip[1]))] = mor(trip[2]);
  }
  return c;
}

json serialize_fincat(const FinCategory& c) {
  json doc;
  doc["morphisms"] = json::array();
  for (const auto& f : c.morphisms)
    doc["morphisms"].push_back(
        {{"name", f.name}, {"dom", c.objects[f.dom]}, {"cod", c.objects[f.cod]}});
  doc["identities"] = json::object();
  for (std::size_t a = 0; a < c.objects.size(); ++a)
    doc["identities"][c.objects[a]] = c.morphisms[c.identities[a]].name;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> comp(c.compose.begin(), c.compose.end());
  std::sort(comp.begin(), comp.end());
  doc["compose"] = json::array();
  for (const auto& [k, v] : comp)
    doc["compose"].push_back(json::array({c.morphisms[k >> 32].name,
                                          c.morphisms[k & 0xffffffffu].name,
                                          c.morphisms[v].name}));
  return doc;
}

}  // namespace

StrictDoublePresentation load_double(const json& doc) {
  StrictDoublePresentation d;
  std::vector<std::string> objects = string_list(need(doc, "objects"), "objects");
  d.vertical = load_fincat(need(doc, "vertical"), objects);
  d.horizontal = load_fincat(need(doc, "horizontal"), objects);
  auto vmor = [&](const std::string& n) {
    auto i = d.vertical.morphism_index(n);
    if (!i) bad("unknown vertical morphism '" + n + "'");
    return *i;
  };
  auto hmor = [&](const std::string& n) {
    auto i = d.horizontal.morphism_index(n);
    if (!i) bad("unknown horizontal morphism '" + n + "'");
    return *i;
  };
  for (const auto& s : need(doc, "squares"))
    d.squares.push_back({need_string(s, "name"), hmor(need_string(s, "top")),
                         vmor(need_string(s, "left")), vmor(need_string(s, "right")),
                         hmor(need_string(s, "bottom"))});
  auto sq = [&](const std::string& n) {
    for (std::uint32_t i = 0; i < d.squares.size(); ++i)
      if (d.squares[i].name == n) return i;
    bad("unknown square '" + n + "'");
  };
  for (const auto& t : need(doc, "hcompose")) {
    auto trip = string_list(t, "hcompose entry");
    if (trip.size() != 3) bad("hcompose entries are [b, a, result]");
    d.hcomp[StrictDoublePresentation::key(sq(trip[0]), sq(trip[1]))] = sq(trip[2]);
  }
  for (const auto& t : need(doc, "vcompose")) {
    auto trip = string_list(t, "vcompose entry");
    if (trip.size() != 3) bad("vcompose entries are [b, a, result]");
    d.vcomp[StrictDoublePresentation::key(sq(trip[0]), sq(trip[1]))] = sq(trip[2]);
  }
  const json& hid = need(doc, "hid");
  for (const auto& f : d.vertical.morphisms) {
    if (!hid.contains(f.name)) bad("hid misses '" + f.name + "'");
    d.hid.push_back(sq(hid.at(f.name).get<std::string>()));
  }
  const json& vid = need(doc, "vid");
  for (const auto& m : d.horizontal.morphisms) {
    if (!vid.contains(m.name)) bad("vid misses '" + m.name + "'");
    d.vid.push_back(sq(vid.at(m.name).get<std::string>()));
  }
  d.validate_structure();
  return d;
}

json serialize(const StrictDoublePresentation& d) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["kind"] = "double";
  doc["objects"] = d.vertical.objects;
  doc["vertical"] = serialize_fincat(d.vertical);
  doc["horizontal"] = serialize_fincat(d.horizontal);
  doc["squares"] = json::array();
  for (const auto& s : d.squares)
    doc["squares"].push_back({{"name", s.name},
                              {"top", d.horizontal.morphisms[s.top].name},
                              {"left", d.vertical.morphisms[s.left].name},
                              {"right", d.vertical.morphisms[s.right].name},
                              {"bottom", d.horizontal.morphisms[s.bottom].name}});
  auto dump_table = [&](const std::unordered_map<std::uint64_t, std::uint32_t>& table) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> entries(table.begin(), table.end());
    std::sort(entries.begin(), entries.end());
    json out = json::array();
    for (const auto& [k, v] : entries)
      out.push_back(json::array({d.squares[k >> 32].name, d.squares[k & 0xffffffffu].name,
                                 d.squares[v].name}));
    return out;
  };
  doc["hcompose"] = dump_table(d.hcomp);
  doc["vcompose"] = dump_table(d.vcomp);
  doc["hid"] = json::object();
  for (std::size_t f = 0; f < d.hid.size(); ++f)
    doc["hid"][d.vertical.morphisms[f].name] = d.squares[d.hid[f]].name;
  doc["vid"] = json::object();
  for (std::size_t m = 0; m < d.vid.size(); ++m)
    doc["vid"][d.horizontal.morphisms[m].name] = d.squares[d.vid[m]].name;
  return doc;
}

MonadFile load_monad(const json& doc) {
  MonadFile f;
  f.universe = load_span_universe(need(doc, "universe"));
  f.carrier = need_string(doc, "carrier");
  f.endo = need_string(doc, "endo");
  f.mult = entry_list(need(doc, "mult"), "mult");
  f.unit = entry_list(need(doc, "unit"), "unit");
  return f;
}

json serialize_monad_file(
    const SpanUniverse& u, const std::string& carrier, const std::string& endo,
    const std::vector<std::pair<std::vector<std::string>, std::string>>& mult,
    const std::vector<std::pair<std::vector<std::string>, std::string>>& unit) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["kind"] = "monad";
  doc["universe"] = serialize(u);
  doc["carrier"] = carrier;
  doc["endo"] = endo;
  doc["mult"] = entries_json(mult);
  doc["unit"] = entries_json(unit);
  return doc;
}

BimoduleFile load_bimodule(const json& doc) {
  BimoduleFile f;
  f.universe = load_span_universe(need(doc, "universe"));
  auto load_inner = [&](const json& m) {
    MonadFile inner;
    inner.carrier = need_string(m, "carrier");
    inner.endo = need_string(m, "endo");
    inner.mult = entry_list(need(m, "mult"), "mult");
    inner.unit = entry_list(need(m, "unit"), "unit");
    return inner;
  };
  f.src = load_inner(need(doc, "src_monad"));
  f.tgt = load_inner(need(doc, "tgt_monad"));
  f.module_span = need_string(doc, "module");
  f.act_src = entry_list(need(doc, "act_src"), "act_src");
  f.act_tgt = entry_list(need(doc, "act_tgt"), "act_tgt");
  return f;
}

json serialize_bimodule_file(const BimoduleFile& f) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["kind"] = "bimodule";
  doc["universe"] = serialize(f.universe);
  auto inner = [&](const MonadFile& m) {
    json out;
    out["carrier"] = m.carrier;
    out["endo"] = m.endo;
    out["mult"] = entries_json(m.mult);
    out["unit"] = entries_json(m.unit);
    return out;
  };
  doc["src_monad"] = inner(f.src);
  doc["tgt_monad"] = inner(f.tgt);
  doc["module"] = f.module_span;
  doc["act_src"] = entries_json(f.act_src);
  doc["act_tgt"] = entries_json(f.act_tgt);
  return doc;
}

json serialize_enriched_file(const EnrichedFile& f) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["kind"] = "enriched";
  doc["base"] = f.base;
  doc["objects"] = f.objects;
  if (!f.ends.empty()) {
    json ends = json::object();
    for (std::size_t i = 0; i < f.objects.size(); ++i) ends[f.objects[i]] = f.ends[i];
    doc["ends"] = ends;
  }
  const std::size_t n = f.objects.size();
  doc["homs"] = json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      doc["homs"].push_back(json::array({f.objects[a], f.objects[b], f.homs[a * n + b]}));
  doc["comp"] = f.comp;
  doc["ids"] = f.ids;
  return doc;
}

EnrichedFile load_enriched(const json& doc) {
  EnrichedFile f;
  f.base = need(doc, "base");
  if (!f.base.is_object() || !f.base.contains("kind")) bad("base must be a structure file");
  f.objects = string_list(need(doc, "objects"), "objects");
  if (doc.contains("ends")) {
    const json& ends = need(doc, "ends");
    for (const auto& o : f.objects) {
      if (!ends.contains(o)) bad("ends miss object '" + o + "'");
      f.ends.push_back(ends.at(o).get<std::string>());
    }
  }
  const std::size_t n = f.objects.size();
  f.homs.assign(n * n, "");
  for (const auto& h : need(doc, "homs")) {
    auto trip = string_list(h, "homs entry");
    if (trip.size() != 3) bad("homs entries are [a, b, name]");
    auto find = [&](const std::string& o) -> std::size_t {
      for (std::size_t i = 0; i < n; ++i)
        if (f.objects[i] == o) return i;
      bad("unknown enriched object '" + o + "'");
    };
    f.homs[find(trip[0]) * n + find(trip[1])] = trip[2];
  }
  for (const auto& h : f.homs)
    if (h.empty()) bad("homs table is incomplete");
  f.comp = need(doc, "comp");
  f.ids = need(doc, "ids");
  return f;
}

SubsetFamilyFile load_subset_family(const json& doc) {
  SubsetFamilyFile f;
  const json& s = need(doc, "set");
  f.base.name = need_string(s, "name");
  f.base.elems = string_list(need(s, "elems"), "set elems");
  for (const auto& c : need(doc, "subsets")) {
    FinSet fs;
    fs.name = need_string(c, "name");
    fs.elems = string_list(need(c, "elems"), "subset elems");
    f.subsets.push_back(std::move(fs));
  }
  return f;
}

json serialize_subset_family(const FinSet& base, const std::vector<FinSet>& subsets) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["kind"] = "subset-family";
  doc["set"] = {{"name", base.name}, {"elems", base.elems}};
  doc["subsets"] = json::array();
  for (const auto& c : subsets) doc["subsets"].push_back({{"name", c.name}, {"elems", c.elems}});
  return doc;
}

TwoCell cell_from_entries(
    const SpanFcOracle& V, const Frame& frame,
    const std::vector<std::pair<std::vector<std::string>, std::string>>& entries) {
  PathLimit L = V.limit_of(frame.source);
  const SpanUniverse& u = V.universe();
  const SpanData& tgt = u.spans[frame.target.index];

  auto tuple_names = [&](std::uint32_t t) {
    std::vector<std::string> names;
    if (L.length == 0) {
      names.push_back(u.sets[L.start_set].elems[t]);
    } else {
      for (std::size_t i = 0; i < L.length; ++i)
        names.push_back(u.spans[frame.source.cells[i].index].apex[L.tuples[t][i]]);
    }
    return names;
  };

  std::vector<std::uint32_t> table(L.size());
  std::vector<bool> filled(L.size(), false);
  for (const auto& [tuple, value] : entries) {
    bool matched = false;
    for (std::uint32_t t = 0; t < L.size(); ++t) {
      if (tuple_names(t) != tuple) continue;
      auto vi = std::find(tgt.apex.begin(), tgt.apex.end(), value);
      if (vi == tgt.apex.end()) bad("cell value '" + value + "' is not in the target apex");
      if (filled[t]) bad("duplicate cell entry");
      table[t] = static_cast<std::uint32_t>(vi - tgt.apex.begin());
      filled[t] = true;
      matched = true;
      break;
    }
    if (!matched) bad("cell entry does not match any limit tuple");
  }
  for (std::uint32_t t = 0; t < L.size(); ++t)
    if (!filled[t]) bad("cell table misses a limit tuple");
  return V.make_cell(frame, table);
}

Monad resolve_monad(const SpanFcOracle& V, const MonadFile& f) {
  auto carrier = V.object_named(f.carrier);
  if (!carrier) bad("unknown carrier set '" + f.carrier + "'");
  auto endo = V.horizontal_named(f.endo);
  if (!endo) bad("unknown endo span '" + f.endo + "'");
  if (endo->src != *carrier || endo->dst != *carrier)
    bad("span '" + f.endo + "' is not an endo-span on '" + f.carrier + "'");
  Monad m;
  m.carrier = *carrier;
  m.endo = *endo;
  m.mult = cell_from_entries(V, monad_mult_frame(V, m.carrier, m.endo), f.mult);
  m.unit = cell_from_entries(V, monad_unit_frame(V, m.carrier, m.endo), f.unit);
  return m;
}

Bimodule resolve_bimodule(const SpanFcOracle& V, const BimoduleFile& f) {
  Bimodule b;
  b.src = resolve_monad(V, f.src);
  b.tgt = resolve_monad(V, f.tgt);
  auto mod = V.horizontal_named(f.module_span);
  if (!mod) bad("unknown module span '" + f.module_span + "'");
  b.carrier = *mod;
  if (b.carrier.src != b.src.carrier || b.carrier.dst != b.tgt.carrier)
    bad("module span does not run between the monad carriers");
  b.act_src = cell_from_entries(V, bimodule_act_src_frame(V, b), f.act_src);
  b.act_tgt = cell_from_entries(V, bimodule_act_tgt_frame(V, b), f.act_tgt);
  return b;
}

json report_json(const LawReport& rep) {
  json out;
  out["pass"] = rep.pass;
  out["violations"] = json::array();
  for (const auto& v : rep.violations)
    out["violations"].push_back({{"law", v.law}, {"witness", v.witness}});
  out["checked"] = json::object();
  for (const auto& [k, v] : rep.checked) out["checked"][k] = v;
  // The parallel flag is an execution strategy, not a bound; reports stay
  // byte-identical across serial and parallel runs.
  out["bounds"] = {{"max_arity", rep.bounds.max_arity},
                   {"max_nesting", rep.bounds.max_nesting},
                   {"max_cells_per_frame", rep.bounds.max_cells_per_frame}};
  return out;
}

}  // namespace fcmt::cli
