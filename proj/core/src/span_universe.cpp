#include "fcmt/span_universe.hpp"

#include <algorithm>
#include <unordered_set>

#include "fcmt/errors.hpp"

namespace fcmt {

namespace {

std::uint64_t table_key(std::uint32_t dom, std::uint32_t cod,
                        const std::vector<std::uint32_t>& table) {
  detail::Fnv64 h;
  h.feed_u32(dom);
  h.feed_u32(cod);
  h.feed_u64(table.size());
  for (auto v : table) h.feed_u32(v);
  return h.digest();
}

std::string tuple_name(const SpanUniverse& u, std::span<const std::uint32_t> span_path,
                       const std::vector<std::uint32_t>& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ",";
    out += u.spans[span_path[i]].apex[tuple[i]];
  }
  return out + ")";
}

}  // namespace

std::optional<std::uint32_t> SpanUniverse::set_index(const std::string& name) const {
  for (std::uint32_t i = 0; i < sets.size(); ++i)
    if (sets[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::uint32_t> SpanUniverse::span_index(const std::string& name) const {
  for (std::uint32_t i = 0; i < spans.size(); ++i)
    if (spans[i].name == name) return i;
  return std::nullopt;
}

void SpanUniverse::validate() const {
  std::unordered_set<std::string> names;
  for (const auto& s : sets) {
    if (s.name.empty()) throw MalformedUniverse("a set has no name");
    if (!names.insert(s.name).second) throw MalformedUniverse("duplicate set name '" + s.name + "'");
    std::unordered_set<std::string> es;
    for (const auto& e : s.elems)
      if (!es.insert(e).second)
        throw MalformedUniverse("duplicate element '" + e + "' in set '" + s.name + "'");
  }
  names.clear();
  for (const auto& f : functions) {
    if (f.name.empty()) throw MalformedUniverse("a function has no name");
    if (!names.insert(f.name).second)
      throw MalformedUniverse("duplicate function name '" + f.name + "'");
    if (f.dom >= sets.size() || f.cod >= sets.size())
      throw MalformedUniverse("function '" + f.name + "' references a missing set");
    if (f.table.size() != sets[f.dom].size())
      throw MalformedUniverse("function '" + f.name + "' table does not cover its domain");
    for (auto v : f.table)
      if (v >= sets[f.cod].size())
        throw MalformedUniverse("function '" + f.name + "' has a value outside its codomain");
  }
  names.clear();
  for (const auto& sp : spans) {
    if (sp.name.empty()) throw MalformedUniverse("a span has no name");
    if (!names.insert(sp.name).second)
      throw MalformedUniverse("duplicate span name '" + sp.name + "'");
    if (sp.src >= sets.size() || sp.dst >= sets.size())
      throw MalformedUniverse("span '" + sp.name + "' references a missing set");
    if (sp.leg_l.size() != sp.apex.size() || sp.leg_r.size() != sp.apex.size())
      throw MalformedUniverse("span '" + sp.name + "' legs do not cover its apex");
    std::unordered_set<std::string> es;
    for (const auto& e : sp.apex)
      if (!es.insert(e).second)
        throw MalformedUniverse("duplicate apex element '" + e + "' in span '" + sp.name + "'");
    for (auto v : sp.leg_l)
      if (v >= sets[sp.src].size())
        throw MalformedUniverse("span '" + sp.name + "' left leg leaves its source set");
    for (auto v : sp.leg_r)
      if (v >= sets[sp.dst].size())
        throw MalformedUniverse("span '" + sp.name + "' right leg leaves its target set");
    if (partial_bijections_only) {
      if (!sp.leg_l_injective()) throw NotMonic(sp.name, "left");
      if (!sp.leg_r_injective()) throw NotMonic(sp.name, "right");
    }
  }
}

PathLimit compute_path_limit(const SpanUniverse& u, std::span<const std::uint32_t> span_path,
                             std::uint32_t anchor_set) {
  PathLimit L;
  L.length = span_path.size();
  if (span_path.empty()) {
    if (anchor_set >= u.sets.size()) throw MalformedPath("anchor set out of range");
    L.start_set = L.end_set = anchor_set;
    for (std::uint32_t i = 0; i < u.sets[anchor_set].size(); ++i) {
      L.tuples.push_back({});
      L.start_proj.push_back(i);
      L.end_proj.push_back(i);
    }
    return L;
  }
  for (std::size_t i = 0; i < span_path.size(); ++i) {
    if (span_path[i] >= u.spans.size()) throw MalformedPath("span index out of range");
    if (i + 1 < span_path.size() && u.spans[span_path[i]].dst != u.spans[span_path[i + 1]].src)
      throw MalformedPath("steps " + std::to_string(i) + " and " + std::to_string(i + 1) +
                          " are not composable");
  }
  L.start_set = u.spans[span_path.front()].src;
  L.end_set = u.spans[span_path.back()].dst;

  std::vector<std::uint32_t> cur(span_path.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == span_path.size()) {
      L.tuples.push_back(cur);
      L.start_proj.push_back(u.spans[span_path.front()].leg_l[cur.front()]);
      L.end_proj.push_back(u.spans[span_path.back()].leg_r[cur.back()]);
      return;
    }
    const SpanData& sp = u.spans[span_path[i]];
    for (std::uint32_t a = 0; a < sp.apex.size(); ++a) {
      if (i > 0) {
        const SpanData& prev = u.spans[span_path[i - 1]];
        if (prev.leg_r[cur[i - 1]] != sp.leg_l[a]) continue;
      }
      cur[i] = a;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return L;
}

SpanData path_limit(const SpanUniverse& u, const std::vector<std::uint32_t>& span_path,
                    std::optional<std::uint32_t> anchor_set) {
  if (span_path.empty()) {
    if (!anchor_set) throw MalformedPath("empty path needs an anchor set");
    if (*anchor_set >= u.sets.size()) throw MalformedPath("anchor set out of range");
    const FinSet& s = u.sets[*anchor_set];
    SpanData out;
    out.name = "id(" + s.name + ")";
    out.src = out.dst = *anchor_set;
    out.apex = s.elems;
    for (std::uint32_t i = 0; i < s.size(); ++i) {
      out.leg_l.push_back(i);
      out.leg_r.push_back(i);
    }
    return out;
  }
  if (span_path.size() == 1) {
    if (span_path[0] >= u.spans.size()) throw MalformedPath("span index out of range");
    return u.spans[span_path[0]];
  }
  PathLimit L = compute_path_limit(u, span_path, 0);
  SpanData out;
  out.name = "limit(";
  for (std::size_t i = 0; i < span_path.size(); ++i) {
    if (i) out.name += ",";
    out.name += u.spans[span_path[i]].name;
  }
  out.name += ")";
  out.src = L.start_set;
  out.dst = L.end_set;
  for (std::size_t t = 0; t < L.size(); ++t) {
    out.apex.push_back(tuple_name(u, span_path, L.tuples[t]));
    out.leg_l.push_back(L.start_proj[t]);
    out.leg_r.push_back(L.end_proj[t]);
  }
  return out;
}

SpanData path_limit(const SpanUniverse& u, const std::vector<std::string>& span_names,
                    const std::string& anchor_set_name) {
  std::vector<std::uint32_t> idx;
  for (const auto& n : span_names) {
    auto i = u.span_index(n);
    if (!i) throw MalformedPath("unknown span '" + n + "'");
    idx.push_back(*i);
  }
  std::optional<std::uint32_t> anchor;
  if (idx.empty()) {
    auto a = u.set_index(anchor_set_name);
    if (!a) throw MalformedPath("unknown anchor set '" + anchor_set_name + "'");
    anchor = *a;
  }
  return path_limit(u, idx, anchor);
}

SpanFcOracle::SpanFcOracle(SpanUniverse u) : u_(std::move(u)) {
  u_.validate();

  auto add_vertical = [&](Vertical v) -> std::uint32_t {
    std::uint64_t key = table_key(v.dom, v.cod, v.table);
    auto& bucket = vert_lookup_[key];
    for (auto i : bucket) {
      if (verts_[i].dom == v.dom && verts_[i].cod == v.cod && verts_[i].table == v.table) return i;
    }
    std::uint32_t idx = static_cast<std::uint32_t>(verts_.size());
    bucket.push_back(idx);
    verts_.push_back(std::move(v));
    return idx;
  };

  for (std::uint32_t s = 0; s < u_.sets.size(); ++s) {
    Vertical v;
    v.name = "id_" + u_.sets[s].name;
    v.dom = v.cod = s;
    for (std::uint32_t i = 0; i < u_.sets[s].size(); ++i) v.table.push_back(i);
    add_vertical(std::move(v));
  }
  for (const FinFunction& f : u_.functions) add_vertical({f.name, f.dom, f.cod, f.table});

  // Close the verticals under composition so they form a category.
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = verts_.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        if (verts_[i].cod != verts_[j].dom) continue;
        Vertical c;
        c.dom = verts_[i].dom;
        c.cod = verts_[j].cod;
        c.table.reserve(verts_[i].table.size());
        for (auto v : verts_[i].table) c.table.push_back(verts_[j].table[v]);
        c.name = "(" + verts_[j].name + "." + verts_[i].name + ")";
        std::size_t before = verts_.size();
        add_vertical(std::move(c));
        if (verts_.size() > before) grew = true;
      }
    }
  }
}

std::vector<ObjectId> SpanFcOracle::objects() const {
  std::vector<ObjectId> out;
  for (std::uint32_t i = 0; i < u_.sets.size(); ++i) out.push_back(ObjectId{i});
  return out;
}

VertId SpanFcOracle::vert_id(std::uint32_t vert_index) const {
  const Vertical& v = verts_[vert_index];
  return VertId{vert_index, ObjectId{v.dom}, ObjectId{v.cod}};
}

std::vector<VertId> SpanFcOracle::verticals(ObjectId from, ObjectId to) const {
  check_object(from);
  check_object(to);
  std::vector<VertId> out;
  for (std::uint32_t i = 0; i < verts_.size(); ++i)
    if (verts_[i].dom == from.index && verts_[i].cod == to.index) out.push_back(vert_id(i));
  return out;
}

std::vector<HorId> SpanFcOracle::horizontals(ObjectId from, ObjectId to) const {
  check_object(from);
  check_object(to);
  std::vector<HorId> out;
  for (std::uint32_t i = 0; i < u_.spans.size(); ++i)
    if (u_.spans[i].src == from.index && u_.spans[i].dst == to.index)
      out.push_back(HorId{i, from, to});
  return out;
}

VertId SpanFcOracle::id_vert(ObjectId x) const {
  check_object(x);
  // Identities were added first, one per set, in set order.
  return vert_id(x.index);
}

VertId SpanFcOracle::compose_vert(VertId g, VertId f) const {
  check_vertical(g);
  check_vertical(f);
  if (f.cod != g.dom) throw FcError("compose_vert: not composable");
  std::vector<std::uint32_t> table;
  table.reserve(verts_[f.index].table.size());
  for (auto v : verts_[f.index].table) table.push_back(verts_[g.index].table[v]);
  auto found = vertical_by_table(f.dom.index, g.cod.index, table);
  if (!found) throw FcError("compose_vert: composite escaped the closure");
  return *found;
}

PathLimit SpanFcOracle::limit_of(const Path& p) const {
  std::vector<std::uint32_t> idx;
  idx.reserve(p.cells.size());
  for (const HorId& m : p.cells) {
    check_horizontal(m);
    idx.push_back(m.index);
  }
  std::uint32_t anchor = 0;
  if (p.empty()) {
    check_object(p.anchor);
    anchor = p.anchor.index;
  }
  return compute_path_limit(u_, idx, anchor);
}

std::vector<TwoCell> SpanFcOracle::cells(const Frame& frame) const {
  check_frame(frame);
  PathLimit L = limit_of(frame.source);
  const SpanData& tgt = u_.spans[frame.target.index];
  const auto& f = verts_[frame.left.index].table;
  const auto& g = verts_[frame.right.index].table;

  std::vector<std::vector<std::uint32_t>> candidates(L.size());
  for (std::size_t t = 0; t < L.size(); ++t) {
    for (std::uint32_t a = 0; a < tgt.apex.size(); ++a)
      if (tgt.leg_l[a] == f[L.start_proj[t]] && tgt.leg_r[a] == g[L.end_proj[t]])
        candidates[t].push_back(a);
    if (candidates[t].empty()) return {};
  }

  std::vector<TwoCell> out;
  std::vector<std::uint32_t> pick(L.size());
  auto rec = [&](auto&& self, std::size_t t) -> void {
    if (t == L.size()) {
      out.push_back(intern(frame, pick));
      return;
    }
    for (auto a : candidates[t]) {
      pick[t] = a;
      self(self, t + 1);
    }
  };
  rec(rec, 0);
  return out;
}

TwoCell SpanFcOracle::id_cell(HorId m) const {
  check_horizontal(m);
  Frame fr;
  fr.source = Path::of({m});
  fr.left = id_vert(m.src);
  fr.right = id_vert(m.dst);
  fr.target = m;
  std::vector<std::uint32_t> table;
  for (std::uint32_t a = 0; a < u_.spans[m.index].apex.size(); ++a) table.push_back(a);
  return intern(fr, std::move(table));
}

TwoCell SpanFcOracle::compose_raw(const TwoCell& theta, std::span<const TwoCell> children,
                                  std::span<const VertId> boundary) const {
  std::vector<std::uint32_t> theta_table = lookup_table(theta);
  std::vector<std::vector<std::uint32_t>> child_tables;
  child_tables.reserve(children.size());
  for (const auto& c : children) child_tables.push_back(lookup_table(c));
  for (const auto& v : boundary) check_vertical(v);

  Frame out_frame;
  if (children.empty()) {
    out_frame.source = Path::empty_at(boundary[0].dom);
  } else {
    Path acc = children[0].frame.source;
    for (std::size_t i = 1; i < children.size(); ++i)
      acc = Path::concat(acc, children[i].frame.source);
    out_frame.source = acc;
  }
  out_frame.left = compose_vert(theta.frame.left, boundary.front());
  out_frame.right = compose_vert(theta.frame.right, boundary.back());
  out_frame.target = theta.frame.target;

  PathLimit full = limit_of(out_frame.source);
  PathLimit mid = limit_of(theta.frame.source);

  struct VecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
      detail::Fnv64 h;
      for (auto x : v) h.feed_u32(x);
      return static_cast<std::size_t>(h.digest());
    }
  };
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VecHash> mid_index;
  for (std::uint32_t t = 0; t < mid.size(); ++t) mid_index.emplace(mid.tuples[t], t);

  // Per-child limit ordinals keyed by subtuple; nullary children consume the
  // seam element instead and their limit ordinal is that element's index.
  std::vector<std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VecHash>> child_index(
      children.size());
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (children[i].frame.arity() == 0) continue;
    PathLimit cl = limit_of(children[i].frame.source);
    for (std::uint32_t t = 0; t < cl.size(); ++t) child_index[i].emplace(cl.tuples[t], t);
  }

  std::vector<std::uint32_t> out_table(full.size());
  std::vector<std::uint32_t> mid_tuple(children.size());
  std::vector<std::uint32_t> sub;
  for (std::uint32_t t = 0; t < full.size(); ++t) {
    std::uint32_t seam = full.start_proj.empty() ? 0 : full.start_proj[t];
    std::size_t pos = 0;
    for (std::size_t i = 0; i < children.size(); ++i) {
      const std::size_t r = children[i].frame.arity();
      std::uint32_t ordinal;
      if (r == 0) {
        ordinal = seam;
      } else {
        sub.assign(full.tuples[t].begin() + pos, full.tuples[t].begin() + pos + r);
        auto it = child_index[i].find(sub);
        if (it == child_index[i].end())
          throw FcError("compose_raw: child subtuple missing from its limit");
        ordinal = it->second;
        const HorId last = children[i].frame.source.cells.back();
        seam = u_.spans[last.index].leg_r[sub.back()];
        pos += r;
      }
      mid_tuple[i] = child_tables[i][ordinal];
    }
    std::uint32_t mid_ordinal;
    if (children.empty()) {
      // Pure whiskering: precompose with the boundary vertical.
      mid_ordinal = verts_[boundary[0].index].table[full.start_proj[t]];
    } else {
      auto it = mid_index.find(mid_tuple);
      if (it == mid_index.end())
        throw FcError("compose_raw: children do not land in the middle limit");
      mid_ordinal = it->second;
    }
    out_table[t] = theta_table[mid_ordinal];
  }
  return intern(out_frame, std::move(out_table));
}

TwoCell SpanFcOracle::make_cell(const Frame& frame, const std::vector<std::uint32_t>& table) const {
  check_frame(frame);
  PathLimit L = limit_of(frame.source);
  const SpanData& tgt = u_.spans[frame.target.index];
  if (table.size() != L.size())
    throw FrameError("cell table has " + std::to_string(table.size()) + " entries, limit has " +
                     std::to_string(L.size()));
  const auto& f = verts_[frame.left.index].table;
  const auto& g = verts_[frame.right.index].table;
  for (std::size_t t = 0; t < L.size(); ++t) {
    if (table[t] >= tgt.apex.size()) throw FrameError("cell table value outside the target apex");
    if (tgt.leg_l[table[t]] != f[L.start_proj[t]])
      throw FrameError("cell table does not commute with the left leg at tuple " +
                       std::to_string(t));
    if (tgt.leg_r[table[t]] != g[L.end_proj[t]])
      throw FrameError("cell table does not commute with the right leg at tuple " +
                       std::to_string(t));
  }
  return intern(frame, table);
}

std::vector<std::uint32_t> SpanFcOracle::cell_table(const TwoCell& c) const {
  return lookup_table(c);
}

std::string SpanFcOracle::describe(ObjectId x) const {
  check_object(x);
  return u_.sets[x.index].name;
}

std::string SpanFcOracle::describe(VertId f) const {
  check_vertical(f);
  return verts_[f.index].name;
}

std::string SpanFcOracle::describe(HorId m) const {
  check_horizontal(m);
  return u_.spans[m.index].name;
}

std::string SpanFcOracle::describe_cell(const TwoCell& c) const {
  std::vector<std::uint32_t> table;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cell_store_.find(c.id.value);
    if (it == cell_store_.end()) return FcOracle::describe_cell(c);
    table = it->second;
  }
  PathLimit L = limit_of(c.frame.source);
  const SpanData& tgt = u_.spans[c.frame.target.index];
  std::string out = "{";
  for (std::size_t t = 0; t < table.size(); ++t) {
    if (t) out += ",";
    if (L.length == 0)
      out += u_.sets[L.start_set].elems[t];
    else if (L.length == 1)
      out += u_.spans[c.frame.source.cells[0].index].apex[L.tuples[t][0]];
    else {
      std::vector<std::uint32_t> idx;
      for (const HorId& m : c.frame.source.cells) idx.push_back(m.index);
      out += tuple_name(u_, idx, L.tuples[t]);
    }
    out += "->" + tgt.apex[table[t]];
  }
  return out + "}";
}

ObjectId SpanFcOracle::object(std::uint32_t set_index) const {
  ObjectId x{set_index};
  check_object(x);
  return x;
}

std::optional<ObjectId> SpanFcOracle::object_named(const std::string& set_name) const {
  auto i = u_.set_index(set_name);
  if (!i) return std::nullopt;
  return ObjectId{*i};
}

HorId SpanFcOracle::horizontal(std::uint32_t span_index) const {
  if (span_index >= u_.spans.size()) throw UnknownCell("span index out of range");
  const SpanData& s = u_.spans[span_index];
  return HorId{span_index, ObjectId{s.src}, ObjectId{s.dst}};
}

std::optional<HorId> SpanFcOracle::horizontal_named(const std::string& span_name) const {
  auto i = u_.span_index(span_name);
  if (!i) return std::nullopt;
  return horizontal(*i);
}

std::optional<VertId> SpanFcOracle::vertical_named(const std::string& function_name) const {
  for (std::uint32_t i = 0; i < verts_.size(); ++i)
    if (verts_[i].name == function_name) return vert_id(i);
  return std::nullopt;
}

std::optional<VertId> SpanFcOracle::vertical_by_table(std::uint32_t dom_set, std::uint32_t cod_set,
                                                      const std::vector<std::uint32_t>& table) const {
  auto it = vert_lookup_.find(table_key(dom_set, cod_set, table));
  if (it == vert_lookup_.end()) return std::nullopt;
  for (auto i : it->second)
    if (verts_[i].dom == dom_set && verts_[i].cod == cod_set && verts_[i].table == table)
      return vert_id(i);
  return std::nullopt;
}

const std::vector<std::uint32_t>& SpanFcOracle::vertical_table(VertId f) const {
  check_vertical(f);
  return verts_[f.index].table;
}

void SpanFcOracle::check_object(ObjectId x) const {
  if (x.index >= u_.sets.size()) throw UnknownCell("object not in this universe");
}

void SpanFcOracle::check_vertical(VertId f) const {
  if (f.index >= verts_.size() || verts_[f.index].dom != f.dom.index ||
      verts_[f.index].cod != f.cod.index)
    throw UnknownCell("vertical not in this universe");
}

void SpanFcOracle::check_horizontal(HorId m) const {
  if (m.index >= u_.spans.size() || u_.spans[m.index].src != m.src.index ||
      u_.spans[m.index].dst != m.dst.index)
    throw UnknownCell("horizontal not in this universe");
}

void SpanFcOracle::check_frame(const Frame& f) const {
  for (const HorId& m : f.source.cells) check_horizontal(m);
  if (f.source.empty()) check_object(f.source.anchor);
  check_vertical(f.left);
  check_vertical(f.right);
  check_horizontal(f.target);
  f.validate();
}

TwoCell SpanFcOracle::intern(const Frame& frame, std::vector<std::uint32_t> table) const {
  detail::Fnv64 h;
  detail::feed_frame(h, frame);
  h.feed_u64(table.size());
  for (auto v : table) h.feed_u32(v);
  std::uint64_t id = h.digest();

  std::lock_guard<std::mutex> lock(mu_);
  auto it = cell_store_.find(id);
  if (it != cell_store_.end()) {
    if (it->second != table) throw InternCollision("span cell digest clash");
  } else {
    cell_store_.emplace(id, std::move(table));
  }
  return TwoCell{CellId{id}, frame};
}

std::vector<std::uint32_t> SpanFcOracle::lookup_table(const TwoCell& c) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cell_store_.find(c.id.value);
  if (it == cell_store_.end()) throw UnknownCell("cell " + std::to_string(c.id.value));
  return it->second;
}

std::shared_ptr<const SpanFcOracle> span_fc(SpanUniverse u) {
  return std::make_shared<SpanFcOracle>(std::move(u));
}

std::shared_ptr<const SpanFcOracle> parbjn_check_and_restrict(SpanUniverse u) {
  for (const auto& sp : u.spans) {
    if (!sp.leg_l_injective()) throw NotMonic(sp.name, "left");
    if (!sp.leg_r_injective()) throw NotMonic(sp.name, "right");
  }
  u.partial_bijections_only = true;
  return span_fc(std::move(u));
}

}  // namespace fcmt
