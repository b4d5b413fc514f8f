#include "fcmt/multicat.hpp"

#include <algorithm>

#include "fcmt/errors.hpp"

namespace fcmt {

namespace {

std::uint32_t flattened_arity(const MulticatPresentation& p,
                              const std::vector<std::uint32_t>& children) {
  std::uint32_t n = 0;
  for (auto c : children) n += static_cast<std::uint32_t>(p.ops[c].inputs.size());
  return n;
}

/// Enumerates well-typed children tuples for `op` whose flattened arity is
/// at most `cap`.
void for_each_children(const MulticatPresentation& p, std::uint32_t op, std::uint32_t cap,
                       const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  const auto& inputs = p.ops[op].inputs;
  std::vector<std::uint32_t> pick(inputs.size());
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t remaining) -> void {
    if (i == inputs.size()) {
      fn(pick);
      return;
    }
    for (std::uint32_t c = 0; c < p.ops.size(); ++c) {
      if (p.ops[c].output != inputs[i]) continue;
      auto a = static_cast<std::uint32_t>(p.ops[c].inputs.size());
      if (a > remaining) continue;
      pick[i] = c;
      self(self, i + 1, remaining - a);
    }
  };
  rec(rec, 0, cap);
}

}  // namespace

std::optional<std::uint32_t> MulticatPresentation::object_index(const std::string& name) const {
  for (std::uint32_t i = 0; i < objects.size(); ++i)
    if (objects[i] == name) return i;
  return std::nullopt;
}

std::optional<std::uint32_t> MulticatPresentation::op_index(const std::string& name) const {
  for (std::uint32_t i = 0; i < ops.size(); ++i)
    if (ops[i].name == name) return i;
  return std::nullopt;
}

void MulticatPresentation::validate_structure() const {
  for (const auto& op : ops) {
    if (op.inputs.size() > arity_bound)
      throw MalformedPresentation("operation '" + op.name + "' exceeds the arity bound");
    if (op.output >= objects.size())
      throw MalformedPresentation("operation '" + op.name + "' output out of range");
    for (auto i : op.inputs)
      if (i >= objects.size())
        throw MalformedPresentation("operation '" + op.name + "' input out of range");
  }
  if (identities.size() != objects.size())
    throw MalformedPresentation("identity table has the wrong size");
  for (std::uint32_t c = 0; c < identities.size(); ++c) {
    if (identities[c] >= ops.size())
      throw MalformedPresentation("identity of '" + objects[c] + "' out of range");
    const Op& id = ops[identities[c]];
    if (id.inputs.size() != 1 || id.inputs[0] != c || id.output != c)
      throw MalformedPresentation("identity of '" + objects[c] + "' is not a unary endo-operation");
  }
  for (std::uint32_t op = 0; op < ops.size(); ++op) {
    for_each_children(*this, op, arity_bound, [&](const std::vector<std::uint32_t>& children) {
      std::vector<std::uint32_t> key{op};
      key.insert(key.end(), children.begin(), children.end());
      auto it = compose.find(key);
      if (it == compose.end())
        throw MalformedPresentation("composition table misses an entry for '" + ops[op].name + "'");
      if (it->second >= ops.size()) throw MalformedPresentation("composition value out of range");
      const Op& result = ops[it->second];
      std::vector<std::uint32_t> expect;
      for (auto c : children)
        expect.insert(expect.end(), ops[c].inputs.begin(), ops[c].inputs.end());
      if (result.inputs != expect || result.output != ops[op].output)
        throw MalformedPresentation("composite of '" + ops[op].name + "' has the wrong profile");
    });
  }
}

LawReport MulticatPresentation::check_laws() const {
  LawReport rep;
  auto comp = [&](std::uint32_t op, const std::vector<std::uint32_t>& children) {
    std::vector<std::uint32_t> key{op};
    key.insert(key.end(), children.begin(), children.end());
    return compose.at(key);
  };

  for (std::uint32_t op = 0; op < ops.size(); ++op) {
    std::vector<std::uint32_t> ids;
    for (auto i : ops[op].inputs) ids.push_back(identities[i]);
    rep.count("multicat-unit", 2);
    if (comp(op, ids) != op) rep.add("multicat-unit", ops[op].name + " o identities");
    if (comp(identities[ops[op].output], {op}) != op)
      rep.add("multicat-unit", "identity o " + ops[op].name);
  }

  for (std::uint32_t op = 0; op < ops.size(); ++op) {
    for_each_children(*this, op, arity_bound, [&](const std::vector<std::uint32_t>& children) {
      std::vector<std::uint32_t> mid = children;
      // Grandchild tuples, slot by slot, flattened arity within bound.
      std::vector<std::vector<std::uint32_t>> gc(children.size());
      auto rec = [&](auto&& self, std::size_t slot, std::uint32_t remaining) -> void {
        if (slot == children.size()) {
          std::uint32_t once = comp(op, mid);
          std::vector<std::uint32_t> flat;
          for (const auto& g : gc) flat.insert(flat.end(), g.begin(), g.end());
          std::uint32_t lhs = comp(once, flat);
          std::vector<std::uint32_t> inner;
          for (std::size_t i = 0; i < children.size(); ++i) inner.push_back(comp(children[i], gc[i]));
          std::uint32_t rhs = comp(op, inner);
          rep.count("multicat-assoc");
          if (lhs != rhs)
            rep.add("multicat-assoc", ops[op].name + " over " + std::to_string(children.size()) +
                                          " children");
          return;
        }
        for_each_children(*this, children[slot], remaining,
                          [&](const std::vector<std::uint32_t>& g) {
                            gc[slot] = g;
                            self(self, slot + 1, remaining - flattened_arity(*this, g));
                          });
      };
      rec(rec, 0, arity_bound);
    });
  }
  rep.pass = rep.violations.empty();
  return rep;
}

MulticatPresentation terminal_multicat(std::uint32_t arity_bound) {
  MulticatPresentation p;
  p.objects = {"x"};
  p.arity_bound = arity_bound;
  for (std::uint32_t n = 0; n <= arity_bound; ++n) {
    MulticatPresentation::Op op;
    op.name = "t" + std::to_string(n);
    op.inputs.assign(n, 0);
    op.output = 0;
    p.ops.push_back(op);
  }
  p.identities = {1};
  for (std::uint32_t op = 0; op < p.ops.size(); ++op)
    for_each_children(p, op, arity_bound, [&](const std::vector<std::uint32_t>& children) {
      std::vector<std::uint32_t> key{op};
      key.insert(key.end(), children.begin(), children.end());
      p.compose[key] = flattened_arity(p, children);
    });
  return p;
}

MulticatPresentation monoid_multicat(const std::vector<std::string>& elems,
                                     const std::vector<std::vector<std::uint32_t>>& table,
                                     std::uint32_t unit, std::uint32_t arity_bound) {
  MulticatPresentation p;
  p.objects = {"m"};
  p.arity_bound = arity_bound;
  // One operation per (element, arity).
  auto op_of = [&](std::uint32_t e, std::uint32_t n) {
    return n * static_cast<std::uint32_t>(elems.size()) + e;
  };
  for (std::uint32_t n = 0; n <= arity_bound; ++n)
    for (std::uint32_t e = 0; e < elems.size(); ++e) {
      MulticatPresentation::Op op;
      op.name = elems[e] + "/" + std::to_string(n);
      op.inputs.assign(n, 0);
      op.output = 0;
      p.ops.push_back(op);
    }
  p.identities = {op_of(unit, 1)};
  auto elem_of = [&](std::uint32_t op) { return op % elems.size(); };
  for (std::uint32_t op = 0; op < p.ops.size(); ++op)
    for_each_children(p, op, arity_bound, [&](const std::vector<std::uint32_t>& children) {
      std::uint32_t acc = elem_of(op);
      for (auto c : children) acc = table[acc][elem_of(c)];
      std::vector<std::uint32_t> key{op};
      key.insert(key.end(), children.begin(), children.end());
      p.compose[key] = op_of(acc, flattened_arity(p, children));
    });
  return p;
}

MulticatFcOracle::MulticatFcOracle(MulticatPresentation p, bool check_laws) : p_(std::move(p)) {
  p_.validate_structure();
  if (check_laws) {
    LawReport laws = p_.check_laws();
    if (!laws.pass)
      throw MalformedPresentation("multicategory laws fail: " + laws.violations.front().law +
                                  " at " + laws.violations.front().witness);
  }
}

std::vector<ObjectId> MulticatFcOracle::objects() const { return {ObjectId{0}}; }

std::vector<VertId> MulticatFcOracle::verticals(ObjectId from, ObjectId to) const {
  if (from.index != 0 || to.index != 0) throw UnknownCell("object not in this oracle");
  return {VertId{0, ObjectId{0}, ObjectId{0}}};
}

std::vector<HorId> MulticatFcOracle::horizontals(ObjectId from, ObjectId to) const {
  if (from.index != 0 || to.index != 0) throw UnknownCell("object not in this oracle");
  std::vector<HorId> out;
  for (std::uint32_t i = 0; i < p_.objects.size(); ++i) out.push_back(color(i));
  return out;
}

VertId MulticatFcOracle::id_vert(ObjectId x) const {
  if (x.index != 0) throw UnknownCell("object not in this oracle");
  return VertId{0, ObjectId{0}, ObjectId{0}};
}

VertId MulticatFcOracle::compose_vert(VertId g, VertId f) const {
  if (g.index != 0 || f.index != 0) throw UnknownCell("vertical not in this oracle");
  return g;
}

HorId MulticatFcOracle::color(std::uint32_t index) const {
  if (index >= p_.objects.size()) throw UnknownCell("color index out of range");
  return HorId{index, ObjectId{0}, ObjectId{0}};
}

std::optional<HorId> MulticatFcOracle::color_named(const std::string& name) const {
  auto i = p_.object_index(name);
  if (!i) return std::nullopt;
  return color(*i);
}

void MulticatFcOracle::check_frame(const Frame& f) const {
  for (const HorId& m : f.source.cells)
    if (m.index >= p_.objects.size() || m.src.index != 0 || m.dst.index != 0)
      throw UnknownCell("horizontal not in this oracle");
  if (f.target.index >= p_.objects.size() || f.target.src.index != 0 || f.target.dst.index != 0)
    throw UnknownCell("horizontal not in this oracle");
  if (f.left.index != 0 || f.right.index != 0) throw UnknownCell("vertical not in this oracle");
  f.validate();
}

std::vector<TwoCell> MulticatFcOracle::cells(const Frame& frame) const {
  check_frame(frame);
  if (frame.arity() > p_.arity_bound) throw ArityBoundExceeded(frame.arity(), p_.arity_bound);
  std::vector<std::uint32_t> profile;
  for (const HorId& m : frame.source.cells) profile.push_back(m.index);
  std::vector<TwoCell> out;
  for (std::uint32_t i = 0; i < p_.ops.size(); ++i)
    if (p_.ops[i].inputs == profile && p_.ops[i].output == frame.target.index)
      out.push_back(intern(frame, i));
  return out;
}

TwoCell MulticatFcOracle::id_cell(HorId m) const {
  if (m.index >= p_.objects.size()) throw UnknownCell("horizontal not in this oracle");
  Frame fr;
  fr.source = Path::of({m});
  fr.left = fr.right = VertId{0, ObjectId{0}, ObjectId{0}};
  fr.target = m;
  return intern(fr, p_.identities[m.index]);
}

TwoCell MulticatFcOracle::compose_raw(const TwoCell& theta, std::span<const TwoCell> children,
                                      std::span<const VertId> boundary) const {
  (void)boundary;
  std::vector<std::uint32_t> key{op_of_cell(theta)};
  for (const auto& c : children) key.push_back(op_of_cell(c));

  Frame fr;
  if (children.empty()) {
    fr.source = Path::empty_at(ObjectId{0});
  } else {
    Path acc = children[0].frame.source;
    for (std::size_t i = 1; i < children.size(); ++i)
      acc = Path::concat(acc, children[i].frame.source);
    fr.source = acc;
  }
  if (fr.source.size() > p_.arity_bound)
    throw ArityBoundExceeded(fr.source.size(), p_.arity_bound);
  fr.left = fr.right = VertId{0, ObjectId{0}, ObjectId{0}};
  fr.target = theta.frame.target;

  auto it = p_.compose.find(key);
  if (it == p_.compose.end()) throw FcError("compose_raw: missing composition entry");
  return intern(fr, it->second);
}

TwoCell MulticatFcOracle::cell_of_op(std::uint32_t op_index) const {
  if (op_index >= p_.ops.size()) throw UnknownCell("operation index out of range");
  const auto& op = p_.ops[op_index];
  Frame fr;
  std::vector<HorId> src;
  for (auto i : op.inputs) src.push_back(color(i));
  fr.source = src.empty() ? Path::empty_at(ObjectId{0}) : Path::of(src);
  fr.left = fr.right = VertId{0, ObjectId{0}, ObjectId{0}};
  fr.target = color(op.output);
  return intern(fr, op_index);
}

TwoCell MulticatFcOracle::cell_of_op(const std::string& op_name) const {
  auto i = p_.op_index(op_name);
  if (!i) throw UnknownCell("unknown operation '" + op_name + "'");
  return cell_of_op(*i);
}

std::uint32_t MulticatFcOracle::op_of_cell(const TwoCell& c) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cell_store_.find(c.id.value);
  if (it == cell_store_.end()) throw UnknownCell("cell " + std::to_string(c.id.value));
  return it->second;
}

std::string MulticatFcOracle::describe(ObjectId x) const {
  if (x.index != 0) throw UnknownCell("object not in this oracle");
  return "*";
}

std::string MulticatFcOracle::describe(VertId f) const {
  if (f.index != 0) throw UnknownCell("vertical not in this oracle");
  return "1";
}

std::string MulticatFcOracle::describe(HorId m) const {
  if (m.index >= p_.objects.size()) throw UnknownCell("horizontal not in this oracle");
  return p_.objects[m.index];
}

std::string MulticatFcOracle::describe_cell(const TwoCell& c) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cell_store_.find(c.id.value);
  if (it == cell_store_.end()) return FcOracle::describe_cell(c);
  return p_.ops[it->second].name;
}

TwoCell MulticatFcOracle::intern(const Frame& frame, std::uint32_t op) const {
  detail::Fnv64 h;
  detail::feed_frame(h, frame);
  h.feed_u32(op);
  std::uint64_t id = h.digest();
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cell_store_.find(id);
  if (it != cell_store_.end()) {
    if (it->second != op) throw InternCollision("multicat cell digest clash");
  } else {
    cell_store_.emplace(id, op);
  }
  return TwoCell{CellId{id}, frame};
}

std::shared_ptr<const MulticatFcOracle> multicat_fc(MulticatPresentation p) {
  return std::make_shared<MulticatFcOracle>(std::move(p));
}

std::shared_ptr<const MulticatFcOracle> multicat_fc_unchecked(MulticatPresentation p) {
  return std::make_shared<MulticatFcOracle>(std::move(p), false);
}

GeneratedEndoMulticat generated_endo_multicat(const FinSet& carrier,
                                              const std::vector<std::uint32_t>& mult_table,
                                              std::uint32_t unit, std::uint32_t arity_bound) {
  const std::size_t n = carrier.size();
  auto power = [&](std::size_t a) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < a; ++i) out *= n;
    return out;
  };
  if (mult_table.size() != power(2)) throw MalformedData("mult table has the wrong size");
  for (auto v : mult_table)
    if (v >= n) throw MalformedData("mult table value outside the carrier");
  if (unit >= n) throw MalformedData("unit outside the carrier");

  struct Op {
    std::size_t arity;
    std::vector<std::uint32_t> table;
  };
  auto name_of = [](const Op& op) {
    std::string s = "op" + std::to_string(op.arity) + "_";
    for (auto v : op.table) s += std::to_string(v);
    return s;
  };
  std::vector<Op> ops;
  auto substitute = [&](std::uint32_t outer, const std::vector<std::uint32_t>& children) {
    Op out;
    out.arity = 0;
    for (auto c : children) out.arity += ops[c].arity;
    out.table.assign(power(out.arity), 0);
    std::vector<std::uint32_t> digits(out.arity, 0);
    for (std::size_t t = 0; t < out.table.size(); ++t) {
      std::size_t rem = t;
      for (std::size_t i = out.arity; i-- > 0;) {
        digits[i] = static_cast<std::uint32_t>(rem % n);
        rem /= n;
      }
      std::size_t mid = 0;
      std::size_t pos = 0;
      for (auto c : children) {
        std::size_t sub = 0;
        for (std::size_t j = 0; j < ops[c].arity; ++j) sub = sub * n + digits[pos + j];
        pos += ops[c].arity;
        mid = mid * n + ops[c].table[sub];
      }
      out.table[t] = ops[outer].table[mid];
    }
    return out;
  };

  std::unordered_map<std::string, std::uint32_t> index;
  auto add = [&](Op op) {
    std::string key = name_of(op);
    auto it = index.find(key);
    if (it != index.end()) return std::make_pair(it->second, false);
    std::uint32_t i = static_cast<std::uint32_t>(ops.size());
    index.emplace(key, i);
    ops.push_back(std::move(op));
    return std::make_pair(i, true);
  };

  Op identity{1, {}};
  for (std::uint32_t i = 0; i < n; ++i) identity.table.push_back(i);
  std::uint32_t id_index = add(identity).first;
  std::uint32_t unit_index = add(Op{0, {unit}}).first;
  std::uint32_t mult_index = add(Op{2, mult_table}).first;

  // Close under composition within the arity bound.
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = ops.size();
    for (std::uint32_t o = 0; o < count; ++o) {
      const std::size_t k = ops[o].arity;
      std::vector<std::uint32_t> pick(k, 0);
      auto rec = [&](auto&& self, std::size_t slot, std::size_t remaining) -> void {
        if (slot == k) {
          if (add(substitute(o, pick)).second) grew = true;
          return;
        }
        for (std::uint32_t c = 0; c < count; ++c) {
          if (ops[c].arity > remaining) continue;
          pick[slot] = c;
          self(self, slot + 1, remaining - ops[c].arity);
        }
      };
      rec(rec, 0, arity_bound);
    }
  }

  GeneratedEndoMulticat out;
  out.presentation.objects = {carrier.name};
  out.presentation.arity_bound = arity_bound;
  for (const Op& op : ops) {
    MulticatPresentation::Op po;
    po.name = name_of(op);
    po.inputs.assign(op.arity, 0);
    po.output = 0;
    out.presentation.ops.push_back(std::move(po));
  }
  out.presentation.identities = {id_index};
  for (std::uint32_t o = 0; o < ops.size(); ++o) {
    const std::size_t k = ops[o].arity;
    std::vector<std::uint32_t> pick(k, 0);
    auto rec = [&](auto&& self, std::size_t slot, std::size_t remaining) -> void {
      if (slot == k) {
        std::vector<std::uint32_t> key{o};
        key.insert(key.end(), pick.begin(), pick.end());
        Op composite = substitute(o, pick);
        out.presentation.compose[key] = index.at(name_of(composite));
        return;
      }
      for (std::uint32_t c = 0; c < ops.size(); ++c) {
        if (ops[c].arity > remaining) continue;
        pick[slot] = c;
        self(self, slot + 1, remaining - ops[c].arity);
      }
    };
    rec(rec, 0, arity_bound);
  }
  out.mult_op = out.presentation.ops[mult_index].name;
  out.unit_op = out.presentation.ops[unit_index].name;
  return out;
}

EndoMulticatOracle::EndoMulticatOracle(FinSet carrier) : s_(std::move(carrier)) {}

std::size_t EndoMulticatOracle::power(std::size_t n) const {
  std::size_t out = 1;
  for (std::size_t i = 0; i < n; ++i) out *= s_.size();
  return out;
}

std::vector<ObjectId> EndoMulticatOracle::objects() const { return {ObjectId{0}}; }

std::vector<VertId> EndoMulticatOracle::verticals(ObjectId from, ObjectId to) const {
  if (from.index != 0 || to.index != 0) throw UnknownCell("object not in this oracle");
  return {VertId{0, ObjectId{0}, ObjectId{0}}};
}

std::vector<HorId> EndoMulticatOracle::horizontals(ObjectId from, ObjectId to) const {
  if (from.index != 0 || to.index != 0) throw UnknownCell("object not in this oracle");
  return {hom()};
}

VertId EndoMulticatOracle::id_vert(ObjectId x) const {
  if (x.index != 0) throw UnknownCell("object not in this oracle");
  return VertId{0, ObjectId{0}, ObjectId{0}};
}

VertId EndoMulticatOracle::compose_vert(VertId g, VertId f) const {
  if (g.index != 0 || f.index != 0) throw UnknownCell("vertical not in this oracle");
  return g;
}

Frame EndoMulticatOracle::op_frame(std::size_t arity) const {
  Frame fr;
  std::vector<HorId> src(arity, hom());
  fr.source = src.empty() ? Path::empty_at(ObjectId{0}) : Path::of(src);
  fr.left = fr.right = VertId{0, ObjectId{0}, ObjectId{0}};
  fr.target = hom();
  return fr;
}

void EndoMulticatOracle::check_frame(const Frame& f) const {
  for (const HorId& m : f.source.cells)
    if (m.index != 0 || m.src.index != 0 || m.dst.index != 0)
      throw UnknownCell("horizontal not in this oracle");
  if (f.target.index != 0) throw UnknownCell("horizontal not in this oracle");
  if (f.left.index != 0 || f.right.index != 0) throw UnknownCell("vertical not in this oracle");
  f.validate();
}

std::vector<TwoCell> EndoMulticatOracle::cells(const Frame& frame) const {
  check_frame(frame);
  const std::size_t domain = power(frame.arity());
  if (s_.size() == 0) {
    if (domain == 0) {
      std::vector<std::uint32_t> empty;
      return {intern(frame, empty)};
    }
    return {};
  }
  // |S|^domain tables; refuse absurd enumerations up front.
  double count = 1;
  for (std::size_t i = 0; i < domain; ++i) {
    count *= static_cast<double>(s_.size());
    if (count > 1e7)
      throw BudgetExceeded(describe(frame) + " (operation set too large to enumerate)", 10000000);
  }
  std::vector<TwoCell> out;
  std::vector<std::uint32_t> table(domain, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == domain) {
      out.push_back(intern(frame, table));
      return;
    }
    for (std::uint32_t v = 0; v < s_.size(); ++v) {
      table[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

TwoCell EndoMulticatOracle::id_cell(HorId m) const {
  if (m.index != 0) throw UnknownCell("horizontal not in this oracle");
  std::vector<std::uint32_t> table;
  for (std::uint32_t i = 0; i < s_.size(); ++i) table.push_back(i);
  return intern(op_frame(1), std::move(table));
}

TwoCell EndoMulticatOracle::compose_raw(const TwoCell& theta, std::span<const TwoCell> children,
                                        std::span<const VertId> boundary) const {
  (void)boundary;
  std::vector<std::uint32_t> theta_table = op_table(theta);
  if (children.empty()) return theta;

  std::vector<std::vector<std::uint32_t>> tables;
  std::vector<std::size_t> arities;
  std::size_t total = 0;
  for (const auto& c : children) {
    tables.push_back(op_table(c));
    arities.push_back(c.frame.arity());
    total += c.frame.arity();
  }

  const std::size_t domain = power(total);
  std::vector<std::uint32_t> out(domain, 0);
  std::vector<std::uint32_t> digits(total, 0);
  for (std::size_t t = 0; t < domain; ++t) {
    // Decode t into coordinates, last fastest.
    std::size_t rem = t;
    for (std::size_t i = total; i-- > 0;) {
      digits[i] = static_cast<std::uint32_t>(rem % s_.size());
      rem /= s_.size();
    }
    std::size_t mid_index = 0;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < children.size(); ++i) {
      std::size_t sub = 0;
      for (std::size_t j = 0; j < arities[i]; ++j) sub = sub * s_.size() + digits[pos + j];
      pos += arities[i];
      mid_index = mid_index * s_.size() + tables[i][sub];
    }
    out[t] = theta_table[mid_index];
  }
  return intern(op_frame(total), std::move(out));
}

TwoCell EndoMulticatOracle::make_op(std::size_t arity,
                                    const std::vector<std::uint32_t>& table) const {
  if (table.size() != power(arity)) throw FrameError("operation table has the wrong size");
  for (auto v : table)
    if (v >= s_.size()) throw FrameError("operation table value outside the carrier");
  return intern(op_frame(arity), table);
}

std::vector<std::uint32_t> EndoMulticatOracle::op_table(const TwoCell& c) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cell_store_.find(c.id.value);
  if (it == cell_store_.end()) throw UnknownCell("cell " + std::to_string(c.id.value));
  return it->second;
}

std::string EndoMulticatOracle::describe(ObjectId x) const {
  if (x.index != 0) throw UnknownCell("object not in this oracle");
  return "*";
}

std::string EndoMulticatOracle::describe(VertId f) const {
  if (f.index != 0) throw UnknownCell("vertical not in this oracle");
  return "1";
}

std::string EndoMulticatOracle::describe(HorId m) const {
  if (m.index != 0) throw UnknownCell("horizontal not in this oracle");
  return s_.name;
}

std::string EndoMulticatOracle::describe_cell(const TwoCell& c) const {
  std::vector<std::uint32_t> table;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cell_store_.find(c.id.value);
    if (it == cell_store_.end()) return FcOracle::describe_cell(c);
    table = it->second;
  }
  std::string out = "op[";
  for (std::size_t i = 0; i < table.size() && i < 16; ++i) {
    if (i) out += ",";
    out += s_.elems[table[i]];
  }
  if (table.size() > 16) out += ",+" + std::to_string(table.size() - 16);
  return out + "]";
}

TwoCell EndoMulticatOracle::intern(const Frame& frame, std::vector<std::uint32_t> table) const {
  detail::Fnv64 h;
  detail::feed_frame(h, frame);
  h.feed_u64(table.size());
  for (auto v : table) h.feed_u32(v);
  std::uint64_t id = h.digest();
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cell_store_.find(id);
  if (it != cell_store_.end()) {
    if (it->second != table) throw InternCollision("endo multicat cell digest clash");
  } else {
    cell_store_.emplace(id, std::move(table));
  }
  return TwoCell{CellId{id}, frame};
}

std::shared_ptr<const EndoMulticatOracle> endo_multicat(FinSet carrier) {
  return std::make_shared<EndoMulticatOracle>(std::move(carrier));
}

}  // namespace fcmt
