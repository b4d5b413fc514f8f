#include "fcmt/monoidal.hpp"

#include "fcmt/errors.hpp"

namespace fcmt {

std::optional<std::uint32_t> StrictMonoidalPresentation::object_index(
    const std::string& name) const {
  for (std::uint32_t i = 0; i < objects.size(); ++i)
    if (objects[i] == name) return i;
  return std::nullopt;
}

std::optional<std::uint32_t> StrictMonoidalPresentation::morphism_index(
    const std::string& name) const {
  for (std::uint32_t i = 0; i < morphisms.size(); ++i)
    if (morphisms[i].name == name) return i;
  return std::nullopt;
}

void StrictMonoidalPresentation::validate_structure() const {
  if (unit >= objects.size()) throw MalformedPresentation("unit object out of range");
  if (tensor_obj.size() != objects.size())
    throw MalformedPresentation("object tensor table has the wrong size");
  for (const auto& row : tensor_obj) {
    if (row.size() != objects.size())
      throw MalformedPresentation("object tensor table has a ragged row");
    for (auto v : row)
      if (v >= objects.size()) throw MalformedPresentation("object tensor value out of range");
  }
  for (const auto& f : morphisms)
    if (f.dom >= objects.size() || f.cod >= objects.size())
      throw MalformedPresentation("morphism '" + f.name + "' has endpoints out of range");
  if (identities.size() != objects.size())
    throw MalformedPresentation("identity table has the wrong size");
  for (std::uint32_t a = 0; a < identities.size(); ++a) {
    if (identities[a] >= morphisms.size())
      throw MalformedPresentation("identity of '" + objects[a] + "' out of range");
    const auto& id = morphisms[identities[a]];
    if (id.dom != a || id.cod != a)
      throw MalformedPresentation("identity of '" + objects[a] + "' is not an endomorphism");
  }
  for (std::uint32_t g = 0; g < morphisms.size(); ++g)
    for (std::uint32_t f = 0; f < morphisms.size(); ++f) {
      if (morphisms[g].dom == morphisms[f].cod) {
        auto it = compose.find(key(g, f));
        if (it == compose.end())
          throw MalformedPresentation("composition table misses " + morphisms[g].name + " o " +
                                      morphisms[f].name);
        if (it->second >= morphisms.size())
          throw MalformedPresentation("composition value out of range");
        const auto& c = morphisms[it->second];
        if (c.dom != morphisms[f].dom || c.cod != morphisms[g].cod)
          throw MalformedPresentation("composite of " + morphisms[g].name + " o " +
                                      morphisms[f].name + " has the wrong endpoints");
      }
      auto it = tensor_mor.find(key(g, f));
      if (it == tensor_mor.end())
        throw MalformedPresentation("tensor table misses " + morphisms[g].name + " (x) " +
                                    morphisms[f].name);
      if (it->second >= morphisms.size()) throw MalformedPresentation("tensor value out of range");
      const auto& t = morphisms[it->second];
      if (t.dom != tensor_obj[morphisms[g].dom][morphisms[f].dom] ||
          t.cod != tensor_obj[morphisms[g].cod][morphisms[f].cod])
        throw MalformedPresentation("tensor of " + morphisms[g].name + " (x) " +
                                    morphisms[f].name + " has the wrong endpoints");
    }
}

LawReport StrictMonoidalPresentation::check_laws() const {
  LawReport rep;
  const std::size_t N = objects.size();
  for (std::size_t a = 0; a < N; ++a) {
    rep.count("object-unit", 2);
    if (tensor_obj[a][unit] != a) rep.add("object-unit", objects[a] + " (x) I");
    if (tensor_obj[unit][a] != a) rep.add("object-unit", "I (x) " + objects[a]);
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t c = 0; c < N; ++c) {
        rep.count("object-assoc");
        if (tensor_obj[tensor_obj[a][b]][c] != tensor_obj[a][tensor_obj[b][c]])
          rep.add("object-assoc", objects[a] + "," + objects[b] + "," + objects[c]);
      }
  }

  auto comp_of = [&](std::uint32_t g, std::uint32_t f) { return compose.at(key(g, f)); };
  auto tens_of = [&](std::uint32_t f, std::uint32_t g) { return tensor_mor.at(key(f, g)); };

  for (std::uint32_t f = 0; f < morphisms.size(); ++f) {
    rep.count("mor-unit", 2);
    if (comp_of(f, identities[morphisms[f].dom]) != f)
      rep.add("mor-unit", morphisms[f].name + " o id");
    if (comp_of(identities[morphisms[f].cod], f) != f)
      rep.add("mor-unit", "id o " + morphisms[f].name);
  }
  for (std::uint32_t f = 0; f < morphisms.size(); ++f)
    for (std::uint32_t g = 0; g < morphisms.size(); ++g) {
      if (morphisms[g].dom != morphisms[f].cod) continue;
      for (std::uint32_t h = 0; h < morphisms.size(); ++h) {
        if (morphisms[h].dom != morphisms[g].cod) continue;
        rep.count("mor-assoc");
        if (comp_of(h, comp_of(g, f)) != comp_of(comp_of(h, g), f))
          rep.add("mor-assoc",
                  morphisms[h].name + "," + morphisms[g].name + "," + morphisms[f].name);
      }
    }

  for (std::uint32_t a = 0; a < N; ++a)
    for (std::uint32_t b = 0; b < N; ++b) {
      rep.count("tensor-identities");
      if (tens_of(identities[a], identities[b]) != identities[tensor_obj[a][b]])
        rep.add("tensor-identities", objects[a] + "," + objects[b]);
    }

  // Interchange: (g (x) g') o (f (x) f') = (g o f) (x) (g' o f').
  for (std::uint32_t f = 0; f < morphisms.size(); ++f)
    for (std::uint32_t g = 0; g < morphisms.size(); ++g) {
      if (morphisms[g].dom != morphisms[f].cod) continue;
      for (std::uint32_t f2 = 0; f2 < morphisms.size(); ++f2)
        for (std::uint32_t g2 = 0; g2 < morphisms.size(); ++g2) {
          if (morphisms[g2].dom != morphisms[f2].cod) continue;
          rep.count("tensor-functorial");
          if (comp_of(tens_of(g, g2), tens_of(f, f2)) != tens_of(comp_of(g, f), comp_of(g2, f2)))
            rep.add("tensor-functorial", morphisms[g].name + "(x)" + morphisms[g2].name + " o " +
                                             morphisms[f].name + "(x)" + morphisms[f2].name);
        }
    }

  // Strict associativity and unit on morphisms.
  for (std::uint32_t f = 0; f < morphisms.size(); ++f) {
    rep.count("tensor-mor-unit", 2);
    if (tens_of(f, identities[unit]) != f) rep.add("tensor-mor-unit", morphisms[f].name + " (x) 1I");
    if (tens_of(identities[unit], f) != f) rep.add("tensor-mor-unit", "1I (x) " + morphisms[f].name);
    for (std::uint32_t g = 0; g < morphisms.size(); ++g)
      for (std::uint32_t h = 0; h < morphisms.size(); ++h) {
        rep.count("tensor-mor-assoc");
        if (tens_of(tens_of(f, g), h) != tens_of(f, tens_of(g, h)))
          rep.add("tensor-mor-assoc",
                  morphisms[f].name + "," + morphisms[g].name + "," + morphisms[h].name);
      }
  }
  rep.pass = rep.violations.empty();
  return rep;
}

MonoidalFcOracle::MonoidalFcOracle(StrictMonoidalPresentation m) : m_(std::move(m)) {
  m_.validate_structure();
  LawReport laws = m_.check_laws();
  if (!laws.pass)
    throw MalformedPresentation("monoidal laws fail: " + laws.violations.front().law + " at " +
                                laws.violations.front().witness);
}

std::vector<ObjectId> MonoidalFcOracle::objects() const { return {ObjectId{0}}; }

std::vector<VertId> MonoidalFcOracle::verticals(ObjectId from, ObjectId to) const {
  if (from.index != 0 || to.index != 0) throw UnknownCell("object not in this oracle");
  return {VertId{0, ObjectId{0}, ObjectId{0}}};
}

std::vector<HorId> MonoidalFcOracle::horizontals(ObjectId from, ObjectId to) const {
  if (from.index != 0 || to.index != 0) throw UnknownCell("object not in this oracle");
  std::vector<HorId> out;
  for (std::uint32_t i = 0; i < m_.objects.size(); ++i) out.push_back(horizontal(i));
  return out;
}

VertId MonoidalFcOracle::id_vert(ObjectId x) const {
  if (x.index != 0) throw UnknownCell("object not in this oracle");
  return VertId{0, ObjectId{0}, ObjectId{0}};
}

VertId MonoidalFcOracle::compose_vert(VertId g, VertId f) const {
  if (g.index != 0 || f.index != 0) throw UnknownCell("vertical not in this oracle");
  return g;
}

HorId MonoidalFcOracle::horizontal(std::uint32_t object_index) const {
  if (object_index >= m_.objects.size()) throw UnknownCell("object index out of range");
  return HorId{object_index, ObjectId{0}, ObjectId{0}};
}

std::optional<HorId> MonoidalFcOracle::horizontal_named(const std::string& object_name) const {
  auto i = m_.object_index(object_name);
  if (!i) return std::nullopt;
  return horizontal(*i);
}

std::uint32_t MonoidalFcOracle::frame_dom(const Frame& frame) const {
  // M_n (x) ... (x) M_1, the unit for an empty path.
  std::uint32_t acc = m_.unit;
  for (auto it = frame.source.cells.rbegin(); it != frame.source.cells.rend(); ++it)
    acc = m_.tensor_obj[acc][it->index];
  return acc;
}

void MonoidalFcOracle::check_frame(const Frame& f) const {
  for (const HorId& m : f.source.cells)
    if (m.index >= m_.objects.size() || m.src.index != 0 || m.dst.index != 0)
      throw UnknownCell("horizontal not in this oracle");
  if (f.target.index >= m_.objects.size() || f.target.src.index != 0 || f.target.dst.index != 0)
    throw UnknownCell("horizontal not in this oracle");
  if (f.left.index != 0 || f.right.index != 0) throw UnknownCell("vertical not in this oracle");
  f.validate();
}

std::vector<TwoCell> MonoidalFcOracle::cells(const Frame& frame) const {
  check_frame(frame);
  const std::uint32_t dom = frame_dom(frame);
  std::vector<TwoCell> out;
  for (std::uint32_t i = 0; i < m_.morphisms.size(); ++i)
    if (m_.morphisms[i].dom == dom && m_.morphisms[i].cod == frame.target.index)
      out.push_back(intern(frame, i));
  return out;
}

TwoCell MonoidalFcOracle::id_cell(HorId m) const {
  if (m.index >= m_.objects.size() || m.src.index != 0 || m.dst.index != 0)
    throw UnknownCell("horizontal not in this oracle");
  Frame fr;
  fr.source = Path::of({m});
  fr.left = fr.right = VertId{0, ObjectId{0}, ObjectId{0}};
  fr.target = m;
  return intern(fr, m_.identities[m.index]);
}

TwoCell MonoidalFcOracle::compose_raw(const TwoCell& theta, std::span<const TwoCell> children,
                                      std::span<const VertId> boundary) const {
  (void)boundary;
  std::uint32_t theta_mor = cell_morphism(theta);

  // theta o (chi_n (x) ... (x) chi_1)
  std::uint32_t tens = m_.identities[m_.unit];
  for (auto it = children.rbegin(); it != children.rend(); ++it)
    tens = m_.tensor_mor.at(StrictMonoidalPresentation::key(tens, cell_morphism(*it)));
  std::uint32_t composite = m_.compose.at(StrictMonoidalPresentation::key(theta_mor, tens));

  Frame fr;
  if (children.empty()) {
    fr.source = Path::empty_at(ObjectId{0});
  } else {
    Path acc = children[0].frame.source;
    for (std::size_t i = 1; i < children.size(); ++i)
      acc = Path::concat(acc, children[i].frame.source);
    fr.source = acc;
  }
  fr.left = fr.right = VertId{0, ObjectId{0}, ObjectId{0}};
  fr.target = theta.frame.target;
  return intern(fr, composite);
}

TwoCell MonoidalFcOracle::make_cell(const Frame& frame, std::uint32_t morphism_index) const {
  check_frame(frame);
  if (morphism_index >= m_.morphisms.size()) throw FrameError("morphism index out of range");
  const auto& mor = m_.morphisms[morphism_index];
  if (mor.dom != frame_dom(frame))
    throw FrameError("morphism '" + mor.name + "' does not start at the reversed tensor of the source");
  if (mor.cod != frame.target.index)
    throw FrameError("morphism '" + mor.name + "' does not land on the target");
  return intern(frame, morphism_index);
}

TwoCell MonoidalFcOracle::make_cell(const Frame& frame, const std::string& morphism_name) const {
  auto i = m_.morphism_index(morphism_name);
  if (!i) throw FrameError("unknown morphism '" + morphism_name + "'");
  return make_cell(frame, *i);
}

std::uint32_t MonoidalFcOracle::cell_morphism(const TwoCell& c) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cell_store_.find(c.id.value);
  if (it == cell_store_.end()) throw UnknownCell("cell " + std::to_string(c.id.value));
  return it->second;
}

std::string MonoidalFcOracle::describe(ObjectId x) const {
  if (x.index != 0) throw UnknownCell("object not in this oracle");
  return "*";
}

std::string MonoidalFcOracle::describe(VertId f) const {
  if (f.index != 0) throw UnknownCell("vertical not in this oracle");
  return "1";
}

std::string MonoidalFcOracle::describe(HorId m) const {
  if (m.index >= m_.objects.size()) throw UnknownCell("horizontal not in this oracle");
  return m_.objects[m.index];
}

std::string MonoidalFcOracle::describe_cell(const TwoCell& c) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cell_store_.find(c.id.value);
  if (it == cell_store_.end()) return FcOracle::describe_cell(c);
  return m_.morphisms[it->second].name;
}

TwoCell MonoidalFcOracle::intern(const Frame& frame, std::uint32_t morphism) const {
  detail::Fnv64 h;
  detail::feed_frame(h, frame);
  h.feed_u32(morphism);
  std::uint64_t id = h.digest();
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cell_store_.find(id);
  if (it != cell_store_.end()) {
    if (it->second != morphism) throw InternCollision("monoidal cell digest clash");
  } else {
    cell_store_.emplace(id, morphism);
  }
  return TwoCell{CellId{id}, frame};
}

std::shared_ptr<const MonoidalFcOracle> monoidal_fc(StrictMonoidalPresentation m) {
  return std::make_shared<MonoidalFcOracle>(std::move(m));
}

}  // namespace fcmt
