#include "fcmt/double_cat.hpp"

#include "fcmt/errors.hpp"

namespace fcmt {

void StrictDoublePresentation::validate_structure() const {
  try {
    vertical.check();
    horizontal.check();
  } catch (const NotACategory& e) {
    throw MalformedPresentation(std::string("arrow category: ") + e.what());
  }
  if (vertical.objects != horizontal.objects)
    throw MalformedPresentation("vertical and horizontal categories have different objects");

  for (const auto& s : squares) {
    if (s.top >= horizontal.morphisms.size() || s.bottom >= horizontal.morphisms.size() ||
        s.left >= vertical.morphisms.size() || s.right >= vertical.morphisms.size())
      throw MalformedPresentation("square '" + s.name + "' references a missing arrow");
    const auto& t = horizontal.morphisms[s.top];
    const auto& b = horizontal.morphisms[s.bottom];
    const auto& l = vertical.morphisms[s.left];
    const auto& r = vertical.morphisms[s.right];
    if (l.dom != t.dom || r.dom != t.cod || l.cod != b.dom || r.cod != b.cod)
      throw MalformedPresentation("square '" + s.name + "' has an inconsistent boundary");
  }
  auto expect_square = [&](std::uint32_t idx, const char* what) {
    if (idx >= squares.size()) throw MalformedPresentation(std::string(what) + " out of range");
  };
  if (hid.size() != vertical.morphisms.size())
    throw MalformedPresentation("hid table has the wrong size");
  for (std::uint32_t f = 0; f < hid.size(); ++f) {
    expect_square(hid[f], "hid");
    const auto& s = squares[hid[f]];
    const auto& vm = vertical.morphisms[f];
    if (s.left != f || s.right != f || s.top != horizontal.identities[vm.dom] ||
        s.bottom != horizontal.identities[vm.cod])
      throw MalformedPresentation("hid of '" + vm.name + "' has the wrong boundary");
  }
  if (vid.size() != horizontal.morphisms.size())
    throw MalformedPresentation("vid table has the wrong size");
  for (std::uint32_t m = 0; m < vid.size(); ++m) {
    expect_square(vid[m], "vid");
    const auto& s = squares[vid[m]];
    const auto& hm = horizontal.morphisms[m];
    if (s.top != m || s.bottom != m || s.left != vertical.identities[hm.dom] ||
        s.right != vertical.identities[hm.cod])
      throw MalformedPresentation("vid of '" + hm.name + "' has the wrong boundary");
  }

  for (std::uint32_t a = 0; a < squares.size(); ++a)
    for (std::uint32_t b = 0; b < squares.size(); ++b) {
      if (squares[a].right == squares[b].left) {
        auto it = hcomp.find(key(b, a));
        if (it == hcomp.end())
          throw MalformedPresentation("hcomp misses " + squares[b].name + " | " + squares[a].name);
        expect_square(it->second, "hcomp value");
        const auto& s = squares[it->second];
        if (s.top != horizontal.comp(squares[b].top, squares[a].top) || s.left != squares[a].left ||
            s.right != squares[b].right ||
            s.bottom != horizontal.comp(squares[b].bottom, squares[a].bottom))
          throw MalformedPresentation("hcomp of " + squares[b].name + " | " + squares[a].name +
                                      " has the wrong boundary");
      }
      if (squares[a].bottom == squares[b].top) {
        auto it = vcomp.find(key(b, a));
        if (it == vcomp.end())
          throw MalformedPresentation("vcomp misses " + squares[a].name + " / " + squares[b].name);
        expect_square(it->second, "vcomp value");
        const auto& s = squares[it->second];
        if (s.top != squares[a].top || s.bottom != squares[b].bottom ||
            s.left != vertical.comp(squares[b].left, squares[a].left) ||
            s.right != vertical.comp(squares[b].right, squares[a].right))
          throw MalformedPresentation("vcomp of " + squares[a].name + " / " + squares[b].name +
                                      " has the wrong boundary");
      }
    }
}

LawReport StrictDoublePresentation::check_laws() const {
  LawReport rep;
  auto hc = [&](std::uint32_t b, std::uint32_t a) { return hcomp.at(key(b, a)); };
  auto vc = [&](std::uint32_t b, std::uint32_t a) { return vcomp.at(key(b, a)); };

  for (std::uint32_t a = 0; a < squares.size(); ++a) {
    rep.count("dbl-h-unit", 2);
    if (hc(a, hid[squares[a].left]) != a) rep.add("dbl-h-unit", squares[a].name + " after hid");
    if (hc(hid[squares[a].right], a) != a) rep.add("dbl-h-unit", "hid after " + squares[a].name);
    rep.count("dbl-v-unit", 2);
    if (vc(a, vid[squares[a].top]) != a) rep.add("dbl-v-unit", squares[a].name + " under vid");
    if (vc(vid[squares[a].bottom], a) != a) rep.add("dbl-v-unit", "vid under " + squares[a].name);
  }

  for (std::uint32_t a = 0; a < squares.size(); ++a)
    for (std::uint32_t b = 0; b < squares.size(); ++b) {
      if (squares[a].right == squares[b].left) {
        for (std::uint32_t c = 0; c < squares.size(); ++c) {
          if (squares[b].right != squares[c].left) continue;
          rep.count("dbl-h-assoc");
          if (hc(c, hc(b, a)) != hc(hc(c, b), a))
            rep.add("dbl-h-assoc", squares[c].name + "|" + squares[b].name + "|" + squares[a].name);
        }
      }
      if (squares[a].bottom == squares[b].top) {
        for (std::uint32_t c = 0; c < squares.size(); ++c) {
          if (squares[b].bottom != squares[c].top) continue;
          rep.count("dbl-v-assoc");
          if (vc(c, vc(b, a)) != vc(vc(c, b), a))
            rep.add("dbl-v-assoc", squares[a].name + "/" + squares[b].name + "/" + squares[c].name);
        }
      }
    }

  // Interchange over 2x2 grids: a|b on top, c|d below.
  for (std::uint32_t a = 0; a < squares.size(); ++a)
    for (std::uint32_t b = 0; b < squares.size(); ++b) {
      if (squares[a].right != squares[b].left) continue;
      for (std::uint32_t c = 0; c < squares.size(); ++c) {
        if (squares[a].bottom != squares[c].top) continue;
        for (std::uint32_t d = 0; d < squares.size(); ++d) {
          if (squares[c].right != squares[d].left || squares[b].bottom != squares[d].top) continue;
          rep.count("dbl-interchange");
          if (vc(hc(d, c), hc(b, a)) != hc(vc(d, b), vc(c, a)))
            rep.add("dbl-interchange",
                    squares[a].name + "," + squares[b].name + "," + squares[c].name + "," +
                        squares[d].name);
        }
      }
    }

  // Identity squares are functorial and agree on identities.
  for (std::uint32_t f = 0; f < vertical.morphisms.size(); ++f)
    for (std::uint32_t g = 0; g < vertical.morphisms.size(); ++g) {
      if (vertical.morphisms[f].cod != vertical.morphisms[g].dom) continue;
      rep.count("dbl-hid-functorial");
      if (vc(hid[g], hid[f]) != hid[vertical.comp(g, f)])
        rep.add("dbl-hid-functorial",
                vertical.morphisms[g].name + " o " + vertical.morphisms[f].name);
    }
  for (std::uint32_t m = 0; m < horizontal.morphisms.size(); ++m)
    for (std::uint32_t n = 0; n < horizontal.morphisms.size(); ++n) {
      if (horizontal.morphisms[m].cod != horizontal.morphisms[n].dom) continue;
      rep.count("dbl-vid-functorial");
      if (hc(vid[n], vid[m]) != vid[horizontal.comp(n, m)])
        rep.add("dbl-vid-functorial",
                horizontal.morphisms[n].name + " o " + horizontal.morphisms[m].name);
    }
  for (std::uint32_t x = 0; x < vertical.objects.size(); ++x) {
    rep.count("dbl-id-square");
    if (hid[vertical.identities[x]] != vid[horizontal.identities[x]])
      rep.add("dbl-id-square", vertical.objects[x]);
  }
  rep.pass = rep.violations.empty();
  return rep;
}

StrictDoublePresentation commuting_double(const FinCategory& c) {
  c.check();
  StrictDoublePresentation d;
  d.vertical = c;
  d.horizontal = c;

  std::unordered_map<std::uint64_t, std::uint32_t> by_boundary;
  auto bkey = [&](std::uint32_t t, std::uint32_t l, std::uint32_t r, std::uint32_t b) {
    detail::Fnv64 h;
    h.feed_u32(t);
    h.feed_u32(l);
    h.feed_u32(r);
    h.feed_u32(b);
    return h.digest();
  };

  for (std::uint32_t t = 0; t < c.morphisms.size(); ++t)
    for (std::uint32_t l = 0; l < c.morphisms.size(); ++l) {
      if (c.morphisms[l].dom != c.morphisms[t].dom) continue;
      for (std::uint32_t r = 0; r < c.morphisms.size(); ++r) {
        if (c.morphisms[r].dom != c.morphisms[t].cod) continue;
        for (std::uint32_t b = 0; b < c.morphisms.size(); ++b) {
          if (c.morphisms[b].dom != c.morphisms[l].cod || c.morphisms[b].cod != c.morphisms[r].cod)
            continue;
          if (c.comp(r, t) != c.comp(b, l)) continue;
          StrictDoublePresentation::Square s;
          s.name = "sq" + std::to_string(d.squares.size());
          s.top = t;
          s.left = l;
          s.right = r;
          s.bottom = b;
          by_boundary[bkey(t, l, r, b)] = static_cast<std::uint32_t>(d.squares.size());
          d.squares.push_back(s);
        }
      }
    }

  auto find_square = [&](std::uint32_t t, std::uint32_t l, std::uint32_t r, std::uint32_t b) {
    return by_boundary.at(bkey(t, l, r, b));
  };

  for (std::uint32_t a = 0; a < d.squares.size(); ++a)
    for (std::uint32_t b = 0; b < d.squares.size(); ++b) {
      const auto& A = d.squares[a];
      const auto& B = d.squares[b];
      if (A.right == B.left)
        d.hcomp[StrictDoublePresentation::key(b, a)] =
            find_square(c.comp(B.top, A.top), A.left, B.right, c.comp(B.bottom, A.bottom));
      if (A.bottom == B.top)
        d.vcomp[StrictDoublePresentation::key(b, a)] =
            find_square(A.top, c.comp(B.left, A.left), c.comp(B.right, A.right), B.bottom);
    }

  for (std::uint32_t f = 0; f < c.morphisms.size(); ++f) {
    const auto& m = c.morphisms[f];
    d.hid.push_back(find_square(c.identities[m.dom], f, f, c.identities[m.cod]));
    d.vid.push_back(find_square(f, c.identities[m.dom], c.identities[m.cod], f));
  }
  return d;
}

DoubleFcOracle::DoubleFcOracle(StrictDoublePresentation d) : d_(std::move(d)) {
  d_.validate_structure();
  LawReport laws = d_.check_laws();
  if (!laws.pass)
    throw MalformedPresentation("double category laws fail: " + laws.violations.front().law +
                                " at " + laws.violations.front().witness);
}

std::vector<ObjectId> DoubleFcOracle::objects() const {
  std::vector<ObjectId> out;
  for (std::uint32_t i = 0; i < d_.vertical.objects.size(); ++i) out.push_back(ObjectId{i});
  return out;
}

VertId DoubleFcOracle::vert_id(std::uint32_t i) const {
  const auto& m = d_.vertical.morphisms[i];
  return VertId{i, ObjectId{m.dom}, ObjectId{m.cod}};
}

HorId DoubleFcOracle::hor_id(std::uint32_t i) const {
  const auto& m = d_.horizontal.morphisms[i];
  return HorId{i, ObjectId{m.dom}, ObjectId{m.cod}};
}

std::vector<VertId> DoubleFcOracle::verticals(ObjectId from, ObjectId to) const {
  if (from.index >= d_.vertical.objects.size() || to.index >= d_.vertical.objects.size())
    throw UnknownCell("object not in this oracle");
  std::vector<VertId> out;
  for (std::uint32_t i = 0; i < d_.vertical.morphisms.size(); ++i)
    if (d_.vertical.morphisms[i].dom == from.index && d_.vertical.morphisms[i].cod == to.index)
      out.push_back(vert_id(i));
  return out;
}

std::vector<HorId> DoubleFcOracle::horizontals(ObjectId from, ObjectId to) const {
  if (from.index >= d_.vertical.objects.size() || to.index >= d_.vertical.objects.size())
    throw UnknownCell("object not in this oracle");
  std::vector<HorId> out;
  for (std::uint32_t i = 0; i < d_.horizontal.morphisms.size(); ++i)
    if (d_.horizontal.morphisms[i].dom == from.index && d_.horizontal.morphisms[i].cod == to.index)
      out.push_back(hor_id(i));
  return out;
}

VertId DoubleFcOracle::id_vert(ObjectId x) const {
  if (x.index >= d_.vertical.objects.size()) throw UnknownCell("object not in this oracle");
  return vert_id(d_.vertical.identities[x.index]);
}

VertId DoubleFcOracle::compose_vert(VertId g, VertId f) const {
  if (g.index >= d_.vertical.morphisms.size() || f.index >= d_.vertical.morphisms.size())
    throw UnknownCell("vertical not in this oracle");
  if (f.cod != g.dom) throw FcError("compose_vert: not composable");
  return vert_id(d_.vertical.comp(g.index, f.index));
}

std::uint32_t DoubleFcOracle::top_composite(const Path& p) const {
  if (p.empty()) return d_.horizontal.identities[p.anchor.index];
  std::uint32_t acc = p.cells[0].index;
  for (std::size_t i = 1; i < p.cells.size(); ++i)
    acc = d_.horizontal.comp(p.cells[i].index, acc);
  return acc;
}

void DoubleFcOracle::check_frame(const Frame& f) const {
  for (const HorId& m : f.source.cells)
    if (m.index >= d_.horizontal.morphisms.size() ||
        d_.horizontal.morphisms[m.index].dom != m.src.index ||
        d_.horizontal.morphisms[m.index].cod != m.dst.index)
      throw UnknownCell("horizontal not in this oracle");
  if (f.source.empty() && f.source.anchor.index >= d_.vertical.objects.size())
    throw UnknownCell("object not in this oracle");
  if (f.target.index >= d_.horizontal.morphisms.size())
    throw UnknownCell("horizontal not in this oracle");
  if (f.left.index >= d_.vertical.morphisms.size() ||
      f.right.index >= d_.vertical.morphisms.size())
    throw UnknownCell("vertical not in this oracle");
  f.validate();
}

std::vector<TwoCell> DoubleFcOracle::cells(const Frame& frame) const {
  check_frame(frame);
  const std::uint32_t top = top_composite(frame.source);
  std::vector<TwoCell> out;
  for (std::uint32_t s = 0; s < d_.squares.size(); ++s) {
    const auto& sq = d_.squares[s];
    if (sq.top == top && sq.left == frame.left.index && sq.right == frame.right.index &&
        sq.bottom == frame.target.index)
      out.push_back(intern(frame, s));
  }
  return out;
}

TwoCell DoubleFcOracle::id_cell(HorId m) const {
  if (m.index >= d_.horizontal.morphisms.size()) throw UnknownCell("horizontal not in this oracle");
  Frame fr;
  fr.source = Path::of({hor_id(m.index)});
  fr.left = id_vert(ObjectId{d_.horizontal.morphisms[m.index].dom});
  fr.right = id_vert(ObjectId{d_.horizontal.morphisms[m.index].cod});
  fr.target = hor_id(m.index);
  return intern(fr, d_.vid[m.index]);
}

TwoCell DoubleFcOracle::compose_raw(const TwoCell& theta, std::span<const TwoCell> children,
                                    std::span<const VertId> boundary) const {
  std::uint32_t row;
  Frame fr;
  if (children.empty()) {
    row = d_.hid[boundary[0].index];
    fr.source = Path::empty_at(boundary[0].dom);
  } else {
    row = square_of_cell(children[0]);
    Path acc = children[0].frame.source;
    for (std::size_t i = 1; i < children.size(); ++i) {
      row = d_.hcomp.at(StrictDoublePresentation::key(square_of_cell(children[i]), row));
      acc = Path::concat(acc, children[i].frame.source);
    }
    fr.source = acc;
  }
  std::uint32_t composite = d_.vcomp.at(StrictDoublePresentation::key(square_of_cell(theta), row));
  fr.left = compose_vert(theta.frame.left, boundary.front());
  fr.right = compose_vert(theta.frame.right, boundary.back());
  fr.target = theta.frame.target;
  return intern(fr, composite);
}

std::uint32_t DoubleFcOracle::square_of_cell(const TwoCell& c) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cell_store_.find(c.id.value);
  if (it == cell_store_.end()) throw UnknownCell("cell " + std::to_string(c.id.value));
  return it->second;
}

std::string DoubleFcOracle::describe(ObjectId x) const {
  if (x.index >= d_.vertical.objects.size()) throw UnknownCell("object not in this oracle");
  return d_.vertical.objects[x.index];
}

std::string DoubleFcOracle::describe(VertId f) const {
  if (f.index >= d_.vertical.morphisms.size()) throw UnknownCell("vertical not in this oracle");
  return d_.vertical.morphisms[f.index].name;
}

std::string DoubleFcOracle::describe(HorId m) const {
  if (m.index >= d_.horizontal.morphisms.size()) throw UnknownCell("horizontal not in this oracle");
  return d_.horizontal.morphisms[m.index].name;
}

std::string DoubleFcOracle::describe_cell(const TwoCell& c) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cell_store_.find(c.id.value);
  if (it == cell_store_.end()) return FcOracle::describe_cell(c);
  return d_.squares[it->second].name;
}

TwoCell DoubleFcOracle::intern(const Frame& frame, std::uint32_t square) const {
  detail::Fnv64 h;
  detail::feed_frame(h, frame);
  h.feed_u32(square);
  std::uint64_t id = h.digest();
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cell_store_.find(id);
  if (it != cell_store_.end()) {
    if (it->second != square) throw InternCollision("double cell digest clash");
  } else {
    cell_store_.emplace(id, square);
  }
  return TwoCell{CellId{id}, frame};
}

std::shared_ptr<const DoubleFcOracle> double_fc(StrictDoublePresentation d) {
  return std::make_shared<DoubleFcOracle>(std::move(d));
}

}  // namespace fcmt
