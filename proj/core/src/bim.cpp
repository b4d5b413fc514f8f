#include "fcmt/bim.hpp"

#include "fcmt/compose.hpp"
#include "fcmt/errors.hpp"

namespace fcmt {

namespace {

/// Composition with the boundary read off the children (valid when n >= 1).
TwoCell compose_derived(const FcOracle& V, const TwoCell& theta,
                        const std::vector<TwoCell>& children) {
  std::vector<VertId> bd;
  bd.push_back(children.front().frame.left);
  for (const auto& c : children) bd.push_back(c.frame.right);
  return compose_cells(V, theta, children, bd);
}

std::string frame_str(const FcOracle& V, const Frame& f) { return V.describe(f); }

}  // namespace

Frame monad_mult_frame(const FcOracle& V, ObjectId carrier, HorId endo) {
  Frame f;
  f.source = Path::of({endo, endo});
  f.left = f.right = V.id_vert(carrier);
  f.target = endo;
  return f;
}

Frame monad_unit_frame(const FcOracle& V, ObjectId carrier, HorId endo) {
  Frame f;
  f.source = Path::empty_at(carrier);
  f.left = f.right = V.id_vert(carrier);
  f.target = endo;
  return f;
}

Frame monad_map_frame(const HorId& src_endo, const HorId& tgt_endo, VertId f) {
  Frame fr;
  fr.source = Path::of({src_endo});
  fr.left = fr.right = f;
  fr.target = tgt_endo;
  return fr;
}

Frame bimodule_act_src_frame(const FcOracle& V, const Bimodule& b) {
  Frame f;
  f.source = Path::of({b.src.endo, b.carrier});
  f.left = V.id_vert(b.src.carrier);
  f.right = V.id_vert(b.tgt.carrier);
  f.target = b.carrier;
  return f;
}

Frame bimodule_act_tgt_frame(const FcOracle& V, const Bimodule& b) {
  Frame f;
  f.source = Path::of({b.carrier, b.tgt.endo});
  f.left = V.id_vert(b.src.carrier);
  f.right = V.id_vert(b.tgt.carrier);
  f.target = b.carrier;
  return f;
}

LawReport check_monad(const FcOracle& V, const Monad& m) {
  if (m.endo.src != m.carrier || m.endo.dst != m.carrier)
    throw FrameError("monad endo-cell is not an endo-cell on the carrier");
  if (m.mult.frame != monad_mult_frame(V, m.carrier, m.endo))
    throw FrameError("monad mult has the wrong frame: " + frame_str(V, m.mult.frame));
  if (m.unit.frame != monad_unit_frame(V, m.carrier, m.endo))
    throw FrameError("monad unit has the wrong frame: " + frame_str(V, m.unit.frame));

  LawReport rep;
  TwoCell idt = id_cell(V, m.endo);

  TwoCell lhs = compose_derived(V, m.mult, {m.mult, idt});
  TwoCell rhs = compose_derived(V, m.mult, {idt, m.mult});
  rep.count("monad-assoc");
  if (lhs != rhs)
    rep.add("monad-assoc", "mu=" + V.describe_cell(m.mult) + ": " + V.describe_cell(lhs) +
                               " != " + V.describe_cell(rhs));

  TwoCell lu = compose_derived(V, m.mult, {m.unit, idt});
  rep.count("monad-unit-left");
  if (lu != idt)
    rep.add("monad-unit-left", "mu=" + V.describe_cell(m.mult) + ", eta=" +
                                   V.describe_cell(m.unit) + ": got " + V.describe_cell(lu));

  TwoCell ru = compose_derived(V, m.mult, {idt, m.unit});
  rep.count("monad-unit-right");
  if (ru != idt)
    rep.add("monad-unit-right", "mu=" + V.describe_cell(m.mult) + ", eta=" +
                                    V.describe_cell(m.unit) + ": got " + V.describe_cell(ru));
  rep.pass = rep.violations.empty();
  return rep;
}

LawReport check_monad_map(const FcOracle& V, const MonadMap& f, const Monad& src,
                          const Monad& tgt) {
  if (f.vert.dom != src.carrier || f.vert.cod != tgt.carrier)
    throw FrameError("monad map vertical does not run between the carriers");
  if (f.cell.frame != monad_map_frame(src.endo, tgt.endo, f.vert))
    throw FrameError("monad map cell has the wrong frame: " + frame_str(V, f.cell.frame));

  LawReport rep;
  TwoCell lhs = compose_derived(V, f.cell, {src.mult});
  TwoCell rhs = compose_derived(V, tgt.mult, {f.cell, f.cell});
  rep.count("monad-map-mult");
  if (lhs != rhs)
    rep.add("monad-map-mult", "phi=" + V.describe_cell(f.cell) + ": " + V.describe_cell(lhs) +
                                  " != " + V.describe_cell(rhs));

  TwoCell lu = compose_derived(V, f.cell, {src.unit});
  TwoCell ru = compose_cells(V, tgt.unit, std::vector<TwoCell>{}, std::vector<VertId>{f.vert});
  rep.count("monad-map-unit");
  if (lu != ru)
    rep.add("monad-map-unit", "phi=" + V.describe_cell(f.cell) + ": " + V.describe_cell(lu) +
                                  " != " + V.describe_cell(ru));
  rep.pass = rep.violations.empty();
  return rep;
}

LawReport check_bimodule(const FcOracle& V, const Bimodule& b) {
  if (b.carrier.src != b.src.carrier || b.carrier.dst != b.tgt.carrier)
    throw FrameError("bimodule carrier does not run between the monad carriers");
  if (b.act_src.frame != bimodule_act_src_frame(V, b))
    throw FrameError("act_src has the wrong frame: " + frame_str(V, b.act_src.frame));
  if (b.act_tgt.frame != bimodule_act_tgt_frame(V, b))
    throw FrameError("act_tgt has the wrong frame: " + frame_str(V, b.act_tgt.frame));

  LawReport rep;
  TwoCell idm = id_cell(V, b.carrier);
  TwoCell ids = id_cell(V, b.src.endo);
  TwoCell idt = id_cell(V, b.tgt.endo);

  {
    TwoCell lhs = compose_derived(V, b.act_src, {b.src.mult, idm});
    TwoCell rhs = compose_derived(V, b.act_src, {ids, b.act_src});
    rep.count("bimodule-assoc-src");
    if (lhs != rhs)
      rep.add("bimodule-assoc-src", V.describe_cell(lhs) + " != " + V.describe_cell(rhs));
  }
  {
    TwoCell lhs = compose_derived(V, b.act_tgt, {idm, b.tgt.mult});
    TwoCell rhs = compose_derived(V, b.act_tgt, {b.act_tgt, idt});
    rep.count("bimodule-assoc-tgt");
    if (lhs != rhs)
      rep.add("bimodule-assoc-tgt", V.describe_cell(lhs) + " != " + V.describe_cell(rhs));
  }
  {
    TwoCell lhs = compose_derived(V, b.act_tgt, {b.act_src, idt});
    TwoCell rhs = compose_derived(V, b.act_src, {ids, b.act_tgt});
    rep.count("bimodule-commute");
    if (lhs != rhs)
      rep.add("bimodule-commute", V.describe_cell(lhs) + " != " + V.describe_cell(rhs));
  }
  {
    TwoCell lhs = compose_derived(V, b.act_src, {b.src.unit, idm});
    rep.count("bimodule-unit-src");
    if (lhs != idm) rep.add("bimodule-unit-src", "got " + V.describe_cell(lhs));
  }
  {
    TwoCell lhs = compose_derived(V, b.act_tgt, {idm, b.tgt.unit});
    rep.count("bimodule-unit-tgt");
    if (lhs != idm) rep.add("bimodule-unit-tgt", "got " + V.describe_cell(lhs));
  }
  rep.pass = rep.violations.empty();
  return rep;
}

LawReport check_bim_cell(const FcOracle& V, const TwoCell& underlying,
                         const BimCellContext& ctx) {
  const std::size_t n = ctx.source.size();
  const Frame& fr = underlying.frame;

  if (fr.source.size() != n) throw FrameError("cell arity differs from the bimodule path");
  for (std::size_t i = 0; i < n; ++i)
    if (fr.source.cells[i] != ctx.source[i].carrier)
      throw FrameError("cell source differs from the bimodule carriers at slot " +
                       std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(ctx.source[i].tgt == ctx.source[i + 1].src))
      throw FrameError("bimodule path does not chain at seam " + std::to_string(i));
  const Monad& first = n ? ctx.source.front().src
                         : (ctx.anchor ? *ctx.anchor
                                       : throw FrameError("nullary cell needs an anchor monad"));
  const Monad& last = n ? ctx.source.back().tgt : *ctx.anchor;
  if (n == 0 && fr.source.anchor != first.carrier)
    throw FrameError("nullary cell anchored off the anchor monad carrier");
  if (ctx.left.vert != fr.left || ctx.right.vert != fr.right)
    throw FrameError("cell verticals differ from the monad map verticals");
  if (ctx.left.vert.dom != first.carrier || ctx.left.vert.cod != ctx.target.src.carrier)
    throw FrameError("left monad map endpoints do not match");
  if (ctx.right.vert.dom != last.carrier || ctx.right.vert.cod != ctx.target.tgt.carrier)
    throw FrameError("right monad map endpoints do not match");
  if (fr.target != ctx.target.carrier) throw FrameError("cell target is not the target bimodule");

  LawReport rep;

  if (n == 0) {
    TwoCell lhs = compose_derived(V, ctx.target.act_src, {ctx.left.cell, underlying});
    TwoCell rhs = compose_derived(V, ctx.target.act_tgt, {underlying, ctx.right.cell});
    rep.count("bim-outer-nullary");
    if (lhs != rhs)
      rep.add("bim-outer-nullary", V.describe_cell(lhs) + " != " + V.describe_cell(rhs));
    rep.pass = rep.violations.empty();
    return rep;
  }

  std::vector<TwoCell> idcells;
  idcells.reserve(n);
  for (std::size_t i = 0; i < n; ++i) idcells.push_back(id_cell(V, ctx.source[i].carrier));

  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<TwoCell> lhs_children = idcells;
    lhs_children[i] = ctx.source[i].act_tgt;
    std::vector<TwoCell> rhs_children = idcells;
    rhs_children[i + 1] = ctx.source[i + 1].act_src;
    TwoCell lhs = compose_derived(V, underlying, lhs_children);
    TwoCell rhs = compose_derived(V, underlying, rhs_children);
    rep.count("bim-inner");
    if (lhs != rhs)
      rep.add("bim-inner", "seam " + std::to_string(i) + ": " + V.describe_cell(lhs) + " != " +
                               V.describe_cell(rhs));
  }

  {
    TwoCell lhs = compose_derived(V, ctx.target.act_src, {ctx.left.cell, underlying});
    std::vector<TwoCell> rhs_children = idcells;
    rhs_children[0] = ctx.source[0].act_src;
    TwoCell rhs = compose_derived(V, underlying, rhs_children);
    rep.count("bim-outer-left");
    if (lhs != rhs)
      rep.add("bim-outer-left", V.describe_cell(lhs) + " != " + V.describe_cell(rhs));
  }
  {
    TwoCell lhs = compose_derived(V, ctx.target.act_tgt, {underlying, ctx.right.cell});
    std::vector<TwoCell> rhs_children = idcells;
    rhs_children[n - 1] = ctx.source[n - 1].act_tgt;
    TwoCell rhs = compose_derived(V, underlying, rhs_children);
    rep.count("bim-outer-right");
    if (lhs != rhs)
      rep.add("bim-outer-right", V.describe_cell(lhs) + " != " + V.describe_cell(rhs));
  }
  rep.pass = rep.violations.empty();
  return rep;
}

BimOracle::BimOracle(std::shared_ptr<const FcOracle> base) : base_(std::move(base)) {
  if (!base_) throw FcError("bim_oracle: null oracle");

  for (ObjectId x : base_->objects()) {
    for (HorId t : base_->horizontals(x, x)) {
      Frame mf = monad_mult_frame(*base_, x, t);
      Frame uf = monad_unit_frame(*base_, x, t);
      for (const TwoCell& mu : base_->cells(mf))
        for (const TwoCell& eta : base_->cells(uf)) {
          Monad m{x, t, mu, eta};
          if (check_monad(*base_, m).pass) monads_.push_back(m);
        }
    }
  }

  for (std::uint32_t i = 0; i < monads_.size(); ++i)
    for (std::uint32_t j = 0; j < monads_.size(); ++j) {
      const Monad& a = monads_[i];
      const Monad& b = monads_[j];
      for (VertId f : base_->verticals(a.carrier, b.carrier)) {
        Frame ff = monad_map_frame(a.endo, b.endo, f);
        for (const TwoCell& phi : base_->cells(ff)) {
          MonadMap mm{f, phi};
          if (check_monad_map(*base_, mm, a, b).pass) maps_.push_back({i, j, mm});
        }
      }
    }

  for (std::uint32_t i = 0; i < monads_.size(); ++i)
    for (std::uint32_t j = 0; j < monads_.size(); ++j) {
      const Monad& a = monads_[i];
      const Monad& b = monads_[j];
      for (HorId m : base_->horizontals(a.carrier, b.carrier)) {
        Bimodule shape;
        shape.carrier = m;
        shape.src = a;
        shape.tgt = b;
        Frame sf = bimodule_act_src_frame(*base_, shape);
        Frame tf = bimodule_act_tgt_frame(*base_, shape);
        for (const TwoCell& rho : base_->cells(sf))
          for (const TwoCell& lam : base_->cells(tf)) {
            Bimodule bm = shape;
            bm.act_src = rho;
            bm.act_tgt = lam;
            if (check_bimodule(*base_, bm).pass) bims_.push_back({i, j, bm});
          }
      }
    }
}

std::vector<ObjectId> BimOracle::objects() const {
  std::vector<ObjectId> out;
  for (std::uint32_t i = 0; i < monads_.size(); ++i) out.push_back(ObjectId{i});
  return out;
}

VertId BimOracle::vert_id(std::uint32_t i) const {
  return VertId{i, ObjectId{maps_[i].from}, ObjectId{maps_[i].to}};
}

HorId BimOracle::hor_id(std::uint32_t i) const {
  return HorId{i, ObjectId{bims_[i].from}, ObjectId{bims_[i].to}};
}

std::vector<VertId> BimOracle::verticals(ObjectId from, ObjectId to) const {
  check_object(from);
  check_object(to);
  std::vector<VertId> out;
  for (std::uint32_t i = 0; i < maps_.size(); ++i)
    if (maps_[i].from == from.index && maps_[i].to == to.index) out.push_back(vert_id(i));
  return out;
}

std::vector<HorId> BimOracle::horizontals(ObjectId from, ObjectId to) const {
  check_object(from);
  check_object(to);
  std::vector<HorId> out;
  for (std::uint32_t i = 0; i < bims_.size(); ++i)
    if (bims_[i].from == from.index && bims_[i].to == to.index) out.push_back(hor_id(i));
  return out;
}

VertId BimOracle::id_vert(ObjectId x) const {
  check_object(x);
  const Monad& m = monads_[x.index];
  MonadMap idm{base_->id_vert(m.carrier), base_->id_cell(m.endo)};
  auto found = find_monad_map(x, x, idm);
  if (!found) throw ClosureViolation("identity monad map missing from the enumeration");
  return *found;
}

VertId BimOracle::compose_vert(VertId g, VertId f) const {
  check_vertical(g);
  check_vertical(f);
  if (f.cod != g.dom) throw FcError("compose_vert: not composable");
  const MonadMap& gm = maps_[g.index].map;
  const MonadMap& fm = maps_[f.index].map;
  VertId cv = base_->compose_vert(gm.vert, fm.vert);
  TwoCell cc = compose_cells(*base_, gm.cell, std::vector<TwoCell>{fm.cell},
                             std::vector<VertId>{fm.vert, fm.vert});
  auto found = find_monad_map(f.dom, g.cod, MonadMap{cv, cc});
  if (!found) throw ClosureViolation("composite monad map missing from the enumeration");
  return *found;
}

Frame BimOracle::underlying_frame(const Frame& frame) const {
  Frame u;
  if (frame.source.empty()) {
    u.source = Path::empty_at(monads_[frame.source.anchor.index].carrier);
  } else {
    std::vector<HorId> src;
    for (const HorId& m : frame.source.cells) src.push_back(bims_[m.index].data.carrier);
    u.source = Path::of(src);
  }
  u.left = maps_[frame.left.index].map.vert;
  u.right = maps_[frame.right.index].map.vert;
  u.target = bims_[frame.target.index].data.carrier;
  return u;
}

BimCellContext BimOracle::context_of(const Frame& frame) const {
  BimCellContext ctx;
  for (const HorId& m : frame.source.cells) ctx.source.push_back(bims_[m.index].data);
  if (frame.source.empty()) ctx.anchor = monads_[frame.source.anchor.index];
  ctx.target = bims_[frame.target.index].data;
  ctx.left = maps_[frame.left.index].map;
  ctx.right = maps_[frame.right.index].map;
  return ctx;
}

std::vector<TwoCell> BimOracle::cells(const Frame& frame) const {
  check_frame(frame);
  Frame uf = underlying_frame(frame);
  BimCellContext ctx = context_of(frame);
  std::vector<TwoCell> out;
  for (const TwoCell& c : base_->cells(uf))
    if (check_bim_cell(*base_, c, ctx).pass) out.push_back(TwoCell{c.id, frame});
  return out;
}

TwoCell BimOracle::id_cell(HorId m) const {
  check_horizontal(m);
  const BimoduleEntry& e = bims_[m.index];
  TwoCell u = base_->id_cell(e.data.carrier);

  Frame fr;
  fr.source = Path::of({m});
  fr.left = id_vert(ObjectId{e.from});
  fr.right = id_vert(ObjectId{e.to});
  fr.target = m;

  BimCellContext ctx = context_of(fr);
  if (!check_bim_cell(*base_, u, ctx).pass)
    throw ClosureViolation("identity cell failed equivariance");
  return TwoCell{u.id, fr};
}

TwoCell BimOracle::compose_raw(const TwoCell& theta, std::span<const TwoCell> children,
                               std::span<const VertId> boundary) const {
  TwoCell utheta{theta.id, underlying_frame(theta.frame)};
  std::vector<TwoCell> uchildren;
  uchildren.reserve(children.size());
  for (const auto& c : children) uchildren.push_back(TwoCell{c.id, underlying_frame(c.frame)});
  std::vector<VertId> ubd;
  for (const auto& b : boundary) {
    check_vertical(b);
    ubd.push_back(maps_[b.index].map.vert);
  }
  TwoCell uc = compose_cells(*base_, utheta, uchildren, ubd);

  Frame rf;
  if (children.empty()) {
    rf.source = Path::empty_at(boundary[0].dom);
  } else {
    Path acc = children[0].frame.source;
    for (std::size_t i = 1; i < children.size(); ++i)
      acc = Path::concat(acc, children[i].frame.source);
    rf.source = acc;
  }
  rf.left = compose_vert(theta.frame.left, boundary.front());
  rf.right = compose_vert(theta.frame.right, boundary.back());
  rf.target = theta.frame.target;

  BimCellContext ctx = context_of(rf);
  LawReport rep = check_bim_cell(*base_, TwoCell{uc.id, uc.frame}, ctx);
  if (!rep.pass)
    throw ClosureViolation("composite of equivariant cells failed equivariance: " +
                           rep.violations.front().law);
  return TwoCell{uc.id, rf};
}

std::optional<ObjectId> BimOracle::find_monad(const Monad& m) const {
  for (std::uint32_t i = 0; i < monads_.size(); ++i)
    if (monads_[i] == m) return ObjectId{i};
  return std::nullopt;
}

std::optional<VertId> BimOracle::find_monad_map(ObjectId from, ObjectId to,
                                                const MonadMap& f) const {
  for (std::uint32_t i = 0; i < maps_.size(); ++i)
    if (maps_[i].from == from.index && maps_[i].to == to.index && maps_[i].map == f)
      return vert_id(i);
  return std::nullopt;
}

std::optional<HorId> BimOracle::find_bimodule(const Bimodule& b) const {
  for (std::uint32_t i = 0; i < bims_.size(); ++i)
    if (bims_[i].data == b) return hor_id(i);
  return std::nullopt;
}

const Monad& BimOracle::monad_of(ObjectId x) const {
  check_object(x);
  return monads_[x.index];
}

const MonadMap& BimOracle::monad_map_of(VertId f) const {
  check_vertical(f);
  return maps_[f.index].map;
}

const Bimodule& BimOracle::bimodule_of(HorId m) const {
  check_horizontal(m);
  return bims_[m.index].data;
}

void BimOracle::check_object(ObjectId x) const {
  if (x.index >= monads_.size()) throw UnknownCell("object not in this Bim oracle");
}

void BimOracle::check_vertical(VertId f) const {
  if (f.index >= maps_.size() || maps_[f.index].from != f.dom.index ||
      maps_[f.index].to != f.cod.index)
    throw UnknownCell("vertical not in this Bim oracle");
}

void BimOracle::check_horizontal(HorId m) const {
  if (m.index >= bims_.size() || bims_[m.index].from != m.src.index ||
      bims_[m.index].to != m.dst.index)
    throw UnknownCell("horizontal not in this Bim oracle");
}

void BimOracle::check_frame(const Frame& f) const {
  for (const HorId& m : f.source.cells) check_horizontal(m);
  if (f.source.empty()) check_object(f.source.anchor);
  check_vertical(f.left);
  check_vertical(f.right);
  check_horizontal(f.target);
  f.validate();
}

std::string BimOracle::describe(ObjectId x) const {
  check_object(x);
  const Monad& m = monads_[x.index];
  return "monad" + std::to_string(x.index) + "[" + base_->describe(m.carrier) + "," +
         base_->describe(m.endo) + "]";
}

std::string BimOracle::describe(VertId f) const {
  check_vertical(f);
  return "map" + std::to_string(f.index) + "[" + base_->describe(maps_[f.index].map.vert) + "]";
}

std::string BimOracle::describe(HorId m) const {
  check_horizontal(m);
  return "bimod" + std::to_string(m.index) + "[" +
         base_->describe(bims_[m.index].data.carrier) + "]";
}

std::string BimOracle::describe_cell(const TwoCell& c) const {
  try {
    return base_->describe_cell(TwoCell{c.id, underlying_frame(c.frame)});
  } catch (const FcError&) {
    return FcOracle::describe_cell(c);
  }
}

std::shared_ptr<const BimOracle> bim_oracle(std::shared_ptr<const FcOracle> base) {
  return std::make_shared<BimOracle>(std::move(base));
}

}  // namespace fcmt
