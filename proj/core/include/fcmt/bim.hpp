#pragma once

#include <memory>
#include <mutex>
#include <optional>

#include "fcmt/law_report.hpp"
#include "fcmt/oracle.hpp"

namespace fcmt {

/// A monad in an fc-multicategory: a horizontal endo-1-cell with
/// multiplication (t,t) => t and unit ()@x => t, both with identity
/// verticals.
struct Monad {
  ObjectId carrier;
  HorId endo;
  TwoCell mult;
  TwoCell unit;

  bool operator==(const Monad& o) const {
    return carrier == o.carrier && endo == o.endo && mult.id == o.mult.id && unit.id == o.unit.id;
  }
};

/// A monad map: a vertical 1-cell f together with a carrier 2-cell
/// (t) => t' framed by f on both sides, compatible with mult and unit.
struct MonadMap {
  VertId vert;
  TwoCell cell;

  bool operator==(const MonadMap& o) const { return vert == o.vert && cell.id == o.cell.id; }
};

/// A bimodule between two monads: a horizontal 1-cell with a left action of
/// the source monad and a right action of the target monad.
struct Bimodule {
  HorId carrier;
  Monad src;
  Monad tgt;
  TwoCell act_src;  // (t, m) => m
  TwoCell act_tgt;  // (m, t') => m

  bool operator==(const Bimodule& o) const {
    return carrier == o.carrier && src == o.src && tgt == o.tgt &&
           act_src.id == o.act_src.id && act_tgt.id == o.act_tgt.id;
  }
};

/// The boundary data an equivariance check runs against. `anchor` is
/// required exactly when `source` is empty.
struct BimCellContext {
  std::vector<Bimodule> source;
  std::optional<Monad> anchor;
  Bimodule target;
  MonadMap left;
  MonadMap right;
};

// Canonical frames of the structure cells.
Frame monad_mult_frame(const FcOracle& V, ObjectId carrier, HorId endo);
Frame monad_unit_frame(const FcOracle& V, ObjectId carrier, HorId endo);
Frame monad_map_frame(const HorId& src_endo, const HorId& tgt_endo, VertId f);
Frame bimodule_act_src_frame(const FcOracle& V, const Bimodule& shape);
Frame bimodule_act_tgt_frame(const FcOracle& V, const Bimodule& shape);

/// Associativity and both unit laws, evaluated by explicit compositions in
/// V. Throws FrameError if the mult/unit frames are malformed.
LawReport check_monad(const FcOracle& V, const Monad& m);

/// Multiplication compatibility and the nullary-whiskered unit
/// compatibility.
LawReport check_monad_map(const FcOracle& V, const MonadMap& f, const Monad& src,
                          const Monad& tgt);

/// The five bimodule laws: two action associativities, commuting actions,
/// two action units.
LawReport check_bimodule(const FcOracle& V, const Bimodule& b);

/// Inner equivariance at each seam plus the outer conditions; for an empty
/// source the two outer conditions fuse into act_src(phi, c) =
/// act_tgt(c, phi').
LawReport check_bim_cell(const FcOracle& V, const TwoCell& underlying,
                         const BimCellContext& ctx);

class BimOracle;

/// The Bim construction: objects are the monads of V (enumerated over V's
/// declared objects and horizontal endo-1-cells), vertical 1-cells the monad
/// maps, horizontal 1-cells the bimodules, and 2-cells the equivariant
/// 2-cells of V. Composition delegates to V and re-verifies equivariance of
/// every composite, raising ClosureViolation if that ever fails.
std::shared_ptr<const BimOracle> bim_oracle(std::shared_ptr<const FcOracle> base);

class BimOracle final : public FcOracle {
 public:
  explicit BimOracle(std::shared_ptr<const FcOracle> base);

  std::vector<ObjectId> objects() const override;
  std::vector<VertId> verticals(ObjectId from, ObjectId to) const override;
  std::vector<HorId> horizontals(ObjectId from, ObjectId to) const override;
  std::vector<TwoCell> cells(const Frame& frame) const override;
  VertId id_vert(ObjectId x) const override;
  VertId compose_vert(VertId g, VertId f) const override;
  TwoCell id_cell(HorId m) const override;
  TwoCell compose_raw(const TwoCell& theta, std::span<const TwoCell> children,
                      std::span<const VertId> boundary) const override;

  using FcOracle::describe;
  std::string describe(ObjectId x) const override;
  std::string describe(VertId f) const override;
  std::string describe(HorId m) const override;
  std::string describe_cell(const TwoCell& c) const override;

  const FcOracle& base() const { return *base_; }

  const std::vector<Monad>& monads() const { return monads_; }
  struct MapEntry {
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    MonadMap map;
  };
  struct BimoduleEntry {
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    Bimodule data;
  };
  const std::vector<MapEntry>& monad_maps() const { return maps_; }
  const std::vector<BimoduleEntry>& bimodule_entries() const { return bims_; }

  std::optional<ObjectId> find_monad(const Monad& m) const;
  std::optional<VertId> find_monad_map(ObjectId from, ObjectId to, const MonadMap& f) const;
  std::optional<HorId> find_bimodule(const Bimodule& b) const;

  const Monad& monad_of(ObjectId x) const;
  const MonadMap& monad_map_of(VertId f) const;
  const Bimodule& bimodule_of(HorId m) const;

  /// The frame of V underneath a frame of Bim(V).
  Frame underlying_frame(const Frame& frame) const;
  /// The equivariance context a Bim frame induces.
  BimCellContext context_of(const Frame& frame) const;

 private:
  void check_object(ObjectId x) const;
  void check_vertical(VertId f) const;
  void check_horizontal(HorId m) const;
  void check_frame(const Frame& f) const;
  VertId vert_id(std::uint32_t i) const;
  HorId hor_id(std::uint32_t i) const;

  std::shared_ptr<const FcOracle> base_;
  std::vector<Monad> monads_;
  std::vector<MapEntry> maps_;
  std::vector<BimoduleEntry> bims_;
};

}  // namespace fcmt
