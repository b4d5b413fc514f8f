#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "fcmt/law_report.hpp"
#include "fcmt/oracle.hpp"

namespace fcmt {

/// A strict monoidal category by finite tables: a monoid of objects, finite
/// hom sets, a composition table and a tensor-on-morphisms table.
struct StrictMonoidalPresentation {
  struct Morphism {
    std::string name;
    std::uint32_t dom = 0;
    std::uint32_t cod = 0;
  };

  std::vector<std::string> objects;
  std::uint32_t unit = 0;
  /// tensor_obj[a][b] = a (x) b
  std::vector<std::vector<std::uint32_t>> tensor_obj;
  std::vector<Morphism> morphisms;
  /// identities[a] = index of 1_a in morphisms
  std::vector<std::uint32_t> identities;
  /// compose[(g, f)] = g o f, keyed (g << 32 | f), defined when dom g == cod f
  std::unordered_map<std::uint64_t, std::uint32_t> compose;
  /// tensor_mor[(f, g)] = f (x) g, keyed (f << 32 | g), total
  std::unordered_map<std::uint64_t, std::uint32_t> tensor_mor;

  static std::uint64_t key(std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  std::optional<std::uint32_t> object_index(const std::string& name) const;
  std::optional<std::uint32_t> morphism_index(const std::string& name) const;

  /// Structural validation only (indices in range, tables total where they
  /// must be). Throws MalformedPresentation.
  void validate_structure() const;

  /// Checks the strict monoidal category laws: object monoid, category laws,
  /// functoriality of the tensor, strict associativity and unit on
  /// morphisms.
  LawReport check_laws() const;
};

class MonoidalFcOracle;

/// One object, one vertical 1-cell, horizontal 1-cells the objects of the
/// presentation, and a 2-cell (M_1,...,M_n) => M is a morphism
/// M_n (x) ... (x) M_1 -> M. The tensor order is reversed relative to the
/// path and that convention is fixed project-wide. Throws
/// MalformedPresentation if structure or laws fail at load.
std::shared_ptr<const MonoidalFcOracle> monoidal_fc(StrictMonoidalPresentation m);

class MonoidalFcOracle final : public FcOracle {
 public:
  explicit MonoidalFcOracle(StrictMonoidalPresentation m);

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

  const StrictMonoidalPresentation& presentation() const { return m_; }

  HorId horizontal(std::uint32_t object_index) const;
  std::optional<HorId> horizontal_named(const std::string& object_name) const;

  /// The source object M_n (x) ... (x) M_1 of cells in this frame.
  std::uint32_t frame_dom(const Frame& frame) const;

  /// Wraps a presentation morphism as the 2-cell of a frame; the morphism
  /// must run M_n (x) ... (x) M_1 -> M. Throws FrameError otherwise.
  TwoCell make_cell(const Frame& frame, std::uint32_t morphism_index) const;
  TwoCell make_cell(const Frame& frame, const std::string& morphism_name) const;

  /// The presentation morphism behind a cell.
  std::uint32_t cell_morphism(const TwoCell& c) const;

 private:
  void check_frame(const Frame& f) const;
  TwoCell intern(const Frame& frame, std::uint32_t morphism) const;

  StrictMonoidalPresentation m_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint64_t, std::uint32_t> cell_store_;
};

}  // namespace fcmt
