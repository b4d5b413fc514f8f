#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>

#include "fcmt/fincat.hpp"
#include "fcmt/oracle.hpp"

namespace fcmt {

/// A strict double category by tables: a vertical and a horizontal arrow
/// category on a shared object set, squares indexed by their boundary, and
/// the two square compositions. Strict bicategories are the sub-case with a
/// discrete vertical category.
struct StrictDoublePresentation {
  struct Square {
    std::string name;
    std::uint32_t top = 0;     // horizontal morphism x00 -> x01
    std::uint32_t left = 0;    // vertical morphism x00 -> x10
    std::uint32_t right = 0;   // vertical morphism x01 -> x11
    std::uint32_t bottom = 0;  // horizontal morphism x10 -> x11
  };

  FinCategory vertical;
  FinCategory horizontal;
  std::vector<Square> squares;
  /// hcomp[(b, a)] = a-then-b side by side, defined when right(a) == left(b)
  std::unordered_map<std::uint64_t, std::uint32_t> hcomp;
  /// vcomp[(b, a)] = a stacked above b, defined when bottom(a) == top(b)
  std::unordered_map<std::uint64_t, std::uint32_t> vcomp;
  /// hid[f] = horizontal identity square of a vertical morphism f
  std::vector<std::uint32_t> hid;
  /// vid[m] = vertical identity square of a horizontal morphism m
  std::vector<std::uint32_t> vid;

  static std::uint64_t key(std::uint32_t b, std::uint32_t a) {
    return (static_cast<std::uint64_t>(b) << 32) | a;
  }

  void validate_structure() const;
  LawReport check_laws() const;
};

/// The double category of commuting squares of a finite category: one square
/// per boundary (t, l, r, b) with r o t = b o l.
StrictDoublePresentation commuting_double(const FinCategory& c);

class DoubleFcOracle;

/// Objects, verticals and horizontals of the double category; a 2-cell in a
/// frame is a square whose top edge is the strict composite of the source
/// path (the horizontal identity for an empty path).
std::shared_ptr<const DoubleFcOracle> double_fc(StrictDoublePresentation d);

class DoubleFcOracle final : public FcOracle {
 public:
  explicit DoubleFcOracle(StrictDoublePresentation d);

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

  const StrictDoublePresentation& presentation() const { return d_; }
  std::uint32_t square_of_cell(const TwoCell& c) const;

  /// The strict composite of a path in the horizontal category.
  std::uint32_t top_composite(const Path& p) const;

 private:
  void check_frame(const Frame& f) const;
  VertId vert_id(std::uint32_t i) const;
  HorId hor_id(std::uint32_t i) const;
  TwoCell intern(const Frame& frame, std::uint32_t square) const;

  StrictDoublePresentation d_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint64_t, std::uint32_t> cell_store_;
};

}  // namespace fcmt
