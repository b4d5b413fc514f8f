#pragma once

#include <span>
#include <string>
#include <vector>

#include "fcmt/frame.hpp"

namespace fcmt {

/// An fc-multicategory presented by enumeration and composition
/// capabilities. Instances are immutable after construction; all methods are
/// total on valid inputs, deterministic, and return the same lists in the
/// same order on repeated calls.
///
/// 2-cells exist at unboundedly many arities, so an oracle is a presentation
/// rather than a closed data set; law checking is always explicitly bounded.
class FcOracle {
 public:
  virtual ~FcOracle() = default;

  virtual std::vector<ObjectId> objects() const = 0;
  virtual std::vector<VertId> verticals(ObjectId from, ObjectId to) const = 0;
  virtual std::vector<HorId> horizontals(ObjectId from, ObjectId to) const = 0;

  /// All 2-cells inhabiting `frame`, in a stable order.
  virtual std::vector<TwoCell> cells(const Frame& frame) const = 0;

  virtual VertId id_vert(ObjectId x) const = 0;
  /// g after f.
  virtual VertId compose_vert(VertId g, VertId f) const = 0;

  virtual TwoCell id_cell(HorId m) const = 0;

  /// Raw pasting composition. Preconditions are the caller's problem; use
  /// fcmt::compose_cells for the checked entry point.
  virtual TwoCell compose_raw(const TwoCell& theta, std::span<const TwoCell> children,
                              std::span<const VertId> boundary) const = 0;

  /// True when the oracle tolerates concurrent reads (all instances here do).
  virtual bool concurrent_read_safe() const { return true; }

  // Rendering hooks for law-report witnesses and CLI output.
  virtual std::string describe(ObjectId x) const { return "obj" + std::to_string(x.index); }
  virtual std::string describe(VertId f) const {
    return "vert" + std::to_string(f.index) + "(" + describe(f.dom) + "->" + describe(f.cod) + ")";
  }
  virtual std::string describe(HorId m) const {
    return "hor" + std::to_string(m.index) + "(" + describe(m.src) + "->" + describe(m.dst) + ")";
  }
  virtual std::string describe_cell(const TwoCell& c) const {
    return "cell#" + std::to_string(c.id.value);
  }

  std::string describe(const Path& p) const {
    if (p.empty()) return "()@" + describe(p.anchor);
    std::string out = "(";
    for (std::size_t i = 0; i < p.cells.size(); ++i) {
      if (i) out += ",";
      out += describe(p.cells[i]);
    }
    return out + ")";
  }

  std::string describe(const Frame& f) const {
    return "[" + describe(f.source) + " => " + describe(f.target) + " | left " +
           describe(f.left) + ", right " + describe(f.right) + "]";
  }
};

}  // namespace fcmt
