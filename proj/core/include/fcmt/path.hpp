#pragma once

#include <vector>

#include "fcmt/errors.hpp"
#include "fcmt/ids.hpp"

namespace fcmt {

/// A composable string of horizontal 1-cells. The empty string is anchored
/// at an object; for nonempty paths the anchor is normalized to the source
/// of the first cell so paths compare structurally.
struct Path {
  std::vector<HorId> cells;
  ObjectId anchor;

  Path() = default;

  static Path empty_at(ObjectId x) {
    Path p;
    p.anchor = x;
    return p;
  }

  static Path of(std::vector<HorId> hs) {
    Path p;
    p.cells = std::move(hs);
    if (!p.cells.empty()) p.anchor = p.cells.front().src;
    p.validate();
    return p;
  }

  std::size_t size() const { return cells.size(); }
  bool empty() const { return cells.empty(); }

  ObjectId start() const { return cells.empty() ? anchor : cells.front().src; }
  ObjectId end() const { return cells.empty() ? anchor : cells.back().dst; }

  void validate() const {
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
      if (cells[i].dst != cells[i + 1].src)
        throw MalformedPath("cells " + std::to_string(i) + " and " + std::to_string(i + 1) +
                            " are not consecutive");
    }
    if (!cells.empty() && anchor != cells.front().src)
      throw MalformedPath("anchor does not match the source of the first cell");
  }

  /// Concatenation; both sides must share a boundary object.
  static Path concat(const Path& a, const Path& b) {
    if (a.end() != b.start()) throw MalformedPath("concatenation endpoints differ");
    Path out;
    out.cells = a.cells;
    out.cells.insert(out.cells.end(), b.cells.begin(), b.cells.end());
    out.anchor = a.start();
    return out;
  }

  auto operator<=>(const Path&) const = default;
};

}  // namespace fcmt
