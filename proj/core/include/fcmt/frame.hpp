#pragma once

#include <string>

#include "fcmt/errors.hpp"
#include "fcmt/path.hpp"

namespace fcmt {

/// The boundary of a 2-cell: a source path across the top, one vertical
/// 1-cell on each side, and a single horizontal 1-cell along the bottom.
struct Frame {
  Path source;
  VertId left;
  VertId right;
  HorId target;

  void validate() const {
    source.validate();
    if (left.dom != source.start()) throw FrameError("left vertical does not start the source path");
    if (right.dom != source.end()) throw FrameError("right vertical does not end the source path");
    if (left.cod != target.src) throw FrameError("left vertical does not land on the target source");
    if (right.cod != target.dst) throw FrameError("right vertical does not land on the target destination");
  }

  bool well_formed() const {
    if (!source.cells.empty()) {
      for (std::size_t i = 0; i + 1 < source.cells.size(); ++i)
        if (source.cells[i].dst != source.cells[i + 1].src) return false;
      if (source.anchor != source.cells.front().src) return false;
    }
    return left.dom == source.start() && right.dom == source.end() &&
           left.cod == target.src && right.cod == target.dst;
  }

  std::size_t arity() const { return source.size(); }

  auto operator<=>(const Frame&) const = default;
};

/// An identified 2-cell inhabiting a frame. Cell ids are content hashes
/// interned by the owning oracle; equality of cells within one oracle is
/// equality of (id, frame).
struct TwoCell {
  CellId id;
  Frame frame;

  auto operator<=>(const TwoCell&) const = default;
};

namespace detail {

inline void feed_path(Fnv64& h, const Path& p) {
  h.feed_u64(p.cells.size());
  h.feed_u32(p.anchor.index);
  for (const auto& m : p.cells) {
    h.feed_u32(m.index);
    h.feed_u32(m.src.index);
    h.feed_u32(m.dst.index);
  }
}

inline void feed_frame(Fnv64& h, const Frame& f) {
  feed_path(h, f.source);
  h.feed_u32(f.left.index);
  h.feed_u32(f.left.dom.index);
  h.feed_u32(f.left.cod.index);
  h.feed_u32(f.right.index);
  h.feed_u32(f.right.dom.index);
  h.feed_u32(f.right.cod.index);
  h.feed_u32(f.target.index);
  h.feed_u32(f.target.src.index);
  h.feed_u32(f.target.dst.index);
}

}  // namespace detail

inline std::uint64_t frame_digest(const Frame& f) {
  detail::Fnv64 h;
  detail::feed_frame(h, f);
  return h.digest();
}

}  // namespace fcmt

template <>
struct std::hash<fcmt::Frame> {
  std::size_t operator()(const fcmt::Frame& f) const noexcept {
    return static_cast<std::size_t>(fcmt::frame_digest(f));
  }
};
