#include "fcmt/compose.hpp"

#include "fcmt/errors.hpp"

namespace fcmt {

namespace {

void check_preconditions(const TwoCell& theta, std::span<const TwoCell> children,
                         std::span<const VertId> boundary) {
  const std::size_t n = theta.frame.arity();
  if (children.size() != n)
    throw BoundaryMismatch(-1, "expected " + std::to_string(n) + " children, got " +
                                   std::to_string(children.size()));
  if (boundary.size() != n + 1)
    throw BoundaryMismatch(-1, "expected " + std::to_string(n + 1) + " boundary verticals, got " +
                                   std::to_string(boundary.size()));
  if (n == 0) {
    if (boundary[0].cod != theta.frame.source.anchor)
      throw BoundaryMismatch(0, "whiskering vertical does not land on the source anchor");
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Frame& cf = children[i].frame;
    if (cf.target != theta.frame.source.cells[i])
      throw BoundaryMismatch(static_cast<int>(i), "child target differs from source cell");
    if (cf.left != boundary[i])
      throw BoundaryMismatch(static_cast<int>(i), "child left vertical differs from boundary");
    if (cf.right != boundary[i + 1])
      throw BoundaryMismatch(static_cast<int>(i), "child right vertical differs from boundary");
  }
}

}  // namespace

Frame composite_frame(const FcOracle& V, const Frame& outer,
                      std::span<const Frame> child_frames, std::span<const VertId> boundary) {
  Frame out;
  if (child_frames.empty()) {
    out.source = Path::empty_at(boundary[0].dom);
  } else {
    Path acc = child_frames[0].source;
    for (std::size_t i = 1; i < child_frames.size(); ++i)
      acc = Path::concat(acc, child_frames[i].source);
    out.source = acc;
  }
  out.left = V.compose_vert(outer.left, boundary.front());
  out.right = V.compose_vert(outer.right, boundary.back());
  out.target = outer.target;
  return out;
}

TwoCell compose_cells(const FcOracle& V, const TwoCell& theta,
                      std::span<const TwoCell> children, std::span<const VertId> boundary) {
  check_preconditions(theta, children, boundary);
  TwoCell result = V.compose_raw(theta, children, boundary);

  std::vector<Frame> child_frames;
  child_frames.reserve(children.size());
  for (const auto& c : children) child_frames.push_back(c.frame);
  Frame expected = composite_frame(V, theta.frame, child_frames, boundary);
  if (result.frame != expected)
    throw FcError("oracle produced a composite with the wrong frame: got " +
                  V.describe(result.frame) + ", expected " + V.describe(expected));
  return result;
}

TwoCell id_cell(const FcOracle& V, HorId m) {
  TwoCell c = V.id_cell(m);
  Frame expected;
  expected.source = Path::of({m});
  expected.left = V.id_vert(m.src);
  expected.right = V.id_vert(m.dst);
  expected.target = m;
  if (c.frame != expected)
    throw FcError("oracle produced an identity cell with the wrong frame for " + V.describe(m));
  return c;
}

}  // namespace fcmt
