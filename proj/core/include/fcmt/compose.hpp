#pragma once

#include <span>
#include <vector>

#include "fcmt/oracle.hpp"

namespace fcmt {

/// Checked two-level pasting composition.
///
/// `theta` has source path (m_1, ..., m_n); `children[i]` must target m_i and
/// consecutive children share the verticals listed in `boundary` (length
/// n+1). For n = 0 the composite is `theta` whiskered by the single boundary
/// vertical, whose codomain must be the anchor of theta's source.
///
/// Throws BoundaryMismatch naming the offending slot, or UnknownCell if a
/// cell is not owned by `V`. The returned cell's frame is always validated
/// against the composition postconditions.
TwoCell compose_cells(const FcOracle& V, const TwoCell& theta,
                      std::span<const TwoCell> children, std::span<const VertId> boundary);

inline TwoCell compose_cells(const FcOracle& V, const TwoCell& theta,
                             const std::vector<TwoCell>& children,
                             const std::vector<VertId>& boundary) {
  return compose_cells(V, theta, std::span<const TwoCell>(children),
                       std::span<const VertId>(boundary));
}

/// The identity 2-cell on m: source path (m), identity verticals, target m.
/// Validates the oracle's answer against the forced frame.
TwoCell id_cell(const FcOracle& V, HorId m);

/// The frame a composition must produce; exposed for law checking.
Frame composite_frame(const FcOracle& V, const Frame& outer,
                      std::span<const Frame> child_frames, std::span<const VertId> boundary);

}  // namespace fcmt
