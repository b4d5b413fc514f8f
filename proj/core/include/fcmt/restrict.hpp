#pragma once

#include <memory>

#include "fcmt/oracle.hpp"

namespace fcmt {

/// The sub-fc-multicategory with the same objects, horizontal 1-cells and
/// 2-cells, but only identity vertical 1-cells. Frames whose verticals are
/// not identities have no inhabitants here because they cannot be formed.
/// Identifier spaces are shared with the underlying oracle.
std::shared_ptr<const FcOracle> restrict_verticals_to_identities(
    std::shared_ptr<const FcOracle> base);

}  // namespace fcmt
