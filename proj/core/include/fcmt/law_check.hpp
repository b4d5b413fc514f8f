#pragma once

#include "fcmt/law_report.hpp"
#include "fcmt/oracle.hpp"

namespace fcmt {

/// Exhaustively checks, over all configurations within `bounds`:
///   - the vertical category laws (units, associativity, endpoint and
///     closure sanity of compose_vert),
///   - the 2-cell identity laws on both sides (max_nesting >= 1),
///   - two-level pasting associativity, i.e. composing children first versus
///     flattening the grandchildren, including every configuration with
///     nullary cells and the pure-whiskering case (max_nesting >= 2).
///
/// Every path length in play (outer sources, child totals, grandchild
/// totals) is capped by bounds.max_arity. Throws BudgetExceeded if any
/// single frame holds more than bounds.max_cells_per_frame cells.
///
/// The report is order-normalized: identical runs (parallel or not) produce
/// identical reports.
LawReport check_fc_laws(const FcOracle& V, const CheckBounds& bounds = {});

}  // namespace fcmt
