#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fcmt {

struct LawViolation {
  std::string law;
  std::string witness;

  auto operator<=>(const LawViolation&) const = default;
};

/// Enumeration bounds for exhaustive law checking. `max_arity` caps every
/// path length in play (outer sources, child totals, grandchild totals);
/// `max_nesting` selects how deep the composition laws go: >= 1 runs the
/// identity laws, >= 2 adds two-level associativity (there is nothing new
/// above 2). `max_cells_per_frame` aborts enumeration of pathological
/// frames. `parallel` splits work across threads when the oracle allows
/// concurrent reads; reports are order-normalized either way.
struct CheckBounds {
  std::uint32_t max_arity = 3;
  std::uint32_t max_nesting = 2;
  std::uint64_t max_cells_per_frame = 10000;
  bool parallel = false;
};

struct LawReport {
  bool pass = true;
  std::vector<LawViolation> violations;
  std::map<std::string, std::uint64_t> checked;
  CheckBounds bounds;

  void add(const std::string& law, const std::string& witness) {
    pass = false;
    violations.push_back({law, witness});
  }
  void count(const std::string& law, std::uint64_t n = 1) { checked[law] += n; }
  void merge(const LawReport& other) {
    pass = pass && other.pass;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    for (const auto& [k, v] : other.checked) checked[k] += v;
  }
  std::uint64_t total_checked() const {
    std::uint64_t n = 0;
    for (const auto& [k, v] : checked) n += v;
    return n;
  }
};

}  // namespace fcmt
