#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fcmt {

/// A finite directed graph. Edge endpoints index into `nodes`.
struct Graph {
  struct Edge {
    std::string name;
    std::uint32_t src = 0;
    std::uint32_t dst = 0;
  };
  std::vector<std::string> nodes;
  std::vector<Edge> edges;
};

/// A node-anchored sequence of consecutively composable edges. Length-0
/// paths exist at every node.
struct FreePath {
  std::uint32_t anchor = 0;
  std::vector<std::uint32_t> edges;

  auto operator<=>(const FreePath&) const = default;
};

/// All edge-paths of length 0..max_len, shortest first, in a stable order.
std::vector<FreePath> free_paths(const Graph& g, std::size_t max_len);

}  // namespace fcmt
