#include "fcmt/graph.hpp"

namespace fcmt {

std::vector<FreePath> free_paths(const Graph& g, std::size_t max_len) {
  std::vector<FreePath> out;
  std::vector<FreePath> frontier;
  for (std::uint32_t n = 0; n < g.nodes.size(); ++n) frontier.push_back(FreePath{n, {}});
  out = frontier;
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<FreePath> next;
    for (const auto& p : frontier) {
      std::uint32_t at = p.edges.empty() ? p.anchor : g.edges[p.edges.back()].dst;
      for (std::uint32_t e = 0; e < g.edges.size(); ++e) {
        if (g.edges[e].src != at) continue;
        FreePath q = p;
        q.edges.push_back(e);
        next.push_back(std::move(q));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace fcmt
