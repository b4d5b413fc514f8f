#include <doctest.h>

#include <queue>
#include <set>

#include "fcmt/frame.hpp"
#include "fcmt/graph.hpp"
#include "fcmt/path.hpp"

using namespace fcmt;

namespace {

// Independent breadth-first path enumeration for the free-paths oracle.
std::set<std::pair<std::uint32_t, std::vector<std::uint32_t>>> bfs_paths(const Graph& g,
                                                                         std::size_t max_len) {
  std::set<std::pair<std::uint32_t, std::vector<std::uint32_t>>> out;
  std::queue<FreePath> q;
  for (std::uint32_t n = 0; n < g.nodes.size(); ++n) q.push(FreePath{n, {}});
  while (!q.empty()) {
    FreePath p = q.front();
    q.pop();
    out.insert({p.anchor, p.edges});
    if (p.edges.size() == max_len) continue;
    std::uint32_t at = p.edges.empty() ? p.anchor : g.edges[p.edges.back()].dst;
    for (std::uint32_t e = 0; e < g.edges.size(); ++e) {
      if (g.edges[e].src != at) continue;
      FreePath n = p;
      n.edges.push_back(e);
      q.push(n);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("free_paths on a single node with no edges") {
  Graph g;
  g.nodes = {"only"};
  auto ps = free_paths(g, 3);
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].edges.empty());
}

TEST_CASE("free_paths counts paths of a single edge by hand") {
  Graph g;
  g.nodes = {"a", "b"};
  g.edges = {{"e", 0, 1}};
  auto ps = free_paths(g, 2);
  // two empty paths plus the length-1 path
  REQUIRE(ps.size() == 3);
  CHECK(ps[2].edges.size() == 1);
}

TEST_CASE("free_paths agrees with an independent BFS on a 2-cycle") {
  Graph g;
  g.nodes = {"a", "b"};
  g.edges = {{"f", 0, 1}, {"g", 1, 0}};
  for (std::size_t len : {0u, 1u, 3u, 5u}) {
    auto ps = free_paths(g, len);
    std::set<std::pair<std::uint32_t, std::vector<std::uint32_t>>> got;
    for (const auto& p : ps) got.insert({p.anchor, p.edges});
    CHECK(got == bfs_paths(g, len));
    CHECK(got.size() == ps.size());
  }
}

TEST_CASE("length-0 path count equals node count") {
  Graph g;
  g.nodes = {"a", "b", "c"};
  g.edges = {{"e", 0, 1}};
  auto ps = free_paths(g, 0);
  CHECK(ps.size() == 3);
}

TEST_CASE("paths validate consecutive endpoints") {
  ObjectId x{0}, y{1}, z{2};
  HorId m{0, x, y}, n{1, y, z}, bad{2, z, z};
  CHECK_NOTHROW(Path::of({m, n}));
  CHECK_THROWS_AS(Path::of({m, bad}), MalformedPath);
  Path p = Path::of({m, n});
  CHECK(p.start() == x);
  CHECK(p.end() == z);
  Path e = Path::empty_at(y);
  CHECK(e.start() == y);
  CHECK(e.end() == y);
  CHECK_THROWS_AS(Path::concat(p, p), MalformedPath);
  CHECK(Path::concat(e, Path::of({n})).size() == 1);
}

TEST_CASE("frames validate their boundary") {
  ObjectId x{0}, y{1};
  HorId m{0, x, y};
  VertId idx{0, x, x}, idy{1, y, y};
  Frame f{Path::of({m}), idx, idy, m};
  CHECK_NOTHROW(f.validate());
  CHECK(f.well_formed());
  Frame bad{Path::of({m}), idy, idy, m};
  CHECK_FALSE(bad.well_formed());
  CHECK_THROWS_AS(bad.validate(), FrameError);
}
