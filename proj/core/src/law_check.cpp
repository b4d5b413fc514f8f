#include "fcmt/law_check.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <unordered_map>

#include "fcmt/compose.hpp"
#include "fcmt/errors.hpp"

namespace fcmt {

namespace {

constexpr const char* kVertUnitLeft = "vert-unit-left";
constexpr const char* kVertUnitRight = "vert-unit-right";
constexpr const char* kVertAssoc = "vert-assoc";
constexpr const char* kVertClosure = "vert-closure";
constexpr const char* kCellUnitLeft = "cell-unit-left";
constexpr const char* kCellUnitRight = "cell-unit-right";
constexpr const char* kCellAssoc = "cell-assoc";
constexpr const char* kComposeError = "compose-error";

/// A composable row of child frames under a source path, together with the
/// shared boundary verticals f_0..f_n. For an empty source the row is a
/// single whiskering vertical.
struct ChildConfig {
  std::vector<Frame> frames;
  std::vector<VertId> boundary;

  std::size_t total_length() const {
    std::size_t n = 0;
    for (const auto& f : frames) n += f.source.size();
    return n;
  }
};

/// One ChildConfig per slot of a middle row, seams shared.
struct NestedConfig {
  std::vector<ChildConfig> slots;
};

class Checker {
 public:
  Checker(const FcOracle& V, const CheckBounds& b) : V(V), b(b), objs(V.objects()) {}

  LawReport check_vertical_laws() {
    LawReport rep;
    std::vector<VertId> all;
    for (ObjectId x : objs)
      for (ObjectId y : objs)
        for (VertId f : vert(x, y)) all.push_back(f);

    for (VertId f : all) {
      VertId r = V.compose_vert(f, V.id_vert(f.dom));
      rep.count(kVertUnitRight);
      if (r != f) rep.add(kVertUnitRight, "f=" + V.describe(f));
      VertId l = V.compose_vert(V.id_vert(f.cod), f);
      rep.count(kVertUnitLeft);
      if (l != f) rep.add(kVertUnitLeft, "f=" + V.describe(f));
    }
    for (VertId f : all)
      for (VertId g : all) {
        if (g.dom != f.cod) continue;
        VertId gf = V.compose_vert(g, f);
        rep.count(kVertClosure);
        const auto& candidates = vert(f.dom, g.cod);
        bool found = gf.dom == f.dom && gf.cod == g.cod &&
                     std::find(candidates.begin(), candidates.end(), gf) != candidates.end();
        if (!found)
          rep.add(kVertClosure, "g.f not listed: g=" + V.describe(g) + ", f=" + V.describe(f));
        for (VertId h : all) {
          if (h.dom != g.cod) continue;
          rep.count(kVertAssoc);
          VertId lhs = V.compose_vert(h, gf);
          VertId rhs = V.compose_vert(V.compose_vert(h, g), f);
          if (lhs != rhs)
            rep.add(kVertAssoc, "h=" + V.describe(h) + ", g=" + V.describe(g) +
                                    ", f=" + V.describe(f));
        }
      }
    return rep;
  }

  std::vector<Path> all_sources() { return all_paths(b.max_arity); }

  std::vector<Frame> frames_of_source(const Path& p) {
    std::vector<Frame> out;
    for (ObjectId x : objs)
      for (VertId f : vert(p.start(), x))
        for (ObjectId y : objs)
          for (VertId g : vert(p.end(), y))
            for (HorId m : hor(x, y)) out.push_back(Frame{p, f, g, m});
    return out;
  }

  LawReport check_frame_unit(const Frame& F) {
    LawReport rep;
    for (const TwoCell& theta : cells_of(F)) {
      try {
        std::vector<TwoCell> ids;
        std::vector<VertId> bd;
        bd.push_back(V.id_vert(F.source.start()));
        for (HorId m : F.source.cells) {
          ids.push_back(id_cell(V, m));
          bd.push_back(V.id_vert(m.dst));
        }
        TwoCell r = compose_cells(V, theta, ids, bd);
        rep.count(kCellUnitRight);
        if (r != theta)
          rep.add(kCellUnitRight, "theta=" + V.describe_cell(theta) + " at " + V.describe(F) +
                                      ", got " + V.describe_cell(r));

        TwoCell l = compose_cells(V, id_cell(V, F.target), std::vector<TwoCell>{theta},
                                  std::vector<VertId>{F.left, F.right});
        rep.count(kCellUnitLeft);
        if (l != theta)
          rep.add(kCellUnitLeft, "theta=" + V.describe_cell(theta) + " at " + V.describe(F) +
                                     ", got " + V.describe_cell(l));
      } catch (const BudgetExceeded&) {
        throw;
      } catch (const FcError& e) {
        // A broken oracle can make composition itself inconsistent; that is
        // a violation, not a checker crash.
        rep.add(kComposeError, std::string(e.what()) + " at " + V.describe(F));
      }
    }
    return rep;
  }

  /// Two-level associativity for every frame sharing one source path. The
  /// child and grandchild configurations depend only on the source, so they
  /// are enumerated once per path.
  LawReport check_source_assoc(const Path& source, const std::vector<Frame>& frames) {
    LawReport rep;
    std::vector<const std::vector<TwoCell>*> all_thetas;
    bool any = false;
    all_thetas.reserve(frames.size());
    for (const Frame& F : frames) {
      const auto& cs = cells_of(F);
      all_thetas.push_back(&cs);
      any = any || !cs.empty();
    }
    if (!any) return rep;

    for_each_child_config(source, b.max_arity, std::nullopt, [&](const ChildConfig& mc) {
      std::vector<const std::vector<TwoCell>*> mid_lists;
      mid_lists.reserve(mc.frames.size());
      for (const Frame& cf : mc.frames) {
        const auto& cs = cells_of(cf);
        if (cs.empty()) return;
        mid_lists.push_back(&cs);
      }

      std::vector<NestedConfig> nested;
      collect_nested(mc, nested);
      if (nested.empty()) return;

      for_each_product(mid_lists, [&](const std::vector<TwoCell>& mid) {
        std::vector<std::vector<std::optional<TwoCell>>> psi(frames.size());
        for (std::size_t k = 0; k < frames.size(); ++k) psi[k].resize(all_thetas[k]->size());
        for (const NestedConfig& nc : nested)
          for (std::size_t k = 0; k < frames.size(); ++k) {
            if (all_thetas[k]->empty()) continue;
            check_assoc_instance(rep, frames[k], *all_thetas[k], mc, mid, nc, psi[k]);
          }
      });
    });
    return rep;
  }

  const std::vector<TwoCell>& cells_of(const Frame& f) {
    auto it = cell_cache.find(f);
    if (it != cell_cache.end()) return it->second;
    auto cs = V.cells(f);
    if (cs.size() > b.max_cells_per_frame) throw BudgetExceeded(V.describe(f), b.max_cells_per_frame);
    return cell_cache.emplace(f, std::move(cs)).first->second;
  }

 private:
  const FcOracle& V;
  CheckBounds b;
  std::vector<ObjectId> objs;
  std::unordered_map<Frame, std::vector<TwoCell>> cell_cache;
  std::unordered_map<std::uint64_t, std::vector<HorId>> hor_cache;
  std::unordered_map<std::uint64_t, std::vector<VertId>> vert_cache;
  std::unordered_map<std::uint64_t, std::vector<Path>> path_cache;

  static std::uint64_t pair_key(ObjectId a, ObjectId b) {
    return (static_cast<std::uint64_t>(a.index) << 32) | b.index;
  }

  const std::vector<HorId>& hor(ObjectId a, ObjectId b) {
    auto [it, fresh] = hor_cache.try_emplace(pair_key(a, b));
    if (fresh) it->second = V.horizontals(a, b);
    return it->second;
  }

  const std::vector<VertId>& vert(ObjectId a, ObjectId b) {
    auto [it, fresh] = vert_cache.try_emplace(pair_key(a, b));
    if (fresh) it->second = V.verticals(a, b);
    return it->second;
  }

  /// Paths of length 0..maxlen starting at `from`, shortest first.
  const std::vector<Path>& paths_from(ObjectId from, std::uint32_t maxlen) {
    std::uint64_t key = (static_cast<std::uint64_t>(from.index) << 8) | maxlen;
    auto it = path_cache.find(key);
    if (it != path_cache.end()) return it->second;
    std::vector<Path> out{Path::empty_at(from)};
    std::size_t lo = 0;
    for (std::uint32_t len = 1; len <= maxlen; ++len) {
      std::size_t hi = out.size();
      for (std::size_t i = lo; i < hi; ++i) {
        Path base = out[i];
        ObjectId at = base.end();
        for (ObjectId y : objs)
          for (HorId m : hor(at, y)) {
            Path q = base;
            q.cells.push_back(m);
            out.push_back(std::move(q));
          }
      }
      lo = hi;
    }
    return path_cache.emplace(key, std::move(out)).first->second;
  }

  std::vector<Path> all_paths(std::uint32_t maxlen) {
    std::vector<Path> out;
    for (ObjectId x : objs) {
      const auto& ps = paths_from(x, maxlen);
      out.insert(out.end(), ps.begin(), ps.end());
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Path& a, const Path& b) { return a.size() < b.size(); });
    return out;
  }

  /// Enumerates composable child rows under `src`, with total top-row length
  /// at most `cap`. If `forced` is set it becomes boundary[0] instead of
  /// being enumerated (used to chain grandchild slots across seams).
  void for_each_child_config(const Path& src, std::uint32_t cap, std::optional<VertId> forced,
                             const std::function<void(const ChildConfig&)>& fn) {
    ChildConfig cfg;
    if (src.empty()) {
      if (forced) {
        if (forced->cod != src.anchor) return;
        cfg.boundary = {*forced};
        fn(cfg);
        return;
      }
      for (ObjectId z : objs)
        for (VertId f0 : vert(z, src.anchor)) {
          cfg.boundary = {f0};
          fn(cfg);
        }
      return;
    }

    const std::size_t n = src.size();
    auto fill = [&](auto&& self, std::size_t i, std::uint32_t remaining) -> void {
      if (i == n) {
        fn(cfg);
        return;
      }
      const HorId m = src.cells[i];
      const VertId gl = cfg.boundary.back();
      for (const Path& p : paths_from(gl.dom, remaining)) {
        for (VertId gr : vert(p.end(), m.dst)) {
          cfg.frames.push_back(Frame{p, gl, gr, m});
          cfg.boundary.push_back(gr);
          self(self, i + 1, remaining - static_cast<std::uint32_t>(p.size()));
          cfg.boundary.pop_back();
          cfg.frames.pop_back();
        }
      }
    };

    if (forced) {
      if (forced->cod != src.start()) return;
      cfg.boundary = {*forced};
      fill(fill, 0, cap);
      return;
    }
    for (ObjectId z : objs)
      for (VertId g0 : vert(z, src.start())) {
        cfg.boundary = {g0};
        fill(fill, 0, cap);
      }
  }

  /// Enumerates grandchild layers below a middle row: one child row per
  /// middle slot, seams forced, total top length at most max_arity. For a
  /// nullary middle row the layer is a single further whiskering vertical.
  void collect_nested(const ChildConfig& mc, std::vector<NestedConfig>& out) {
    if (mc.frames.empty()) {
      for (ObjectId z : objs)
        for (VertId h0 : vert(z, mc.boundary[0].dom)) {
          NestedConfig nc;
          ChildConfig w;
          w.boundary = {h0};
          nc.slots.push_back(std::move(w));
          out.push_back(std::move(nc));
        }
      return;
    }
    NestedConfig nc;
    nc.slots.resize(mc.frames.size());
    auto fill = [&](auto&& self, std::size_t slot, std::uint32_t remaining,
                    std::optional<VertId> forced) -> void {
      if (slot == mc.frames.size()) {
        out.push_back(nc);
        return;
      }
      for_each_child_config(mc.frames[slot].source, remaining, forced, [&](const ChildConfig& cc) {
        nc.slots[slot] = cc;
        std::uint32_t used = static_cast<std::uint32_t>(cc.total_length());
        self(self, slot + 1, remaining - used, cc.boundary.back());
      });
    };
    fill(fill, 0, b.max_arity, std::nullopt);
  }

  void for_each_product(const std::vector<const std::vector<TwoCell>*>& lists,
                        const std::function<void(const std::vector<TwoCell>&)>& fn) {
    std::vector<TwoCell> pick(lists.size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == lists.size()) {
        fn(pick);
        return;
      }
      for (const TwoCell& c : *lists[i]) {
        pick[i] = c;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }

  void check_assoc_instance(LawReport& rep, const Frame& F, const std::vector<TwoCell>& thetas,
                            const ChildConfig& mc, const std::vector<TwoCell>& mid,
                            const NestedConfig& nc, std::vector<std::optional<TwoCell>>& psi) {
    const std::size_t n = mc.frames.size();

    if (n == 0) {
      const VertId f0 = mc.boundary[0];
      const VertId h0 = nc.slots[0].boundary[0];
      const VertId fh = V.compose_vert(f0, h0);
      for (std::size_t t = 0; t < thetas.size(); ++t) {
        try {
          if (!psi[t])
            psi[t] = compose_cells(V, thetas[t], std::span<const TwoCell>{},
                                   std::span<const VertId>(&f0, 1));
          TwoCell lhs = compose_cells(V, *psi[t], std::span<const TwoCell>{},
                                      std::span<const VertId>(&h0, 1));
          TwoCell rhs = compose_cells(V, thetas[t], std::span<const TwoCell>{},
                                      std::span<const VertId>(&fh, 1));
          rep.count(kCellAssoc);
          if (lhs != rhs)
            rep.add(kCellAssoc, "whisker coherence: theta=" + V.describe_cell(thetas[t]) +
                                    " at " + V.describe(F) + ", f0=" + V.describe(f0) +
                                    ", h0=" + V.describe(h0));
        } catch (const BudgetExceeded&) {
          throw;
        } catch (const FcError& e) {
          rep.add(kComposeError, std::string(e.what()) + " at " + V.describe(F));
        }
      }
      return;
    }

    // Grandchild cell lists per slot, in flattened order.
    std::vector<const std::vector<TwoCell>*> gc_lists;
    std::vector<std::size_t> slot_sizes(n);
    for (std::size_t i = 0; i < n; ++i) {
      slot_sizes[i] = nc.slots[i].frames.size();
      for (const Frame& gf : nc.slots[i].frames) {
        const auto& cs = cells_of(gf);
        if (cs.empty()) return;
        gc_lists.push_back(&cs);
      }
    }

    // Flattened boundary across seams.
    std::vector<VertId> flat_boundary = nc.slots[0].boundary;
    for (std::size_t i = 1; i < n; ++i)
      flat_boundary.insert(flat_boundary.end(), nc.slots[i].boundary.begin() + 1,
                           nc.slots[i].boundary.end());

    // Outer boundary of the nested route.
    std::vector<VertId> combo(n + 1);
    for (std::size_t i = 0; i < n; ++i)
      combo[i] = V.compose_vert(mc.boundary[i], nc.slots[i].boundary.front());
    combo[n] = V.compose_vert(mc.boundary[n], nc.slots[n - 1].boundary.back());

    for_each_product(gc_lists, [&](const std::vector<TwoCell>& flat) {
      // Inner composites chi_i = mid_i o (its grandchildren).
      std::vector<TwoCell> chi(n);
      try {
        std::size_t off = 0;
        for (std::size_t i = 0; i < n; ++i) {
          std::span<const TwoCell> part(flat.data() + off, slot_sizes[i]);
          chi[i] = compose_cells(V, mid[i], part, nc.slots[i].boundary);
          off += slot_sizes[i];
        }
      } catch (const BudgetExceeded&) {
        throw;
      } catch (const FcError& e) {
        rep.add(kComposeError, std::string(e.what()) + " at " + V.describe(F));
        return;
      }
      for (std::size_t t = 0; t < thetas.size(); ++t) {
        try {
          if (!psi[t]) psi[t] = compose_cells(V, thetas[t], mid, mc.boundary);
          TwoCell lhs = compose_cells(V, *psi[t], flat, flat_boundary);
          TwoCell rhs = compose_cells(V, thetas[t], chi, combo);
          rep.count(kCellAssoc);
          if (lhs != rhs) {
            std::string witness = "theta=" + V.describe_cell(thetas[t]) + " at " +
                                  V.describe(F) + "; children=[";
            for (std::size_t i = 0; i < n; ++i) {
              if (i) witness += ",";
              witness += V.describe_cell(mid[i]) + " at " + V.describe(mc.frames[i]);
            }
            witness += "]; grandchildren=[";
            for (std::size_t i = 0; i < flat.size(); ++i) {
              if (i) witness += ",";
              witness += V.describe_cell(flat[i]);
            }
            witness +=
                "]; flattened=" + V.describe_cell(lhs) + ", nested=" + V.describe_cell(rhs);
            rep.add(kCellAssoc, witness);
          }
        } catch (const BudgetExceeded&) {
          throw;
        } catch (const FcError& e) {
          rep.add(kComposeError, std::string(e.what()) + " at " + V.describe(F));
        }
      }
    });
  }
};

}  // namespace

LawReport check_fc_laws(const FcOracle& V, const CheckBounds& bounds) {
  LawReport rep;
  rep.bounds = bounds;

  Checker plan(V, bounds);
  rep.merge(plan.check_vertical_laws());
  std::vector<Path> sources = plan.all_sources();

  const bool run_units = bounds.max_nesting >= 1;
  const bool run_assoc = bounds.max_nesting >= 2;

  unsigned hw = std::thread::hardware_concurrency();
  unsigned workers = bounds.parallel && V.concurrent_read_safe() && sources.size() > 1
                         ? std::min<unsigned>(hw ? hw : 2, 8)
                         : 1;

  auto process = [&](Checker& worker, const Path& source) {
    LawReport out;
    std::vector<Frame> frames = worker.frames_of_source(source);
    if (run_units)
      for (const Frame& f : frames) out.merge(worker.check_frame_unit(f));
    if (run_assoc) out.merge(worker.check_source_assoc(source, frames));
    return out;
  };

  if (workers <= 1) {
    for (const Path& p : sources) rep.merge(process(plan, p));
  } else {
    std::vector<LawReport> unit_reports(sources.size());
    std::vector<std::exception_ptr> errors(sources.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
      Checker local(V, bounds);
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= sources.size()) break;
        try {
          unit_reports[i] = process(local, sources[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (const auto& r : unit_reports) rep.merge(r);
  }

  std::sort(rep.violations.begin(), rep.violations.end());
  rep.pass = rep.violations.empty();
  return rep;
}

}  // namespace fcmt
