#pragma once

#include <functional>
#include <memory>
#include <random>

#include "fcmt/compose.hpp"
#include "fcmt/span_universe.hpp"

namespace fcmt::testing {

/// X={x1,x2}, Y={y1,y2}, Z={z1}; A: X <- {a1,a2,a3} -> Y; B: Y <- {b1,b2} -> Z.
inline SpanUniverse u1_universe() {
  SpanUniverse u;
  u.sets.push_back({"X", {"x1", "x2"}});
  u.sets.push_back({"Y", {"y1", "y2"}});
  u.sets.push_back({"Z", {"z1"}});
  SpanData A;
  A.name = "A";
  A.src = 0;
  A.dst = 1;
  A.apex = {"a1", "a2", "a3"};
  A.leg_l = {0, 0, 1};
  A.leg_r = {0, 1, 1};
  u.spans.push_back(A);
  SpanData B;
  B.name = "B";
  B.src = 1;
  B.dst = 2;
  B.apex = {"b1", "b2"};
  B.leg_l = {1, 1};
  B.leg_r = {0, 0};
  u.spans.push_back(B);
  return u;
}

/// U1 plus a couple of functions so the vertical category is interesting.
inline SpanUniverse u1_with_functions() {
  SpanUniverse u = u1_universe();
  u.functions.push_back({"swapX", 0, 0, {1, 0}});
  u.functions.push_back({"collapseY", 1, 1, {0, 0}});
  u.functions.push_back({"xToY", 0, 1, {0, 1}});
  return u;
}

/// One point, one identity-like span; the terminal fc-multicategory.
inline SpanUniverse terminal_universe() {
  SpanUniverse u;
  u.sets.push_back({"P", {"p"}});
  SpanData T;
  T.name = "T";
  T.src = T.dst = 0;
  T.apex = {"t"};
  T.leg_l = {0};
  T.leg_r = {0};
  u.spans.push_back(T);
  return u;
}

/// Enumerate-and-filter oracle for Span 2-cells, fully independent of
/// SpanFcOracle: enumerates limit tuples by nested scanning and then every
/// function into the target apex, filtering by the two commuting squares.
/// Returns the surviving value tables in lexicographic order.
inline std::vector<std::vector<std::uint32_t>> brute_span_cells(
    const SpanUniverse& u, const std::vector<std::uint32_t>& span_path,
    std::uint32_t anchor_set, const std::vector<std::uint32_t>& left_table,
    const std::vector<std::uint32_t>& right_table, std::uint32_t target_span) {
  // All matched tuples of the path, with their endpoint values.
  struct Tup {
    std::vector<std::uint32_t> coords;
    std::uint32_t start, end;
  };
  std::vector<Tup> tuples;
  if (span_path.empty()) {
    for (std::uint32_t i = 0; i < u.sets[anchor_set].size(); ++i) tuples.push_back({{}, i, i});
  } else {
    std::vector<std::uint32_t> cur(span_path.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == span_path.size()) {
        tuples.push_back({cur, u.spans[span_path.front()].leg_l[cur.front()],
                          u.spans[span_path.back()].leg_r[cur.back()]});
        return;
      }
      const SpanData& sp = u.spans[span_path[i]];
      for (std::uint32_t a = 0; a < sp.apex.size(); ++a) {
        if (i > 0 && u.spans[span_path[i - 1]].leg_r[cur[i - 1]] != sp.leg_l[a]) continue;
        cur[i] = a;
        rec(i + 1);
      }
    };
    rec(0);
  }

  const SpanData& tgt = u.spans[target_span];
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> table(tuples.size(), 0);
  std::function<void(std::size_t)> enumerate = [&](std::size_t i) {
    if (i == tuples.size()) {
      for (std::size_t t = 0; t < tuples.size(); ++t) {
        if (tgt.leg_l[table[t]] != left_table[tuples[t].start]) return;
        if (tgt.leg_r[table[t]] != right_table[tuples[t].end]) return;
      }
      out.push_back(table);
      return;
    }
    for (std::uint32_t a = 0; a < tgt.apex.size(); ++a) {
      table[i] = a;
      enumerate(i + 1);
    }
  };
  if (tgt.apex.empty() && !tuples.empty()) return {};
  enumerate(0);
  return out;
}

/// Wrapper oracle that remaps one composition result to another cell of the
/// same frame; used to prove the law checker detects corrupted composition.
class MutatedComposeOracle final : public FcOracle {
 public:
  MutatedComposeOracle(std::shared_ptr<const FcOracle> base, TwoCell from, TwoCell to)
      : base_(std::move(base)), from_(std::move(from)), to_(std::move(to)) {}

  std::vector<ObjectId> objects() const override { return base_->objects(); }
  std::vector<VertId> verticals(ObjectId a, ObjectId b) const override {
    return base_->verticals(a, b);
  }
  std::vector<HorId> horizontals(ObjectId a, ObjectId b) const override {
    return base_->horizontals(a, b);
  }
  std::vector<TwoCell> cells(const Frame& f) const override { return base_->cells(f); }
  VertId id_vert(ObjectId x) const override { return base_->id_vert(x); }
  VertId compose_vert(VertId g, VertId f) const override { return base_->compose_vert(g, f); }
  TwoCell id_cell(HorId m) const override { return base_->id_cell(m); }
  TwoCell compose_raw(const TwoCell& theta, std::span<const TwoCell> children,
                      std::span<const VertId> boundary) const override {
    TwoCell r = base_->compose_raw(theta, children, boundary);
    if (r == from_) return to_;
    return r;
  }
  bool concurrent_read_safe() const override { return base_->concurrent_read_safe(); }
  using FcOracle::describe;
  std::string describe(ObjectId x) const override { return base_->describe(x); }
  std::string describe(VertId f) const override { return base_->describe(f); }
  std::string describe(HorId m) const override { return base_->describe(m); }
  std::string describe_cell(const TwoCell& c) const override { return base_->describe_cell(c); }

 private:
  std::shared_ptr<const FcOracle> base_;
  TwoCell from_, to_;
};

/// Wrapper that corrupts one vertical composition entry.
class MutatedVertOracle final : public FcOracle {
 public:
  MutatedVertOracle(std::shared_ptr<const FcOracle> base, VertId g, VertId f, VertId instead)
      : base_(std::move(base)), g_(g), f_(f), instead_(instead) {}

  std::vector<ObjectId> objects() const override { return base_->objects(); }
  std::vector<VertId> verticals(ObjectId a, ObjectId b) const override {
    return base_->verticals(a, b);
  }
  std::vector<HorId> horizontals(ObjectId a, ObjectId b) const override {
    return base_->horizontals(a, b);
  }
  std::vector<TwoCell> cells(const Frame& f) const override { return base_->cells(f); }
  VertId id_vert(ObjectId x) const override { return base_->id_vert(x); }
  VertId compose_vert(VertId g, VertId f) const override {
    if (g == g_ && f == f_) return instead_;
    return base_->compose_vert(g, f);
  }
  TwoCell id_cell(HorId m) const override { return base_->id_cell(m); }
  TwoCell compose_raw(const TwoCell& theta, std::span<const TwoCell> children,
                      std::span<const VertId> boundary) const override {
    return base_->compose_raw(theta, children, boundary);
  }
  using FcOracle::describe;
  std::string describe(ObjectId x) const override { return base_->describe(x); }
  std::string describe(VertId f) const override { return base_->describe(f); }
  std::string describe(HorId m) const override { return base_->describe(m); }
  std::string describe_cell(const TwoCell& c) const override { return base_->describe_cell(c); }

 private:
  std::shared_ptr<const FcOracle> base_;
  VertId g_, f_, instead_;
};

/// Deterministic small random universe generator (used by oracle-equivalence
/// and round-trip suites).
inline SpanUniverse random_universe(std::mt19937& rng, std::uint32_t max_sets = 3,
                                    std::uint32_t max_size = 3, std::uint32_t max_spans = 4) {
  auto pick = [&](std::uint32_t lo, std::uint32_t hi) {
    return lo + static_cast<std::uint32_t>(rng() % (hi - lo + 1));
  };
  SpanUniverse u;
  std::uint32_t nsets = pick(1, max_sets);
  for (std::uint32_t s = 0; s < nsets; ++s) {
    FinSet fs;
    fs.name = "S" + std::to_string(s);
    std::uint32_t size = pick(0, max_size);
    for (std::uint32_t e = 0; e < size; ++e)
      fs.elems.push_back("s" + std::to_string(s) + "e" + std::to_string(e));
    u.sets.push_back(std::move(fs));
  }
  std::uint32_t nspans = pick(1, max_spans);
  for (std::uint32_t k = 0; k < nspans; ++k) {
    SpanData sp;
    sp.name = "M" + std::to_string(k);
    sp.src = pick(0, nsets - 1);
    sp.dst = pick(0, nsets - 1);
    if (u.sets[sp.src].size() == 0 || u.sets[sp.dst].size() == 0) {
      u.spans.push_back(std::move(sp));
      continue;
    }
    std::uint32_t apex = pick(0, max_size);
    for (std::uint32_t a = 0; a < apex; ++a) {
      sp.apex.push_back("m" + std::to_string(k) + "e" + std::to_string(a));
      sp.leg_l.push_back(pick(0, static_cast<std::uint32_t>(u.sets[sp.src].size()) - 1));
      sp.leg_r.push_back(pick(0, static_cast<std::uint32_t>(u.sets[sp.dst].size()) - 1));
    }
    u.spans.push_back(std::move(sp));
  }
  // A couple of functions between nonempty sets.
  std::uint32_t nfun = pick(0, 2);
  for (std::uint32_t k = 0; k < nfun; ++k) {
    std::uint32_t dom = pick(0, nsets - 1), cod = pick(0, nsets - 1);
    if (u.sets[cod].size() == 0) continue;
    FinFunction fn;
    fn.name = "f" + std::to_string(k);
    fn.dom = dom;
    fn.cod = cod;
    for (std::size_t e = 0; e < u.sets[dom].size(); ++e)
      fn.table.push_back(pick(0, static_cast<std::uint32_t>(u.sets[cod].size()) - 1));
    bool dup = false;
    for (const auto& g : u.functions) dup = dup || g.name == fn.name;
    if (!dup) u.functions.push_back(std::move(fn));
  }
  return u;
}

}  // namespace fcmt::testing
