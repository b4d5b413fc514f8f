#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>

#include "fcmt/finset.hpp"
#include "fcmt/oracle.hpp"

namespace fcmt {

/// A finite collection of named finite sets, functions and spans, closed
/// enough to support law checks. Functions are the vertical generators; the
/// oracle closes them under composition and adds identities.
struct SpanUniverse {
  std::vector<FinSet> sets;
  std::vector<FinFunction> functions;
  std::vector<SpanData> spans;
  bool partial_bijections_only = false;

  std::optional<std::uint32_t> set_index(const std::string& name) const;
  std::optional<std::uint32_t> span_index(const std::string& name) const;

  /// Structural validation; throws MalformedUniverse (or NotMonic when the
  /// partial-bijection flag is set and a span leg is not injective).
  void validate() const;
};

/// The limit of a path of spans, in index form. For an empty path the limit
/// is the anchor set itself: tuple i stands for anchor element i.
struct PathLimit {
  std::uint32_t start_set = 0;
  std::uint32_t end_set = 0;
  std::size_t length = 0;
  std::vector<std::vector<std::uint32_t>> tuples;
  std::vector<std::uint32_t> start_proj;
  std::vector<std::uint32_t> end_proj;

  std::size_t size() const { return tuples.size(); }
};

PathLimit compute_path_limit(const SpanUniverse& u, std::span<const std::uint32_t> span_path,
                             std::uint32_t anchor_set);

/// The limit of a span path materialized as a span of the same universe's
/// sets, with canonical tuple element names. A path of length one is the
/// span itself, unchanged; an empty path is the identity span on the anchor.
SpanData path_limit(const SpanUniverse& u, const std::vector<std::uint32_t>& span_path,
                    std::optional<std::uint32_t> anchor_set = std::nullopt);

/// Name-based convenience over the index form; throws MalformedPath for
/// unknown names or non-composable steps.
SpanData path_limit(const SpanUniverse& u, const std::vector<std::string>& span_names,
                    const std::string& anchor_set_name = "");

class SpanFcOracle;

/// Builds the Span oracle over a universe: objects are the sets, vertical
/// 1-cells the functions (closed under composition, with identities),
/// horizontal 1-cells the spans, and a 2-cell in a frame is a function from
/// the source path's limit to the target apex commuting with both legs.
std::shared_ptr<const SpanFcOracle> span_fc(SpanUniverse u);

/// Validates that every span has injective legs (partial bijections), then
/// returns the Span oracle over the restricted universe. Throws NotMonic
/// naming the offending span and leg.
std::shared_ptr<const SpanFcOracle> parbjn_check_and_restrict(SpanUniverse u);

class SpanFcOracle final : public FcOracle {
 public:
  explicit SpanFcOracle(SpanUniverse u);

  std::vector<ObjectId> objects() const override;
  std::vector<VertId> verticals(ObjectId from, ObjectId to) const override;
  std::vector<HorId> horizontals(ObjectId from, ObjectId to) const override;
  std::vector<TwoCell> cells(const Frame& frame) const override;
  VertId id_vert(ObjectId x) const override;
  VertId compose_vert(VertId g, VertId f) const override;
  TwoCell id_cell(HorId m) const override;
  TwoCell compose_raw(const TwoCell& theta, std::span<const TwoCell> children,
                      std::span<const VertId> boundary) const override;

  using FcOracle::describe;
  std::string describe(ObjectId x) const override;
  std::string describe(VertId f) const override;
  std::string describe(HorId m) const override;
  std::string describe_cell(const TwoCell& c) const override;

  const SpanUniverse& universe() const { return u_; }

  // Id lookup by universe content.
  ObjectId object(std::uint32_t set_index) const;
  std::optional<ObjectId> object_named(const std::string& set_name) const;
  HorId horizontal(std::uint32_t span_index) const;
  std::optional<HorId> horizontal_named(const std::string& span_name) const;
  std::optional<VertId> vertical_named(const std::string& function_name) const;
  std::optional<VertId> vertical_by_table(std::uint32_t dom_set, std::uint32_t cod_set,
                                          const std::vector<std::uint32_t>& table) const;
  /// The function table behind a vertical 1-cell.
  const std::vector<std::uint32_t>& vertical_table(VertId f) const;

  /// Builds (and interns) the 2-cell given by an explicit value table from
  /// the source path's limit to the target apex. Throws FrameError if the
  /// table does not commute with the frame's legs and verticals.
  TwoCell make_cell(const Frame& frame, const std::vector<std::uint32_t>& table) const;

  /// The value table behind a cell; throws UnknownCell for foreign ids.
  std::vector<std::uint32_t> cell_table(const TwoCell& c) const;

  PathLimit limit_of(const Path& p) const;

 private:
  struct Vertical {
    std::string name;
    std::uint32_t dom = 0;
    std::uint32_t cod = 0;
    std::vector<std::uint32_t> table;
  };

  void check_object(ObjectId x) const;
  void check_vertical(VertId f) const;
  void check_horizontal(HorId m) const;
  void check_frame(const Frame& f) const;
  TwoCell intern(const Frame& frame, std::vector<std::uint32_t> table) const;
  std::vector<std::uint32_t> lookup_table(const TwoCell& c) const;
  VertId vert_id(std::uint32_t vert_index) const;

  SpanUniverse u_;
  std::vector<Vertical> verts_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> vert_lookup_;

  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> cell_store_;
};

}  // namespace fcmt
