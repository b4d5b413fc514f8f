#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "fcmt/finset.hpp"
#include "fcmt/law_report.hpp"
#include "fcmt/oracle.hpp"

namespace fcmt {

/// An ordinary (colored) multicategory by finite tables, with operation sets
/// tabulated up to arity_bound and composition given entry by entry.
struct MulticatPresentation {
  struct Op {
    std::string name;
    std::vector<std::uint32_t> inputs;
    std::uint32_t output = 0;
  };

  std::vector<std::string> objects;
  std::uint32_t arity_bound = 3;
  std::vector<Op> ops;
  /// identities[c] = unary identity operation of color c
  std::vector<std::uint32_t> identities;

  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
      detail::Fnv64 h;
      for (auto x : v) h.feed_u32(x);
      return static_cast<std::size_t>(h.digest());
    }
  };
  /// compose[{op, child_1, ..., child_n}] = composite op. Total for every
  /// well-typed combination whose flattened arity stays within arity_bound.
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, KeyHash> compose;

  std::optional<std::uint32_t> object_index(const std::string& name) const;
  std::optional<std::uint32_t> op_index(const std::string& name) const;

  void validate_structure() const;
  LawReport check_laws() const;
};

/// The terminal multicategory: one color, exactly one operation per arity.
MulticatPresentation terminal_multicat(std::uint32_t arity_bound);

/// The multicategory of a finite monoid: one color, operations of every
/// arity are the monoid elements, and composition multiplies everything out
/// left to right. `table[a][b]` is a*b and `unit` the neutral element.
MulticatPresentation monoid_multicat(const std::vector<std::string>& elems,
                                     const std::vector<std::vector<std::uint32_t>>& table,
                                     std::uint32_t unit, std::uint32_t arity_bound);

/// The sub-multicategory of operations on `carrier` generated by a binary
/// table and a nullary constant (together with the identity), tabulated up
/// to `arity_bound` and closed under composition. Operation names encode
/// their value tables, so they are stable across runs.
struct GeneratedEndoMulticat {
  MulticatPresentation presentation;
  std::string mult_op;
  std::string unit_op;
};
GeneratedEndoMulticat generated_endo_multicat(const FinSet& carrier,
                                              const std::vector<std::uint32_t>& mult_table,
                                              std::uint32_t unit, std::uint32_t arity_bound = 3);

class MulticatFcOracle;

/// One object, one vertical 1-cell, horizontal 1-cells the colors, and the
/// 2-cells in a frame (M_1,...,M_n) => M are the tabulated operations
/// O(M_1,...,M_n; M). Frames above the arity bound raise ArityBoundExceeded.
std::shared_ptr<const MulticatFcOracle> multicat_fc(MulticatPresentation p);

/// As multicat_fc but skips the load-time law check; for presentations that
/// are lawful by construction (e.g. generated_endo_multicat closures, where
/// composition is genuine function substitution).
std::shared_ptr<const MulticatFcOracle> multicat_fc_unchecked(MulticatPresentation p);

class MulticatFcOracle final : public FcOracle {
 public:
  explicit MulticatFcOracle(MulticatPresentation p, bool check_laws = true);

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

  const MulticatPresentation& presentation() const { return p_; }
  HorId color(std::uint32_t index) const;
  std::optional<HorId> color_named(const std::string& name) const;
  TwoCell cell_of_op(std::uint32_t op_index) const;
  TwoCell cell_of_op(const std::string& op_name) const;
  std::uint32_t op_of_cell(const TwoCell& c) const;

 private:
  void check_frame(const Frame& f) const;
  TwoCell intern(const Frame& frame, std::uint32_t op) const;

  MulticatPresentation p_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint64_t, std::uint32_t> cell_store_;
};

/// The multicategory of all finitary operations on a finite carrier: one
/// object, one horizontal 1-cell, and the 2-cells of arity n are every
/// function carrier^n -> carrier, composed by substitution. Operation sets
/// are enumerated on demand, so law checking needs a budget fitting
/// |S|^(|S|^arity).
class EndoMulticatOracle final : public FcOracle {
 public:
  explicit EndoMulticatOracle(FinSet carrier);

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

  const FinSet& carrier() const { return s_; }
  HorId hom() const { return HorId{0, ObjectId{0}, ObjectId{0}}; }
  Frame op_frame(std::size_t arity) const;

  /// Wraps a function table carrier^n -> carrier (indexed lexicographically,
  /// last coordinate fastest) as the 2-cell of the canonical arity-n frame.
  TwoCell make_op(std::size_t arity, const std::vector<std::uint32_t>& table) const;
  std::vector<std::uint32_t> op_table(const TwoCell& c) const;

 private:
  void check_frame(const Frame& f) const;
  TwoCell intern(const Frame& frame, std::vector<std::uint32_t> table) const;
  std::size_t power(std::size_t n) const;

  FinSet s_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> cell_store_;
};

std::shared_ptr<const EndoMulticatOracle> endo_multicat(FinSet carrier);

}  // namespace fcmt
