#include "fcmt/restrict.hpp"

#include "fcmt/errors.hpp"

namespace fcmt {

namespace {

class RestrictedOracle final : public FcOracle {
 public:
  explicit RestrictedOracle(std::shared_ptr<const FcOracle> base) : base_(std::move(base)) {}

  std::vector<ObjectId> objects() const override { return base_->objects(); }

  std::vector<VertId> verticals(ObjectId from, ObjectId to) const override {
    if (from != to) return {};
    return {base_->id_vert(from)};
  }

  std::vector<HorId> horizontals(ObjectId from, ObjectId to) const override {
    return base_->horizontals(from, to);
  }

  std::vector<TwoCell> cells(const Frame& frame) const override { return base_->cells(frame); }

  VertId id_vert(ObjectId x) const override { return base_->id_vert(x); }

  VertId compose_vert(VertId g, VertId f) const override { return base_->compose_vert(g, f); }

  TwoCell id_cell(HorId m) const override { return base_->id_cell(m); }

  TwoCell compose_raw(const TwoCell& theta, std::span<const TwoCell> children,
                      std::span<const VertId> boundary) const override {
    return base_->compose_raw(theta, children, boundary);
  }

  bool concurrent_read_safe() const override { return base_->concurrent_read_safe(); }

  using FcOracle::describe;
  std::string describe(ObjectId x) const override { return base_->describe(x); }
  std::string describe(VertId f) const override { return base_->describe(f); }
  std::string describe(HorId m) const override { return base_->describe(m); }
  std::string describe_cell(const TwoCell& c) const override { return base_->describe_cell(c); }

 private:
  std::shared_ptr<const FcOracle> base_;
};

}  // namespace

std::shared_ptr<const FcOracle> restrict_verticals_to_identities(
    std::shared_ptr<const FcOracle> base) {
  if (!base) throw FcError("restrict_verticals_to_identities: null oracle");
  return std::make_shared<RestrictedOracle>(std::move(base));
}

}  // namespace fcmt
