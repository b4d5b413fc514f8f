#pragma once

#include <compare>
#include <cstdint>
#include <functional>

namespace fcmt {

/// Identifiers are opaque per-oracle handles. Vertical and horizontal ids
/// carry their endpoints so frames can be validated without callbacks into
/// the owning oracle.
struct ObjectId {
  std::uint32_t index = 0;
  auto operator<=>(const ObjectId&) const = default;
};

struct VertId {
  std::uint32_t index = 0;
  ObjectId dom;
  ObjectId cod;
  auto operator<=>(const VertId&) const = default;
};

struct HorId {
  std::uint32_t index = 0;
  ObjectId src;
  ObjectId dst;
  auto operator<=>(const HorId&) const = default;
};

/// Cell ids are content-derived 64-bit digests, so equal cells get equal ids
/// regardless of the order in which an oracle first saw them.
struct CellId {
  std::uint64_t value = 0;
  auto operator<=>(const CellId&) const = default;
};

namespace detail {

inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

struct Fnv64 {
  std::uint64_t state = kFnvOffset;
  void feed_byte(unsigned char b) {
    state ^= b;
    state *= kFnvPrime;
  }
  void feed_u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) feed_byte(static_cast<unsigned char>(v >> (8 * i)));
  }
  void feed_u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) feed_byte(static_cast<unsigned char>(v >> (8 * i)));
  }
  std::uint64_t digest() const { return state; }
};

}  // namespace detail

}  // namespace fcmt

template <>
struct std::hash<fcmt::ObjectId> {
  std::size_t operator()(const fcmt::ObjectId& x) const noexcept { return x.index; }
};
template <>
struct std::hash<fcmt::VertId> {
  std::size_t operator()(const fcmt::VertId& v) const noexcept {
    fcmt::detail::Fnv64 h;
    h.feed_u32(v.index);
    h.feed_u32(v.dom.index);
    h.feed_u32(v.cod.index);
    return static_cast<std::size_t>(h.digest());
  }
};
template <>
struct std::hash<fcmt::HorId> {
  std::size_t operator()(const fcmt::HorId& m) const noexcept {
    fcmt::detail::Fnv64 h;
    h.feed_u32(m.index);
    h.feed_u32(m.src.index);
    h.feed_u32(m.dst.index);
    return static_cast<std::size_t>(h.digest());
  }
};
template <>
struct std::hash<fcmt::CellId> {
  std::size_t operator()(const fcmt::CellId& c) const noexcept {
    return static_cast<std::size_t>(c.value);
  }
};
