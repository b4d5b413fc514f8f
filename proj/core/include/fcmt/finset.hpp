#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fcmt {

/// A named finite set with distinct, named elements.
struct FinSet {
  std::string name;
  std::vector<std::string> elems;

  std::size_t size() const { return elems.size(); }
  std::optional<std::uint32_t> find(const std::string& e) const {
    for (std::uint32_t i = 0; i < elems.size(); ++i)
      if (elems[i] == e) return i;
    return std::nullopt;
  }
};

/// A total function between two sets of a SpanUniverse, by set index.
/// table[i] is the element index in the codomain of the i-th domain element.
struct FinFunction {
  std::string name;
  std::uint32_t dom = 0;
  std::uint32_t cod = 0;
  std::vector<std::uint32_t> table;
};

/// A span src <- apex -> dst between two sets of a SpanUniverse.
struct SpanData {
  std::string name;
  std::uint32_t src = 0;
  std::uint32_t dst = 0;
  std::vector<std::string> apex;
  std::vector<std::uint32_t> leg_l;
  std::vector<std::uint32_t> leg_r;

  bool leg_l_injective() const { return injective(leg_l); }
  bool leg_r_injective() const { return injective(leg_r); }

 private:
  static bool injective(const std::vector<std::uint32_t>& t) {
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j)
        if (t[i] == t[j]) return false;
    return true;
  }
};

}  // namespace fcmt
