#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fcmt/law_report.hpp"

namespace fcmt {

/// A finite category by tables.
struct FinCategory {
  struct Mor {
    std::string name;
    std::uint32_t dom = 0;
    std::uint32_t cod = 0;
  };

  std::vector<std::string> objects;
  std::vector<Mor> morphisms;
  /// compose[(g, f)] = g o f, keyed (g << 32 | f), defined when dom g == cod f
  std::unordered_map<std::uint64_t, std::uint32_t> compose;
  std::vector<std::uint32_t> identities;

  static std::uint64_t key(std::uint32_t g, std::uint32_t f) {
    return (static_cast<std::uint64_t>(g) << 32) | f;
  }
  std::uint32_t comp(std::uint32_t g, std::uint32_t f) const { return compose.at(key(g, f)); }

  std::optional<std::uint32_t> object_index(const std::string& name) const;
  std::optional<std::uint32_t> morphism_index(const std::string& name) const;

  /// Structure and laws; throws NotACategory on the first failure.
  void check() const;
  LawReport check_laws() const;
};

// Small stock categories used across tests, demos and fixtures.
FinCategory discrete_category(std::uint32_t n);
FinCategory arrow_category();
FinCategory monoid_category(const std::vector<std::string>& elems,
                            const std::vector<std::vector<std::uint32_t>>& table,
                            std::uint32_t unit);
FinCategory chain_poset(std::uint32_t n);
FinCategory parallel_pair_category();

/// A functor between finite categories, by object and morphism tables.
struct FinFunctor {
  std::vector<std::uint32_t> obj_map;
  std::vector<std::uint32_t> mor_map;

  /// Throws NotAFunctor unless the maps respect endpoints, identities and
  /// composition.
  void check(const FinCategory& from, const FinCategory& to) const;
  LawReport check_laws(const FinCategory& from, const FinCategory& to) const;
};

FinFunctor identity_functor(const FinCategory& c);

/// A profunctor C -+-> D: a set of elements positioned over (c, d) pairs
/// with a contravariant C-action and a covariant D-action.
struct Profunctor {
  struct Elem {
    std::string name;
    std::uint32_t c = 0;
    std::uint32_t d = 0;
  };

  std::vector<Elem> elems;
  /// act_c[(u, e)] = e.u for u: c -> c' in C and e over (c', d); result over (c, d)
  std::unordered_map<std::uint64_t, std::uint32_t> act_c;
  /// act_d[(w, e)] = w.e for w: d -> d' in D and e over (c, d); result over (c, d')
  std::unordered_map<std::uint64_t, std::uint32_t> act_d;

  static std::uint64_t key(std::uint32_t m, std::uint32_t e) {
    return (static_cast<std::uint64_t>(m) << 32) | e;
  }

  void check(const FinCategory& c, const FinCategory& d) const;
  LawReport check_laws(const FinCategory& c, const FinCategory& d) const;
};

/// The hom profunctor of a category: elements are its morphisms, both
/// actions are composition.
Profunctor hom_profunctor(const FinCategory& c);

}  // namespace fcmt
