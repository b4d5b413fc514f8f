#pragma once

#include <memory>

#include "fcmt/bim.hpp"
#include "fcmt/fincat.hpp"
#include "fcmt/span_universe.hpp"

namespace fcmt {

/// Accumulates finite categories, functors and profunctors into one span
/// universe, returning handles that resolve to Bim-flavored structures over
/// the built oracle. Inputs are law-checked on entry (NotACategory,
/// NotAFunctor, NotAProfunctor).
class SpanSceneBuilder {
 public:
  std::uint32_t add_category(const std::string& name, FinCategory c);
  std::uint32_t add_functor(const std::string& name, std::uint32_t from, std::uint32_t to,
                            FinFunctor F);
  std::uint32_t add_profunctor(const std::string& name, std::uint32_t from, std::uint32_t to,
                               Profunctor p);
  /// Declares every function between the object sets of two encoded
  /// categories, so monad-map enumeration ranges over all candidates.
  void add_all_object_functions(std::uint32_t from, std::uint32_t to);
  /// Declares an extra span between the object sets of two encoded
  /// categories (a bimodule carrier candidate).
  void add_span(const std::string& name, std::uint32_t from, std::uint32_t to,
                std::vector<std::string> apex, std::vector<std::uint32_t> leg_l,
                std::vector<std::uint32_t> leg_r);

  struct Scene {
    std::shared_ptr<const SpanFcOracle> oracle;
    std::vector<Monad> monads;
    std::vector<MonadMap> functor_maps;
    std::vector<Bimodule> profunctor_bimodules;
  };
  Scene build() const;

 private:
  struct Cat {
    std::string name;
    FinCategory c;
  };
  struct Fun {
    std::string name;
    std::uint32_t from, to;
    FinFunctor F;
  };
  struct Prof {
    std::string name;
    std::uint32_t from, to;
    Profunctor p;
  };
  std::vector<Cat> cats_;
  std::vector<Fun> funs_;
  std::vector<Prof> profs_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> all_fn_pairs_;
  std::vector<std::tuple<std::string, std::uint32_t, std::uint32_t, std::vector<std::string>,
                         std::vector<std::uint32_t>, std::vector<std::uint32_t>>>
      extra_spans_;
};

/// A single category encoded as a monad in Span.
struct CatSpanEncoding {
  std::shared_ptr<const SpanFcOracle> oracle;
  Monad monad;
};
CatSpanEncoding cat_to_monad(const FinCategory& c);

/// Reads a small category back off a Span monad. Throws NotAMonad if the
/// monad laws fail, i.e. always returns a lawful category.
FinCategory monad_to_cat(const SpanFcOracle& V, const Monad& m);

struct FunctorSpanEncoding {
  std::shared_ptr<const SpanFcOracle> oracle;
  Monad src;
  Monad tgt;
  MonadMap map;
};
FunctorSpanEncoding functor_to_monad_map(const FinCategory& c, const FinCategory& d,
                                         const FinFunctor& F);

struct ProfunctorSpanEncoding {
  std::shared_ptr<const SpanFcOracle> oracle;
  Monad src;
  Monad tgt;
  Bimodule bimodule;
};
ProfunctorSpanEncoding profunctor_to_bimodule(const FinCategory& c, const FinCategory& d,
                                              const Profunctor& p);

/// Reads the profunctor back off a Span bimodule (inverse of
/// profunctor_to_bimodule up to names).
Profunctor bimodule_to_profunctor(const SpanFcOracle& V, const Bimodule& b);

}  // namespace fcmt
