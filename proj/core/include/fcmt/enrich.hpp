#pragma once

#include <memory>
#include <optional>

#include "fcmt/bim.hpp"
#include "fcmt/monoidal.hpp"
#include "fcmt/multicat.hpp"
#include "fcmt/span_universe.hpp"

namespace fcmt {

/// A category enriched in an fc-multicategory: a label set, an end-object
/// and hom 1-cell assignment, composition 2-cells (hom(a,b), hom(b,c)) =>
/// hom(a,c) and identity 2-cells ()@end(a) => hom(a,a), all with identity
/// verticals.
struct EnrichedCategory {
  std::vector<std::string> labels;
  std::vector<ObjectId> ends;
  std::vector<HorId> homs;    // row-major labels x labels
  std::vector<TwoCell> comp;  // row-major labels^3, (a,b,c)
  std::vector<TwoCell> ids;

  std::size_t size() const { return labels.size(); }
  const HorId& hom(std::size_t a, std::size_t b) const { return homs[a * size() + b]; }
  const TwoCell& comp_at(std::size_t a, std::size_t b, std::size_t c) const {
    return comp[(a * size() + b) * size() + c];
  }
  const TwoCell& id_at(std::size_t a) const { return ids[a]; }
};

/// Frame conformance first (throws FrameError naming the offending triple or
/// label), then every associativity instance (|C0|^4) and both unit laws
/// (|C0|^2), by explicit core compositions.
LawReport check_enriched(const FcOracle& V, const EnrichedCategory& C);

/// The end monad of a label: (end(a), hom(a,a), comp(a,a,a), id(a)).
Monad enriched_end_monad(const EnrichedCategory& C, std::size_t a);
/// The hom bimodule of a pair: carrier hom(a,b) acted by comp(a,a,b) and
/// comp(a,b,b).
Bimodule enriched_hom_bimodule(const EnrichedCategory& C, std::size_t a, std::size_t b);

/// The subset-family construction: ends C_i, hom(i,j) the intersection
/// partial bijection C_i <- C_i n C_j -> C_j, composition the inclusion of
/// the triple intersection, identities the diagonal inclusion.
struct SubsetEnrichment {
  std::shared_ptr<const SpanFcOracle> oracle;
  EnrichedCategory category;
};
SubsetEnrichment parbjn_from_subsets(const FinSet& base, const std::vector<FinSet>& family);

/// Classical enrichment data over a monoidal oracle: hom objects plus
/// composition morphisms hom(b,c) (x) hom(a,b) -> hom(a,c) and unit
/// morphisms I -> hom(a,a), by presentation names.
struct ClassicalEnrichedData {
  std::vector<std::string> labels;
  std::vector<std::string> hom_objects;     // labels x labels
  std::vector<std::string> comp_morphisms;  // labels^3
  std::vector<std::string> id_morphisms;    // labels
};
EnrichedCategory classical_enriched_adapter(const MonoidalFcOracle& V,
                                            const ClassicalEnrichedData& data);

/// The object part of the transfer (categories enriched in V) ->
/// (categories enriched in Bim V): ends become end monads, homs become hom
/// bimodules, comp and ids are reused as equivariant cells. Throws
/// SourceInvalid if C fails check_enriched over the base oracle.
EnrichedCategory enrich_to_bim(const BimOracle& BV, const EnrichedCategory& C);

/// The two-element monoidal poset: objects {"0","1"}, tensor = min, unit
/// "1", hom(a,b) a singleton exactly when a <= b.
StrictMonoidalPresentation v2_poset_presentation();

/// Builds the enriched category over v2 encoding a relation on n labels:
/// hom(a,b) = "1" iff relation[a][b]. Returns nullopt when a required comp
/// or id cell does not exist, i.e. exactly when the relation is not
/// reflexive-transitive.
std::optional<EnrichedCategory> relation_enriched(const MonoidalFcOracle& v2,
                                                  const std::vector<std::vector<bool>>& relation);

/// One-object enriched category over the endomorphism multicategory of a
/// carrier: comp is the binary table, id the nullary constant. Always
/// constructible; check_enriched passes exactly for monoids.
EnrichedCategory table_enriched(const EndoMulticatOracle& V,
                                const std::vector<std::uint32_t>& mult_table, std::uint32_t unit);

}  // namespace fcmt
