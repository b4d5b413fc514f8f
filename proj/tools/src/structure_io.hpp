#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "fcmt/bim.hpp"
#include "fcmt/double_cat.hpp"
#include "fcmt/enrich.hpp"
#include "fcmt/monoidal.hpp"
#include "fcmt/multicat.hpp"
#include "fcmt/span_universe.hpp"

namespace fcmt::cli {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// Parse failure with a line/column computed from the byte offset.
class ParseError : public FcError {
 public:
  ParseError(const std::string& msg, int line, int col)
      : FcError("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

/// Parses a document and checks the kind/format_version envelope.
json parse_document(const std::string& text);
std::string kind_of(const json& doc);

// Kind-specific loaders. They validate cross references and throw
// MalformedData (or the structure's own Malformed* error) on bad input.
SpanUniverse load_span_universe(const json& doc);
StrictMonoidalPresentation load_monoidal(const json& doc);
MulticatPresentation load_multicat(const json& doc);
StrictDoublePresentation load_double(const json& doc);

struct MonadFile {
  SpanUniverse universe;
  std::string carrier;
  std::string endo;
  std::vector<std::pair<std::vector<std::string>, std::string>> mult;
  std::vector<std::pair<std::vector<std::string>, std::string>> unit;
};
MonadFile load_monad(const json& doc);

struct BimoduleFile {
  SpanUniverse universe;
  MonadFile src;  // universes ignored; shares the outer one
  MonadFile tgt;
  std::string module_span;
  std::vector<std::pair<std::vector<std::string>, std::string>> act_src;
  std::vector<std::pair<std::vector<std::string>, std::string>> act_tgt;
};
BimoduleFile load_bimodule(const json& doc);

struct EnrichedFile {
  json base;  // a nested structure file of kind span-universe or monoidal
  std::vector<std::string> objects;
  std::vector<std::string> ends;  // object names in the base (span base only)
  std::vector<std::string> homs;  // row-major horizontal names
  json comp;                      // kind-specific cell specs, row-major
  json ids;
};
EnrichedFile load_enriched(const json& doc);

struct SubsetFamilyFile {
  FinSet base;
  std::vector<FinSet> subsets;
};
SubsetFamilyFile load_subset_family(const json& doc);

// Serializers; parse(serialize(x)) reproduces x up to canonical form.
json serialize(const SpanUniverse& u);
json serialize(const StrictMonoidalPresentation& m);
json serialize(const MulticatPresentation& p);
json serialize(const StrictDoublePresentation& d);
json serialize_monad_file(const SpanUniverse& u, const std::string& carrier,
                          const std::string& endo,
                          const std::vector<std::pair<std::vector<std::string>, std::string>>& mult,
                          const std::vector<std::pair<std::vector<std::string>, std::string>>& unit);
json serialize_bimodule_file(const BimoduleFile& f);
json serialize_enriched_file(const EnrichedFile& f);
json serialize_subset_family(const FinSet& base, const std::vector<FinSet>& subsets);

/// Resolves a monad file against the Span oracle built from its universe.
Monad resolve_monad(const SpanFcOracle& V, const MonadFile& f);
Bimodule resolve_bimodule(const SpanFcOracle& V, const BimoduleFile& f);

/// Builds a named cell table for a frame of a Span oracle from
/// [[tuple...], value] entries, matching tuples by apex element names.
TwoCell cell_from_entries(
    const SpanFcOracle& V, const Frame& frame,
    const std::vector<std::pair<std::vector<std::string>, std::string>>& entries);

/// Renders a LawReport as a json object (stable key order, sorted
/// violations).
json report_json(const LawReport& rep);

}  // namespace fcmt::cli
