#ifndef ORIFOLD_IO_DOCIO_HPP
#define ORIFOLD_IO_DOCIO_HPP

#include "cohft/tree.hpp"
#include "frame/dejet.hpp"
#include "monodromy/datum.hpp"
#include "zsystem/loglaurent.hpp"

#include <json.hpp>

namespace orifold {

using json = nlohmann::json;

inline constexpr const char* kDocVersion = "orifold/1";

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json series_to_json(const FormalSeries& s);
FormalSeries series_from_json(const json& j, int nvars, int order);

json matrix_to_json(const ScalarMatrix& m);
ScalarMatrix matrix_from_json(const json& j);

json structure_to_json(const FlatFStructure& s);
FlatFStructure structure_from_json(const json& j);

json datum_to_json(const MonodromyDatum& m);
MonodromyDatum datum_from_json(const json& j);

json dejet_to_json(const DEJet& jet);
DEJet dejet_from_json(const json& j);

json tree_to_json(const StableTree& t);
StableTree tree_from_json(const json& j);

// z-window document for Levelt / infinity solutions: matrices keyed by
// (z power, log power) with the certified window made explicit.
json loglaurent_to_json(const LogLaurentSeries& s);

// document dispatch: the "type" field selects the schema
std::string doc_type(const json& j);

}  // namespace orifold

#endif
