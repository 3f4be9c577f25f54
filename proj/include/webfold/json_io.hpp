#pragma once

// JSON forms of tableaux, 2-web matchings, arc diagrams and planar webs.
//
// Web vertices are numbered from 1 in JSON: boundary vertices 1..N, internal
// vertices N+1..N+m. Dart 2e leaves the "from" end of edge e (edges counted
// from 0), dart 2e+1 leaves its "to" end.

#include "json.hpp"
#include "webfold/mdiagram.hpp"
#include "webfold/planar_web.hpp"
#include "webfold/tableau.hpp"
#include "webfold/web2.hpp"
#include "webfold/web3.hpp"

namespace webfold {

using Json = nlohmann::ordered_json;

Json tableau_to_json(const Tableau& t);
/// Accepts {"outer":[...],"inner":[...],"word":"..."}, {"rows":[[...],...]}
/// or a bare word string.
Tableau tableau_from_json(const Json& j);

Json matching_to_json(const Matching2& m);
Matching2 matching_from_json(const Json& j);

Json diagram_to_json(const GeneralizedMDiagram& m);
GeneralizedMDiagram diagram_from_json(const Json& j);

Json web_to_json(const PlanarWeb& w, bool with_canonical = true);
PlanarWeb web_from_json(const Json& j);

Json decomposition_to_json(const DominoDecomposition& dd);

Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& r);

/// Parses text, raising ParseError on malformed input.
Json parse_json(const std::string& text);

}  // namespace webfold
