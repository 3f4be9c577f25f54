#pragma once

#include <string>
#include <vector>

#include "webfold/mdiagram.hpp"
#include "webfold/planar_web.hpp"
#include "webfold/tableau.hpp"
#include "webfold/web2.hpp"

namespace webfold {

std::string svg_of_tableau(const Tableau& t);
std::string svg_of_matching(const Matching2& m);
/// Exact semicircles over the boundary line; crossings marked with dots.
std::string svg_of_diagram(const GeneralizedMDiagram& m);
std::string svg_of_web(const PlanarWeb& w);

/// The stored embedding when the web carries one, otherwise boundary vertices
/// on a circle and internal vertices relaxed to the barycenter of their
/// neighbours.
std::vector<Point> layout_web(const PlanarWeb& w);

}  // namespace webfold
