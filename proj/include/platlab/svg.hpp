#pragma once

#include "platlab/labyrinth.hpp"
#include "platlab/twist_calculus.hpp"

#include <string>

namespace platlab {

// All renderers are deterministic: fixed number formatting, stable ids and
// elements emitted in a canonical order.
std::string render_weighted_diagram(const WeightedDiagram& d);
std::string render_curve(const PlanarCurve& c, int b);
std::string render_labyrinth(const Labyrinth& lab);

}  // namespace platlab
