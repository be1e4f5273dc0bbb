// svg.hpp — Self-contained SVG line plots: one polyline per selected
// column, axis ticks and a legend, no imaging dependencies

#pragma once

#include "qcr/csv.hpp"

#include <string>
#include <vector>

namespace qcr::plot {

// Renders the named columns of `table` against its first column. Unknown or
// empty column selections are invalid arguments; write failures are io
// errors.
std::string render_svg(const io::Table& table, const std::vector<std::string>& columns);

void render_plot(const io::Table& table, const std::vector<std::string>& columns,
                 const std::string& path);

} // namespace qcr::plot
