// csv.hpp — Fixed-schema CSV emission for diagnostic time series plus a
// small reader used by the plot command and round-trip tests

#pragma once

#include "qcr/scenario.hpp"

#include <string>
#include <vector>

namespace qcr::io {

// Header "t,p_ee,s_lin,tangle,concurrence,p_att_plus,p_att_minus", one row
// per time point, 12 significant digits, newline-terminated rows. The
// column order never depends on the scenario's `outputs` selection.
void write_csv(const scenario::TimeSeries& series, const std::string& path);
std::string csv_text(const scenario::TimeSeries& series);

// Generic numeric table with named columns.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    // Index of a named column; throws std::invalid_argument when missing.
    std::size_t column_index(const std::string& name) const;
};

Table read_table(const std::string& path);
Table parse_table(const std::string& text, const std::string& origin);

} // namespace qcr::io
