#include "qcr/csv.hpp"

#include "qcr/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qcr::io {
namespace {

void append_value(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    out += buf;
}

} // namespace

std::string csv_text(const scenario::TimeSeries& series) {
    if (series.records.empty()) {
        throw std::invalid_argument("csv_text: series is empty");
    }
    std::string out = "t,p_ee,s_lin,tangle,concurrence,p_att_plus,p_att_minus\n";
    for (const auto& r : series.records) {
        append_value(out, r.t);
        out += ',';
        append_value(out, r.p_ee);
        out += ',';
        append_value(out, r.s_lin);
        out += ',';
        append_value(out, r.tangle);
        out += ',';
        append_value(out, r.concurrence);
        out += ',';
        append_value(out, r.p_att_plus);
        out += ',';
        append_value(out, r.p_att_minus);
        out += '\n';
    }
    return out;
}

void write_csv(const scenario::TimeSeries& series, const std::string& path) {
    const std::string text = csv_text(series);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw io_error("cannot open for writing: " + path);
    }
    out << text;
    if (!out) {
        throw io_error("write failed: " + path);
    }
}

std::size_t Table::column_index(const std::string& name) const {
    for (std::size_t k = 0; k < columns.size(); ++k) {
        if (columns[k] == name) {
            return k;
        }
    }
    throw std::invalid_argument("unknown column '" + name + "'");
}

Table parse_table(const std::string& text, const std::string& origin) {
    Table table;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(cell);
        }
        if (table.columns.empty()) {
            table.columns = cells;
            continue;
        }
        if (cells.size() != table.columns.size()) {
            std::ostringstream msg;
            msg << origin << ":" << line_no << ": expected " << table.columns.size()
                << " cells, got " << cells.size();
            throw io_error(msg.str());
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& c : cells) {
            try {
                row.push_back(std::stod(c));
            } catch (const std::exception&) {
                std::ostringstream msg;
                msg << origin << ":" << line_no << ": malformed number '" << c << "'";
                throw io_error(msg.str());
            }
        }
        table.rows.push_back(std::move(row));
    }
    if (table.columns.empty()) {
        throw io_error(origin + ": no header row");
    }
    return table;
}

Table read_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_table(buffer.str(), path);
}

} // namespace qcr::io
