#include "tslab/render.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace tslab {

std::optional<TableFormat> table_format_from_string(std::string_view name) {
    if (name == "table" || name == "fixed") return TableFormat::fixed;
    if (name == "tsv") return TableFormat::tsv;
    if (name == "csv") return TableFormat::csv;
    return std::nullopt;
}

Table::Table(std::vector<std::string> header) : header_(std::move(header)) {}

void Table::add_row(std::vector<std::string> cells) {
    cells.resize(header_.size());
    rows_.push_back(std::move(cells));
}

void Table::write(std::ostream& out, TableFormat format) const {
    if (format != TableFormat::fixed) {
        const char sep = format == TableFormat::tsv ? '\t' : ',';
        auto emit = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) out << sep;
                out << cells[i];
            }
            out << '\n';
        };
        emit(header_);
        for (const auto& row : rows_) emit(row);
        return;
    }

    std::vector<std::size_t> width(header_.size());
    for (std::size_t i = 0; i < header_.size(); ++i) width[i] = header_[i].size();
    for (const auto& row : rows_)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());

    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << "  ";
            out << cells[i];
            if (i + 1 < cells.size())
                out << std::string(width[i] - cells[i].size(), ' ');
        }
        out << '\n';
    };
    emit(header_);
    std::size_t total = 0;
    for (std::size_t w : width) total += w;
    out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
    for (const auto& row : rows_) emit(row);
}

std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    // avoid the "-0" / "-0.0" artifact
    std::string s = buf;
    if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
    return s;
}

std::string format_full(double v) {
    char buf[64];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, v);
        double parsed = 0.0;
        std::sscanf(buf, "%lf", &parsed);
        if (parsed == v) break;
    }
    return buf;
}

std::string format_coefficient(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string format_value(std::optional<double> v, UnitHint unit) {
    if (!v) return "";
    switch (unit) {
        case UnitHint::integer: return format_fixed(*v, 0);
        case UnitHint::one_decimal: return format_fixed(*v, 1);
        case UnitHint::raw: return format_full(*v);
    }
    return format_full(*v);
}

}  // namespace tslab
