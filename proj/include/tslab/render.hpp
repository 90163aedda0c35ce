#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tslab/series.hpp"

namespace tslab {

enum class TableFormat { fixed, tsv, csv };

std::optional<TableFormat> table_format_from_string(std::string_view name);

/// A rectangular table of pre-formatted cells; missing values are empty
/// strings. Rendering is deterministic: fixed-width columns or delimited rows.
class Table {
  public:
    explicit Table(std::vector<std::string> header);

    void add_row(std::vector<std::string> cells);
    void write(std::ostream& out, TableFormat format) const;

    std::size_t rows() const noexcept { return rows_.size(); }

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Value formatted per the unit hint: integer -> "5197", one_decimal -> "48.3",
/// raw -> shortest round-trip decimal. Missing (nullopt) -> "".
std::string format_value(std::optional<double> v, UnitHint unit);

/// Fixed decimal places, e.g. format_fixed(11.6436, 2) -> "11.64".
std::string format_fixed(double v, int decimals);

/// Shortest decimal that parses back to the same double.
std::string format_full(double v);

/// Coefficient at 4 significant digits, e.g. 0.6958, 228.3, 0.00224.
std::string format_coefficient(double v);

}  // namespace tslab
