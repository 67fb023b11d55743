#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "c2/arith.hpp"

namespace c2::cli {

enum class Format { csv, json };

/// 12 significant digits, shortest form (printf "%.12g", C locale).
std::string format_real(double value);

using StringList = std::vector<std::string>;

// StringList renders as one ';'-joined CSV field and as a JSON array.
using Cell = std::variant<i64, u64, double, bool, std::string, StringList>;

/// A header plus rows, written as CSV (LF endings) or as a JSON array of
/// objects whose keys are the header fields in order.
class Table {
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<Cell> row);
    std::size_t size() const { return rows_.size(); }

    void write(std::ostream& out, Format format) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<Cell>> rows_;
};

}  // namespace c2::cli
