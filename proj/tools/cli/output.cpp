#include "output.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace c2::cli {

namespace {

std::string csv_cell(const Cell& cell) {
    struct Visitor {
        std::string operator()(i64 v) const { return std::to_string(v); }
        std::string operator()(u64 v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_real(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const {
            if (v.find_first_of(",\"\n") == std::string::npos) return v;
            std::string quoted = "\"";
            for (char c : v) {
                if (c == '"') quoted += '"';
                quoted += c;
            }
            return quoted + "\"";
        }
        std::string operator()(const StringList& v) const {
            std::string joined;
            for (std::size_t i = 0; i < v.size(); ++i) joined += (i ? ";" : "") + v[i];
            return (*this)(joined);
        }
    };
    return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json json_cell(const Cell& cell) {
    struct Visitor {
        nlohmann::ordered_json operator()(i64 v) const { return v; }
        nlohmann::ordered_json operator()(u64 v) const { return v; }
        // round-trip through the CSV text so both formats carry the same digits
        nlohmann::ordered_json operator()(double v) const { return std::stod(format_real(v)); }
        nlohmann::ordered_json operator()(bool v) const { return v; }
        nlohmann::ordered_json operator()(const std::string& v) const { return v; }
        nlohmann::ordered_json operator()(const StringList& v) const { return v; }
    };
    return std::visit(Visitor{}, cell);
}

}  // namespace

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != header_.size()) throw std::logic_error("row width does not match header");
    rows_.push_back(std::move(row));
}

void Table::write(std::ostream& out, Format format) const {
    if (format == Format::csv) {
        for (std::size_t i = 0; i < header_.size(); ++i) out << (i ? "," : "") << header_[i];
        out << '\n';
        for (const auto& row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
            out << '\n';
        }
        return;
    }
    auto doc = nlohmann::ordered_json::array();
    for (const auto& row : rows_) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[header_[i]] = json_cell(row[i]);
        doc.push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
}

}  // namespace c2::cli
