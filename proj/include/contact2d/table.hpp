#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace contact2d {

using Cell = std::variant<double, std::int64_t, std::string>;

// Column-named rectangular result table, the common output of every CLI subcommand.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);  // arity- and type-checked against the first row
};

enum class OutFormat { csv, json };

OutFormat parse_format(const std::string& name);

// Deterministic rendering: shortest round-trip decimals, '\n' endings, stable key order.
std::string render_table(const Table& t, OutFormat f);

// path "-" writes to stdout.
void emit_table(const Table& t, OutFormat f, const std::string& path);

std::string format_double(double x);
std::string format_int(std::int64_t x);

}  // namespace contact2d
