#include "contact2d/table.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "contact2d/errors.hpp"
#include "json.hpp"

namespace contact2d {

std::string format_double(double x) {
    if (x == 0.0) x = 0.0;  // drop the sign of -0
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    (void)ec;
    return std::string(buf, ptr);
}

std::string format_int(std::int64_t x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    (void)ec;
    return std::string(buf, ptr);
}

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw domain_error("table row arity " + std::to_string(row.size()) +
                           " does not match " + std::to_string(columns.size()) + " columns");
    if (!rows.empty()) {
        for (std::size_t i = 0; i < row.size(); ++i)
            if (row[i].index() != rows.front()[i].index())
                throw domain_error("heterogeneous cell type in column '" + columns[i] + "'");
    }
    rows.push_back(std::move(row));
}

OutFormat parse_format(const std::string& name) {
    if (name == "csv") return OutFormat::csv;
    if (name == "json") return OutFormat::json;
    throw config_error("unknown output format '" + name + "' (expected csv or json)");
}

namespace {

std::string csv_cell(const Cell& c) {
    if (auto* d = std::get_if<double>(&c)) return format_double(*d);
    if (auto* i = std::get_if<std::int64_t>(&c)) return format_int(*i);
    return std::get<std::string>(c);
}

std::string render_csv(const Table& t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += t.columns[i];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_cell(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const Table& t) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (auto* d = std::get_if<double>(&row[i]))
                obj[t.columns[i]] = *d == 0.0 ? 0.0 : *d;
            else if (auto* n = std::get_if<std::int64_t>(&row[i]))
                obj[t.columns[i]] = *n;
            else
                obj[t.columns[i]] = std::get<std::string>(row[i]);
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

}  // namespace

std::string render_table(const Table& t, OutFormat f) {
    return f == OutFormat::csv ? render_csv(t) : render_json(t);
}

void emit_table(const Table& t, OutFormat f, const std::string& path) {
    const std::string body = render_table(t, f);
    if (path == "-") {
        std::cout << body;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    out.flush();
    if (!out) throw io_error("write failed for '" + path + "'");
}

}  // namespace contact2d
