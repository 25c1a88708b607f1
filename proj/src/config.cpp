#include "contact2d/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <sstream>

#include "contact2d/errors.hpp"

namespace contact2d {

namespace {

KeySpec real_key(const std::string& def, std::string help) {
    return {KeySpec::Kind::real, def, {}, std::move(help)};
}
KeySpec int_key(const std::string& def, std::string help) {
    return {KeySpec::Kind::integer, def, {}, std::move(help)};
}
KeySpec bool_key(const std::string& def, std::string help) {
    return {KeySpec::Kind::boolean, def, {}, std::move(help)};
}
KeySpec choice_key(const std::string& def, std::vector<std::string> choices, std::string help) {
    return {KeySpec::Kind::choice, def, std::move(choices), std::move(help)};
}
KeySpec text_key(const std::string& def, std::string help) {
    return {KeySpec::Kind::text, def, {}, std::move(help)};
}

void append_common(KeyRegistry& r) {
    r.emplace_back("format", choice_key("csv", {"csv", "json"}, "output table format"));
    r.emplace_back("out", text_key("-", "output path, '-' for stdout"));
}

KeyRegistry make_scatter() {
    KeyRegistry r;
    r.emplace_back("mode", choice_key("renormalized", {"renormalized", "bare"},
                                      "amplitude family"));
    r.emplace_back("case", choice_key("i", {"i", "ii"},
                                      "bare mode: fixed g0 (i) or running coupling (ii)"));
    r.emplace_back("sweep", choice_key("k", {"k", "kappa"}, "sweep variable"));
    r.emplace_back("geometry", choice_key("disk", {"disk", "disk-asymptotic", "square"},
                                          "loop-integral cutoff geometry (bare mode)"));
    r.emplace_back("k", real_key("1", "on-shell momentum for kappa sweeps"));
    r.emplace_back("k_min", real_key("0.1", "k sweep start"));
    r.emplace_back("k_max", real_key("10", "k sweep end"));
    r.emplace_back("kappa_min", real_key("10", "kappa sweep start"));
    r.emplace_back("kappa_max", real_key("1e8", "kappa sweep end"));
    r.emplace_back("points", int_key("50", "sweep sample count"));
    r.emplace_back("spacing", choice_key("log", {"log", "linear"}, "sweep spacing"));
    r.emplace_back("g", real_key("1", "renormalized coupling"));
    r.emplace_back("g0", real_key("1", "bare coupling (case i)"));
    r.emplace_back("kappa", real_key("100", "cutoff for bare k sweeps"));
    r.emplace_back("mu", real_key("1", "renormalization point"));
    r.emplace_back("mass", real_key("1", "kinetic mass"));
    r.emplace_back("lambda0", real_key("1.0471975511965976", "quartic coupling (case ii)"));
    r.emplace_back("m_sq", real_key("1", "renormalized mass^2 (case ii)"));
    r.emplace_back("c_log", real_key("1", "counterterm slope (case ii)"));
    r.emplace_back("kappa_ref", real_key("1", "counterterm reference cutoff (case ii)"));
    append_common(r);
    return r;
}

KeyRegistry make_bound() {
    KeyRegistry r;
    r.emplace_back("g_min", real_key("0.5", "coupling sweep start"));
    r.emplace_back("g_max", real_key("10", "coupling sweep end"));
    r.emplace_back("points", int_key("25", "sweep sample count"));
    r.emplace_back("spacing", choice_key("log", {"log", "linear"}, "sweep spacing"));
    r.emplace_back("mu", real_key("1", "renormalization point"));
    append_common(r);
    return r;
}

KeyRegistry make_regcompare() {
    KeyRegistry r;
    r.emplace_back("eps_min", real_key("0.001", "smallest regulator scale"));
    r.emplace_back("eps_max", real_key("0.1", "largest regulator scale"));
    r.emplace_back("points", int_key("9", "sweep sample count"));
    r.emplace_back("running", bool_key("true", "re-derive g0(kappa) from the counterterm"));
    r.emplace_back("g0", real_key("-1", "frozen coupling when running = false"));
    r.emplace_back("lambda0", real_key("1.0471975511965976", "quartic coupling"));
    r.emplace_back("m_sq", real_key("1", "renormalized mass^2"));
    r.emplace_back("c_log", real_key("1", "counterterm slope"));
    r.emplace_back("kappa_ref", real_key("1", "counterterm reference cutoff"));
    r.emplace_back("mass", real_key("1", "kinetic mass"));
    r.emplace_back("sigma", real_key("1", "lattice mass convention factor"));
    append_common(r);
    return r;
}

KeyRegistry make_edscan() {
    KeyRegistry r;
    r.emplace_back("task", choice_key("stability", {"stability", "tg"}, "scan kind"));
    r.emplace_back("dim", int_key("1", "lattice dimension (1 or 2)"));
    r.emplace_back("L", int_key("8", "sites per side"));
    r.emplace_back("periodic", bool_key("true", "periodic boundary conditions"));
    r.emplace_back("t", real_key("1", "hopping"));
    r.emplace_back("U", real_key("-2", "onsite coupling"));
    r.emplace_back("n_min", int_key("1", "smallest particle number"));
    r.emplace_back("n_max", int_key("4", "largest particle number"));
    r.emplace_back("tol", real_key("1e-8", "eigensolver residual tolerance"));
    r.emplace_back("seed", int_key("0", "eigensolver start-vector seed"));
    r.emplace_back("cap", int_key("500000", "basis dimension cap"));
    r.emplace_back("N", int_key("41", "tg: particle number (odd)"));
    r.emplace_back("length", real_key("41", "tg: ring length"));
    r.emplace_back("j_min", int_key("1", "tg: first excitation index"));
    r.emplace_back("j_max", int_key("5", "tg: last excitation index"));
    append_common(r);
    return r;
}

KeyRegistry make_passivity() {
    KeyRegistry r;
    r.emplace_back("u_min", real_key("0", "boost sweep start"));
    r.emplace_back("u_max", real_key("0.99", "boost sweep end"));
    r.emplace_back("points", int_key("12", "sweep sample count"));
    r.emplace_back("m", real_key("1", "particle mass"));
    r.emplace_back("c", real_key("1", "speed of light"));
    r.emplace_back("n", int_key("1", "particle count"));
    append_common(r);
    return r;
}

const std::map<std::string, KeyRegistry>& registries() {
    static const std::map<std::string, KeyRegistry> reg = [] {
        std::map<std::string, KeyRegistry> m;
        m["scatter"] = make_scatter();
        m["bound"] = make_bound();
        m["regcompare"] = make_regcompare();
        m["edscan"] = make_edscan();
        m["passivity"] = make_passivity();
        return m;
    }();
    return reg;
}

const KeySpec* find_key(const KeyRegistry& r, const std::string& key) {
    for (const auto& [k, spec] : r)
        if (k == key) return &spec;
    return nullptr;
}

double parse_real(const std::string& text, const std::string& where) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || errno == ERANGE)
        throw config_error(where + ": cannot parse '" + text + "' as a real number");
    return v;
}

std::int64_t parse_integer(const std::string& text, const std::string& where) {
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(text.c_str(), &end, 10);
    if (end == text.c_str() || *end != '\0' || errno == ERANGE)
        throw config_error(where + ": cannot parse '" + text + "' as an integer");
    return v;
}

bool parse_boolean(const std::string& text, const std::string& where) {
    if (text == "true" || text == "on" || text == "1") return true;
    if (text == "false" || text == "off" || text == "0") return false;
    throw config_error(where + ": cannot parse '" + text + "' as a boolean");
}

void validate_value(const KeySpec& spec, const std::string& key, const std::string& value,
                    const std::string& where) {
    switch (spec.kind) {
        case KeySpec::Kind::real:
            parse_real(value, where);
            break;
        case KeySpec::Kind::integer:
            parse_integer(value, where);
            break;
        case KeySpec::Kind::boolean:
            parse_boolean(value, where);
            break;
        case KeySpec::Kind::choice:
            if (std::find(spec.choices.begin(), spec.choices.end(), value) ==
                spec.choices.end()) {
                std::string allowed;
                for (const auto& c : spec.choices)
                    allowed += (allowed.empty() ? "" : ", ") + c;
                throw config_error(where + ": invalid value '" + value + "' for key '" + key +
                                   "' (allowed: " + allowed + ")");
            }
            break;
        case KeySpec::Kind::text:
            break;
    }
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

const std::vector<std::string>& subcommand_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, reg] : registries()) v.push_back(name);
        return v;
    }();
    return names;
}

const KeyRegistry& key_registry(const std::string& subcommand) {
    const auto& reg = registries();
    const auto it = reg.find(subcommand);
    if (it == reg.end()) throw config_error("unknown subcommand '" + subcommand + "'");
    return it->second;
}

double RunConfig::real(const std::string& key) const {
    return parse_real(values.at(key), "key '" + key + "'");
}

std::int64_t RunConfig::integer(const std::string& key) const {
    return parse_integer(values.at(key), "key '" + key + "'");
}

bool RunConfig::boolean(const std::string& key) const {
    return parse_boolean(values.at(key), "key '" + key + "'");
}

const std::string& RunConfig::text(const std::string& key) const {
    return values.at(key);
}

RunConfig parse_config(const std::string& subcommand, const std::string& file_text,
                       const std::vector<std::pair<std::string, std::string>>& overrides) {
    const KeyRegistry& reg = key_registry(subcommand);
    RunConfig cfg;
    cfg.subcommand = subcommand;
    for (const auto& [key, spec] : reg) cfg.values[key] = spec.default_value;

    std::istringstream in(file_text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const std::string where = "line " + std::to_string(lineno);
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw config_error(where + ": expected 'key = value', got '" + body + "'");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (key.empty()) throw config_error(where + ": empty key");
        const KeySpec* spec = find_key(reg, key);
        if (!spec)
            throw config_error(where + ": unknown key '" + key + "' for subcommand '" +
                               subcommand + "'");
        validate_value(*spec, key, value, where);
        cfg.values[key] = value;  // later lines win
    }

    for (const auto& [key, value] : overrides) {
        const KeySpec* spec = find_key(reg, key);
        if (!spec)
            throw config_error("flag --" + key + ": unknown key for subcommand '" +
                               subcommand + "'");
        validate_value(*spec, key, value, "flag --" + key);
        cfg.values[key] = value;
    }
    return cfg;
}

}  // namespace contact2d
