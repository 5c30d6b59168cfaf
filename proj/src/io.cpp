#include "tk/io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tk {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

bool stable_output() {
    const char* env = std::getenv("TK_STABLE_OUTPUT");
    return env && std::atoi(env) != 0;
}

}  // namespace

Tournament read_tournament_file(const std::string& path) {
    std::string text = read_file(path);
    size_t nl = text.find('\n');
    return parse_tk_line(nl == std::string::npos ? text : text.substr(0, nl));
}

void write_tournament_file(const std::string& path, const Tournament& t) {
    write_file(path, to_tk_line(t) + "\n");
}

std::string catalog_to_text(const Catalog& catalog) {
    std::string out = "TKC1 n=" + std::to_string(catalog.n) +
                      " count=" + std::to_string(catalog.codes.size()) + "\n";
    for (const CanonicalCode& c : catalog.codes) out += c.hex() + "\n";
    return out;
}

Catalog catalog_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header))
        throw std::invalid_argument("empty catalog");
    int n = 0;
    std::size_t count = 0;
    {
        std::istringstream hs(header);
        std::string magic, nfield, cfield;
        hs >> magic >> nfield >> cfield;
        if (magic != "TKC1" || nfield.substr(0, 2) != "n=" ||
            cfield.substr(0, 6) != "count=")
            throw std::invalid_argument("bad catalog header: " + header);
        n = std::atoi(nfield.c_str() + 2);
        count = static_cast<std::size_t>(std::atoll(cfield.c_str() + 6));
    }
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("catalog vertex count out of range");
    Catalog catalog;
    catalog.n = n;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty()) continue;
        ArcCode code = ArcCode::from_hex(n, line);
        catalog.codes.push_back(CanonicalCode{code.n, code.w});
    }
    if (catalog.codes.size() != count)
        throw std::invalid_argument("catalog count mismatch: header says " +
                                    std::to_string(count) + ", found " +
                                    std::to_string(catalog.codes.size()));
    for (std::size_t i = 1; i < catalog.codes.size(); ++i)
        if (!(catalog.codes[i - 1] < catalog.codes[i]))
            throw std::invalid_argument("catalog codes are not strictly increasing");
    return catalog;
}

Catalog read_catalog_file(const std::string& path) {
    return catalog_from_text(read_file(path));
}

void write_catalog_file(const std::string& path, const Catalog& catalog) {
    write_file(path, catalog_to_text(catalog));
}

std::string omega_to_json(const OmegaReport& report) {
    nlohmann::json j;
    j["m"] = report.m;
    auto hexes = [](const std::vector<CanonicalCode>& codes) {
        std::vector<std::string> out;
        for (const auto& c : codes) out.push_back(c.hex());
        return out;
    };
    j["i_small"] = hexes(report.i_small);
    j["i_big"] = hexes(report.i_big);
    j["members"] = nlohmann::json::array();
    for (const auto& member : report.members)
        j["members"].push_back({{"code", member.code.hex()},
                                {"provenance", member.provenance}});
    j["note"] = report.note;
    return j.dump(2) + "\n";
}

std::string report_to_json(const Report& report) {
    nlohmann::json j;
    j["suite"] = report.suite;
    j["params"] = report.params;
    j["instances_checked"] = report.instances_checked;
    j["violations"] = nlohmann::json::array();
    for (const auto& v : report.violations)
        j["violations"].push_back({{"instance", v.instance},
                                   {"expected", v.expected},
                                   {"observed", v.observed}});
    j["runtime_ms"] = stable_output() ? 0 : report.runtime_ms;
    j["deterministic"] = report.deterministic;
    return j.dump(2) + "\n";
}

std::string report_to_text(const Report& report) {
    std::string out = "suite: " + report.suite + "\n";
    out += "params:";
    for (const auto& [key, value] : report.params) out += " " + key + "=" + value;
    out += "\n";
    out += "instances_checked: " + std::to_string(report.instances_checked) + "\n";
    if (!stable_output())
        out += "runtime_ms: " + std::to_string(report.runtime_ms) + "\n";
    if (report.violations.empty()) {
        out += "result: PASS\n";
    } else {
        out += "result: FAIL (" +
               std::to_string(report.violations.size() + report.overflow_count) +
               " violations";
        if (report.overflow_count > 0)
            out += ", " + std::to_string(report.violations.size()) + " shown";
        out += ")\n";
        for (const auto& v : report.violations)
            out += "  instance " + v.instance + ": expected " + v.expected +
                   ", observed " + v.observed + "\n";
    }
    return out;
}

}  // namespace tk
