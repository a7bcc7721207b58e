#include "gft/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gft {

namespace {

std::string fmt_double(double v) {
    // Shortest round-trip representation, same as the JSON writer uses.
    return nlohmann::json(v).dump();
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<double> parse_doubles(const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

} // namespace

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    RunConfig cfg;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key=value, got \"" + line + "\"");
        cfg.apply(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

void RunConfig::apply(const std::string& key, const std::string& value) {
    if (key == "series_order") series_order = std::stoi(value);
    else if (key == "grid.radii_count") grid_radii = std::stoi(value);
    else if (key == "grid.angles") grid_angles = std::stoi(value);
    else if (key == "grid.refine") grid_refine = (value == "1" || value == "true");
    else if (key == "ladder_rhos") ladder_rhos = parse_doubles(value);
    else if (key == "curve_samples") curve_samples = std::stoi(value);
    else if (key == "winding_samples") winding_samples = std::stoi(value);
    else if (key == "grunsky_order") grunsky_order = std::stoi(value);
    else if (key == "tol_geometric") tol_geometric = std::stod(value);
    else if (key == "tol_norm") tol_norm = std::stod(value);
    else if (key == "seed") seed = std::stoull(value);
    else if (key == "threads") threads = std::stoi(value);
    else throw std::invalid_argument("config: unknown key \"" + key + "\"");
}

std::string RunConfig::canonical() const {
    std::ostringstream out;
    out << "curve_samples=" << curve_samples;
    out << ";grid.angles=" << grid_angles;
    out << ";grid.radii_count=" << grid_radii;
    out << ";grid.refine=" << (grid_refine ? 1 : 0);
    out << ";grunsky_order=" << grunsky_order;
    out << ";ladder_rhos=";
    for (std::size_t i = 0; i < ladder_rhos.size(); ++i) {
        if (i) out << ",";
        out << fmt_double(ladder_rhos[i]);
    }
    out << ";seed=" << seed;
    out << ";series_order=" << series_order;
    out << ";threads=" << threads;
    out << ";tol_geometric=" << fmt_double(tol_geometric);
    out << ";tol_norm=" << fmt_double(tol_norm);
    out << ";winding_samples=" << winding_samples;
    return out.str();
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string fnv1a_hex(const std::string& s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a:%016llx",
                  static_cast<unsigned long long>(fnv1a64(s)));
    return buf;
}

std::string ClaimReport::to_json() const {
    nlohmann::ordered_json j;
    j["claim_id"] = claim_id;
    j["paper_anchor"] = paper_anchor;
    j["inputs"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : inputs) j["inputs"][k] = v;
    j["computed"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : computed) j["computed"][k] = v;
    if (!notes.empty()) {
        j["notes"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : notes) j["notes"][k] = v;
    }
    j["verdict"] = verdict;
    j["tolerance"] = tolerance;
    if (seed) j["seed"] = *seed;
    j["config"] = config;
    return wrap_with_hash(j.dump());
}

std::string wrap_with_hash(const std::string& body_object) {
    auto body = nlohmann::ordered_json::parse(body_object);
    if (!body.is_object())
        throw std::invalid_argument("wrap_with_hash: body must be a JSON object");
    std::string digest = fnv1a_hex(body.dump());
    nlohmann::ordered_json out;
    out["hash"] = digest;
    for (auto& [k, v] : body.items()) out[k] = v;
    return out.dump(2) + "\n";
}

bool verify_report_hash(const std::string& json_text) {
    auto doc = nlohmann::ordered_json::parse(json_text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("hash")) return false;
    std::string stored = doc["hash"].get<std::string>();
    nlohmann::ordered_json body;
    for (auto& [k, v] : doc.items())
        if (k != "hash") body[k] = v;
    return fnv1a_hex(body.dump()) == stored;
}

} // namespace gft
