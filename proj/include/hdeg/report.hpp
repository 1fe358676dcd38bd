#ifndef HDEG_REPORT_HPP
#define HDEG_REPORT_HPP

#include <json.hpp>

#include "hdeg/cache.hpp"
#include "hdeg/hilbert.hpp"
#include "hdeg/homdeg.hpp"
#include "hdeg/theorems.hpp"

namespace hdeg {

using json = nlohmann::ordered_json;

/// Exact integers travel as decimal strings; no floats appear in reports.
inline std::string decimal(const ZZ& z) { return z.str(); }

/// Digest of the instance text, insensitive to whitespace-only edits.
inline std::string instance_digest(const std::string& text) {
    std::string squeezed;
    squeezed.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) squeezed.push_back(c);
    return sha256_hex(squeezed);
}

inline json to_json(const HilbertSamuelResult& hs) {
    json j;
    j["dim"] = hs.dim;
    json e = json::array();
    for (const auto& v : hs.e) e.push_back(decimal(v));
    j["e"] = e;
    j["postulation_index"] = hs.postulation_index;
    json values = json::array();
    for (const auto& v : hs.values) values.push_back(decimal(v));
    j["length_table"] = values;
    j["chi1"] = decimal(euler_characteristic_chi1(hs));
    if (hs.dim >= 1) j["sectional_genus"] = decimal(sectional_genus(hs));
    return j;
}

inline json to_json(const HdegNode& node) {
    json j;
    if (node.j >= 0) j["deficiency_index"] = node.j;
    if (node.dim) j["dim"] = *node.dim;
    else j["dim"] = "-inf";
    if (node.length) j["length"] = decimal(*node.length);
    j["e0"] = decimal(node.e0);
    j["hdeg"] = decimal(node.hdeg);
    if (!node.children.empty()) {
        json kids = json::array();
        for (const auto& c : node.children) kids.push_back(to_json(c));
        j["children"] = kids;
    }
    return j;
}

inline json to_json(const HdegReport& rep) {
    json j;
    j["tree"] = to_json(rep.root);
    json t = json::object();
    for (std::size_t i = 0; i < rep.torsions.size(); ++i)
        t["T" + std::to_string(i + 1)] = decimal(rep.torsions[i]);
    j["torsions"] = t;
    if (rep.sv) j["sv_invariant"] = decimal(*rep.sv);
    else j["sv_invariant"] = "not generalized CM";
    return j;
}

inline json to_json(const TheoremCheck& c) {
    json j;
    j["theorem_id"] = c.theorem_id;
    json hyp = json::array();
    for (const auto& [name, ok] : c.hypotheses) {
        json h;
        h["name"] = name;
        h["satisfied"] = ok;
        hyp.push_back(h);
    }
    j["hypotheses_verified"] = hyp;
    json q = json::object();
    for (const auto& [name, v] : c.quantities) q[name] = decimal(v);
    j["quantities"] = q;
    j["verdict"] = to_string(c.verdict);
    if (!c.witness.empty()) j["witness"] = c.witness;
    return j;
}

struct ReportMeta {
    std::string command;
    std::string digest;
    long degree_cap = 40;
    long fit_extra = 3;
    long window = 5;
    long trials = 50;
    unsigned long long seed = 0;
    long cache_hits = -1;   // -1: cache disabled
    long cache_misses = -1;
    double elapsed_ms = 0;  // excluded from the digest-covered region
};

inline json make_report(const ReportMeta& meta, json results) {
    json j;
    j["command"] = meta.command;
    j["instance_digest"] = meta.digest;
    j["results"] = std::move(results);
    json prov;
    prov["format_version"] = 1;
    prov["degree_cap"] = meta.degree_cap;
    prov["fit_extra"] = meta.fit_extra;
    prov["window"] = meta.window;
    prov["trials"] = meta.trials;
    prov["seed"] = std::to_string(meta.seed);
    j["provenance"] = prov;
    if (meta.cache_hits >= 0) {
        json cache;
        cache["hits"] = meta.cache_hits;
        cache["misses"] = meta.cache_misses;
        j["cache"] = cache;
    }
    json timings;
    timings["elapsed_ms"] = static_cast<long>(meta.elapsed_ms);
    j["timings"] = timings;
    return j;
}

} // namespace hdeg

#endif
