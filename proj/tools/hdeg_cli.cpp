// Command-line front end: parses an instance file, dispatches one command,
// prints a structured report. Exit codes: 0 holds/success, 1 verdict fails,
// 2 hypotheses not met, 3 input error, 4 resource cap exceeded.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hdeg/instance.hpp"
#include "hdeg/report.hpp"
#include "hdeg/sequences.hpp"

namespace {

using namespace hdeg;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open input file '" + path + "'");
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void print_text(const json& report, std::ostream& os, int indent = 0) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, value] : report.items()) {
        if (value.is_object()) {
            os << pad << key << ":\n";
            print_text(value, os, indent + 2);
        } else if (value.is_array()) {
            bool scalars = true;
            for (const auto& v : value)
                if (v.is_object() || v.is_array()) scalars = false;
            if (scalars) {
                os << pad << key << ": [";
                for (std::size_t i = 0; i < value.size(); ++i) {
                    if (i) os << ", ";
                    if (value[i].is_string()) os << value[i].get<std::string>();
                    else os << value[i].dump();
                }
                os << "]\n";
            } else {
                os << pad << key << ":\n";
                for (const auto& v : value) print_text(v, os, indent + 2);
            }
        } else if (value.is_string()) {
            os << pad << key << ": " << value.get<std::string>() << "\n";
        } else {
            os << pad << key << ": " << value.dump() << "\n";
        }
    }
}

int dispatch(const std::string& command, const std::string& theorem, long torsion_i,
             const ProblemInstance& inst, CheckOptions& opt, ReportMeta& meta, json& results) {
    const RingSpec& ring = inst.ring;
    if (!inst.has_module) throw input_error("instance declares no module");

    if (command == "coeffs") {
        if (!inst.has_Q) throw input_error("command requires a paramideal");
        auto hs = hilbert_coefficients(inst.module, inst.Q, ring, opt.gb, opt.fit);
        results = to_json(hs);
        return 0;
    }
    if (command == "hdeg") {
        if (!inst.has_Q) throw input_error("command requires a paramideal");
        auto pc = check_parameter_ideal(inst.Q, inst.module, ring, opt.gb);
        if (!pc.ok) throw input_error("not a parameter ideal: " + pc.reason);
        auto rep = hdeg_report(inst.module, inst.Q, ring, opt.gb, opt.fit);
        results = to_json(rep);
        return 0;
    }
    if (command == "torsion") {
        if (!inst.has_Q) throw input_error("command requires a paramideal");
        auto pc = check_parameter_ideal(inst.Q, inst.module, ring, opt.gb);
        if (!pc.ok) throw input_error("not a parameter ideal: " + pc.reason);
        auto tree = hdeg_tree(inst.module, inst.Q, ring, opt.gb, opt.fit);
        results["i"] = torsion_i;
        results["torsion"] = decimal(torsion_from_tree(tree, torsion_i));
        return 0;
    }
    if (command == "dseq") {
        if (!inst.has_Q) throw input_error("command requires a paramideal");
        auto verdict = is_d_sequence(inst.Q, inst.module, ring, opt.gb);
        results["holds"] = verdict.holds;
        if (verdict.first_violation) {
            results["first_violation_i"] = verdict.first_violation->first;
            results["first_violation_j"] = verdict.first_violation->second;
        }
        if (verdict.holds) return 0;
        DSequenceSearchResult found =
            find_d_sequence_generators(inst.Q, inst.module, ring, opt.gb, opt.search);
        results["search_found"] = found.found;
        results["search_trials"] = found.trials_used;
        if (found.found) {
            json seq = json::array();
            for (const auto& f : found.sequence) seq.push_back(to_string(f, ring));
            results["search_sequence"] = seq;
        }
        return found.found ? 0 : 1;
    }
    if (command == "unmixed") {
        bool u = is_unmixed(inst.module, ring, opt.gb);
        results["unmixed"] = u;
        auto d = krull_dim(inst.module, ring, opt.gb);
        if (d && *d >= 1) {
            SubmodulePresentation U = unmixed_component(inst.module, ring, opt.gb);
            SubmodulePresentation rels = inst.module.relations;
            json gens = json::array();
            GroebnerBasis rg(ring, rels, opt.gb);
            for (const auto& g : U.generators) {
                ModuleElement nf = rg.normal_form(g);
                if (nf.is_zero()) continue; // generator already a relation
                json comp = json::array();
                for (const auto& p : nf.components) comp.push_back(to_string(p, ring));
                gens.push_back(comp);
            }
            results["unmixed_component_generators"] = gens;
        }
        return u ? 0 : 1;
    }
    if (command == "check") {
        if (!inst.has_Q) throw input_error("command requires a paramideal");
        TheoremCheck c;
        if (theorem == "prop31") c = check_prop31(inst.module, inst.Q, ring, opt);
        else if (theorem == "thm33") c = check_thm33(inst.module, inst.Q, ring, opt);
        else if (theorem == "thm41") c = check_thm41(inst.module, inst.Q, ring, opt);
        else if (theorem == "thm42") c = check_thm42_conditions(inst.module, inst.Q, ring, opt);
        else throw input_error("unknown theorem '" + theorem +
                               "' (expected prop31, thm33, thm41, thm42)");
        results = to_json(c);
        switch (c.verdict) {
        case Verdict::holds: return 0;
        case Verdict::fails: return 1;
        case Verdict::hypotheses_not_met: return 2;
        }
    }
    throw input_error("unknown command '" + command + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hilbert coefficient / homological degree calculator"};
    app.require_subcommand(1);

    std::string input_path, cache_dir, format = "text", theorem = "thm33";
    long torsion_i = 2;
    hdeg::CheckOptions opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("input", input_path, "instance file")->required();
        cmd->add_option("--degree-cap", opt.gb.degree_cap, "Groebner degree cap");
        cmd->add_option("--fit-extra", opt.fit.fit_extra, "extra fit verification points");
        cmd->add_option("--window", opt.superficial.window, "superficiality check window");
        cmd->add_option("--trials", opt.search.trials, "search/sampling trials");
        cmd->add_option("--seed", opt.search.seed, "random seed");
        cmd->add_option("--cache", cache_dir, "cache directory");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    add_common(app.add_subcommand("coeffs", "Hilbert coefficients e^0..e^d"));
    add_common(app.add_subcommand("hdeg", "homological degree report"));
    auto* torsion_cmd = app.add_subcommand("torsion", "homological torsion T^i");
    add_common(torsion_cmd);
    torsion_cmd->add_option("--i", torsion_i, "torsion index");
    add_common(app.add_subcommand("dseq", "d-sequence verification / search"));
    add_common(app.add_subcommand("unmixed", "unmixedness and unmixed component"));
    auto* check_cmd = app.add_subcommand("check", "theorem checker");
    add_common(check_cmd);
    check_cmd->add_option("--theorem", theorem, "prop31 | thm33 | thm41 | thm42");

    CLI11_PARSE(app, argc, argv);
    std::string command = app.get_subcommands().front()->get_name();

    std::optional<hdeg::DiskCache> cache;
    if (!cache_dir.empty()) {
        cache.emplace(cache_dir);
        hdeg::install_cache(&*cache);
    }

    hdeg::ReportMeta meta;
    meta.command = command;
    meta.degree_cap = opt.gb.degree_cap;
    meta.fit_extra = opt.fit.fit_extra;
    meta.window = opt.superficial.window;
    meta.trials = opt.search.trials;
    meta.seed = opt.search.seed;

    int code = 0;
    hdeg::json results;
    auto t0 = std::chrono::steady_clock::now();
    try {
        std::string text = read_file(input_path);
        meta.digest = hdeg::instance_digest(text);
        hdeg::ProblemInstance inst = hdeg::parse_instance(text, opt.gb);
        code = dispatch(command, theorem, torsion_i, inst, opt, meta, results);
    } catch (const hdeg::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const hdeg::cap_exceeded& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 4;
    }
    meta.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (cache) {
        meta.cache_hits = cache->hits();
        meta.cache_misses = cache->misses();
        hdeg::install_cache(nullptr);
    }

    hdeg::json report = hdeg::make_report(meta, std::move(results));
    if (format == "json") std::cout << report.dump(2) << "\n";
    else print_text(report, std::cout);
    return code;
}
