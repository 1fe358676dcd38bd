#ifndef HDEG_INSTANCE_HPP
#define HDEG_INSTANCE_HPP

#include <map>
#include <string>

#include "hdeg/submodule_ops.hpp"

namespace hdeg {

/// A parsed problem: one ring, one module over it, one candidate parameter ideal.
struct ProblemInstance {
    RingSpec ring;
    std::string ring_name;
    ModulePresentation module;
    std::string module_name;
    std::vector<Polynomial> Q;
    std::map<std::string, std::vector<Polynomial>> ideals;
    bool has_module = false;
    bool has_Q = false;
};

namespace detail {

struct InstanceLexer {
    const std::string& s;
    std::size_t pos = 0;
    long line = 1, col = 1;

    explicit InstanceLexer(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw input_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                          ": " + msg);
    }
    void bump(char c) {
        if (c == '\n') { ++line; col = 1; }
        else ++col;
    }
    void skip_ws() {
        while (pos < s.size()) {
            char c = s[pos];
            if (c == '#') { // comment to end of line
                while (pos < s.size() && s[pos] != '\n') { bump(s[pos]); ++pos; }
                continue;
            }
            if (!std::isspace(static_cast<unsigned char>(c))) break;
            bump(c);
            ++pos;
        }
    }
    bool eof() { skip_ws(); return pos >= s.size(); }
    char peek() { skip_ws(); return pos < s.size() ? s[pos] : '\0'; }
    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            fail(std::string("expected '") + c + "'");
        bump(s[pos]); ++pos;
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { bump(s[pos]); ++pos; return true; }
        return false;
    }
    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            bump(s[pos]); ++pos;
        }
        if (pos == start) fail("expected identifier");
        return s.substr(start, pos - start);
    }
    long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            bump(s[pos]); ++pos;
        }
        if (pos == start) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }
    /// Text up to (not including) any of the stop characters, for polynomial bodies.
    std::string until(const std::string& stops) {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && stops.find(s[pos]) == std::string::npos) {
            bump(s[pos]); ++pos;
        }
        return s.substr(start, pos - start);
    }
};

} // namespace detail

/// Parses the instance grammar:
///   ring <name> vars v1,v2,...;
///   ideal <name> = poly, poly, ... ;   (or: intersect(i1, i2);)
///   module <name> = quotient(ring, ideal);
///     (or: presentation rows=r cols=c [ poly, ... ];)
///   paramideal Q = poly, ... ;
inline ProblemInstance parse_instance(const std::string& text, GBOptions opt = {}) {
    detail::InstanceLexer lx(text);
    ProblemInstance inst;
    bool have_ring = false;
    if (lx.eof()) lx.fail("empty input");

    auto parse_poly_here = [&](const std::string& stops) {
        if (!have_ring) lx.fail("polynomial before ring declaration");
        long line = lx.line, col = lx.col;
        std::string body = lx.until(stops);
        try {
            return parse_polynomial(body, inst.ring);
        } catch (const input_error& e) {
            throw input_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                              ": " + e.what());
        }
    };
    auto parse_poly_list = [&]() {
        std::vector<Polynomial> out;
        while (true) {
            out.push_back(parse_poly_here(",;"));
            if (lx.accept(',')) continue;
            lx.expect(';');
            break;
        }
        return out;
    };

    while (!lx.eof()) {
        std::string kw = lx.word();
        if (kw == "ring") {
            if (have_ring) lx.fail("multiple ring declarations");
            inst.ring_name = lx.word();
            std::string vars_kw = lx.word();
            if (vars_kw != "vars") lx.fail("expected 'vars'");
            while (true) {
                inst.ring.variable_names.push_back(lx.word());
                if (lx.accept(',')) continue;
                lx.expect(';');
                break;
            }
            inst.ring.variable_degrees.assign(inst.ring.variable_names.size(), 1);
            try {
                inst.ring.validate();
            } catch (const input_error& e) {
                lx.fail(e.what());
            }
            have_ring = true;
        } else if (kw == "ideal") {
            if (!have_ring) lx.fail("ideal before ring declaration");
            std::string name = lx.word();
            if (inst.ideals.count(name)) lx.fail("duplicate ideal '" + name + "'");
            lx.expect('=');
            lx.skip_ws();
            // lookahead for intersect(
            std::size_t save = lx.pos;
            long sl = lx.line, sc = lx.col;
            std::string head;
            if (std::isalpha(static_cast<unsigned char>(lx.peek()))) head = lx.word();
            if (head == "intersect" && lx.accept('(')) {
                std::string i1 = lx.word();
                lx.expect(',');
                std::string i2 = lx.word();
                lx.expect(')');
                lx.expect(';');
                auto a = inst.ideals.find(i1);
                auto b = inst.ideals.find(i2);
                if (a == inst.ideals.end()) lx.fail("unknown ideal '" + i1 + "'");
                if (b == inst.ideals.end()) lx.fail("unknown ideal '" + i2 + "'");
                GradedFreeModule rank1(1);
                auto lift = [&](const std::vector<Polynomial>& gens) {
                    SubmodulePresentation I(rank1, {});
                    for (const auto& f : gens) {
                        if (f.is_zero()) continue;
                        ModuleElement v(1, inst.ring.nvars());
                        v.components[0] = f;
                        I.generators.push_back(std::move(v));
                    }
                    return I;
                };
                SubmodulePresentation meet =
                    intersect(lift(a->second), lift(b->second), inst.ring, opt);
                std::vector<Polynomial> gens;
                for (const auto& g : meet.generators) gens.push_back(g.components[0]);
                inst.ideals.emplace(name, std::move(gens));
            } else {
                lx.pos = save; lx.line = sl; lx.col = sc;
                inst.ideals.emplace(name, parse_poly_list());
            }
        } else if (kw == "module") {
            if (!have_ring) lx.fail("module before ring declaration");
            if (inst.has_module) lx.fail("multiple module declarations");
            inst.module_name = lx.word();
            lx.expect('=');
            std::string form = lx.word();
            if (form == "quotient") {
                lx.expect('(');
                std::string rn = lx.word();
                if (rn != inst.ring_name) lx.fail("unknown ring '" + rn + "'");
                lx.expect(',');
                std::string in = lx.word();
                auto it = inst.ideals.find(in);
                if (it == inst.ideals.end()) lx.fail("unknown ideal '" + in + "'");
                lx.expect(')');
                lx.expect(';');
                inst.module = quotient_ring_module(inst.ring, it->second);
            } else if (form == "presentation") {
                std::string rk = lx.word();
                if (rk != "rows") lx.fail("expected 'rows'");
                lx.expect('=');
                long rows = lx.integer();
                std::string ck = lx.word();
                if (ck != "cols") lx.fail("expected 'cols'");
                lx.expect('=');
                long cols = lx.integer();
                if (rows < 0 || cols < 0) lx.fail("negative dimensions");
                lx.expect('[');
                std::vector<Polynomial> entries;
                for (long k = 0; k < rows * cols; ++k) {
                    entries.push_back(parse_poly_here(",]"));
                    if (k + 1 < rows * cols) lx.expect(',');
                }
                lx.expect(']');
                lx.accept(';');
                GradedFreeModule amb(static_cast<std::size_t>(rows));
                std::vector<ModuleElement> rels;
                for (long c2 = 0; c2 < cols; ++c2) {
                    ModuleElement v(static_cast<std::size_t>(rows), inst.ring.nvars());
                    for (long r = 0; r < rows; ++r)
                        v.components[static_cast<std::size_t>(r)] =
                            entries[static_cast<std::size_t>(r * cols + c2)];
                    rels.push_back(std::move(v));
                }
                inst.module = ModulePresentation(amb, std::move(rels));
            } else {
                lx.fail("expected 'quotient' or 'presentation'");
            }
            inst.has_module = true;
        } else if (kw == "paramideal") {
            if (!have_ring) lx.fail("paramideal before ring declaration");
            if (inst.has_Q) lx.fail("multiple paramideal declarations");
            lx.word(); // the name (conventionally Q); kept for readability only
            lx.expect('=');
            inst.Q = parse_poly_list();
            inst.has_Q = true;
        } else {
            lx.fail("unknown keyword '" + kw + "'");
        }
    }
    if (!have_ring) lx.fail("missing ring declaration");
    return inst;
}

} // namespace hdeg

#endif
