#ifndef HDEG_RING_HPP
#define HDEG_RING_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "hdeg/numeric.hpp"

namespace hdeg {

/// A standard-graded polynomial ring over the rationals with named variables.
struct RingSpec {
    std::vector<std::string> variable_names;
    std::vector<int> variable_degrees; // all >= 1, default 1

    RingSpec() = default;
    explicit RingSpec(std::vector<std::string> names, std::vector<int> degrees = {})
        : variable_names(std::move(names)), variable_degrees(std::move(degrees)) {
        if (variable_degrees.empty()) variable_degrees.assign(variable_names.size(), 1);
        validate();
    }

    std::size_t nvars() const { return variable_names.size(); }

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < variable_names.size(); ++i)
            if (variable_names[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool operator==(const RingSpec& o) const {
        return variable_names == o.variable_names && variable_degrees == o.variable_degrees;
    }

    void validate() const {
        if (variable_degrees.size() != variable_names.size())
            throw input_error("ring: degree list length does not match variable count");
        std::set<std::string> seen;
        for (const auto& v : variable_names) {
            if (v.empty()) throw input_error("ring: empty variable name");
            if (!seen.insert(v).second) throw input_error("ring: duplicate variable '" + v + "'");
        }
        for (int d : variable_degrees)
            if (d < 1) throw input_error("ring: variable degree must be >= 1");
    }
};

/// Exponent vector, one entry per ring variable.
struct Monomial {
    std::vector<int32_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t n) : e(n, 0) {}
    explicit Monomial(std::vector<int32_t> exps) : e(std::move(exps)) {}

    std::size_t nvars() const { return e.size(); }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; });
    }

    long degree(const RingSpec& ring) const {
        long d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += (long)e[i] * ring.variable_degrees[i];
        return d;
    }
    long total_degree() const {
        long d = 0;
        for (int32_t x : e) d += x;
        return d;
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }

    /// Exact quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
    // arbitrary canonical order, used only for storage containers
    bool operator<(const Monomial& o) const { return e < o.e; }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 1469598103934665603ull;
        for (int32_t x : m.e) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

enum class MonomialOrder { degrevlex, lex };

/// Three-way compare: negative if a < b, 0 if equal, positive if a > b.
inline int compare_monomials(MonomialOrder order, const Monomial& a, const Monomial& b,
                             const RingSpec& ring) {
    if (a.nvars() != b.nvars())
        throw input_error("compare_monomials: exponent length mismatch");
    switch (order) {
    case MonomialOrder::lex:
        for (std::size_t i = 0; i < a.nvars(); ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        return 0;
    case MonomialOrder::degrevlex: {
        long da = a.degree(ring), db = b.degree(ring);
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = a.nvars(); i-- > 0;)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        return 0;
    }
    }
    return 0;
}

} // namespace hdeg

#endif
