#ifndef HDEG_HOMDEG_HPP
#define HDEG_HOMDEG_HPP

#include "hdeg/hilbert.hpp"

namespace hdeg {

/// Node of the homological degree recursion tree. Children are the lower
/// deficiency modules M_0, ..., M_{s-1} of this node's module.
struct HdegNode {
    long j = -1;                  // deficiency index within the parent (-1 for the root)
    std::optional<long> dim;      // nullopt encodes the zero module
    std::optional<ZZ> length;     // set when the module has finite length
    ZZ e0 = 0;                    // multiplicity (= length in dimension <= 0)
    ZZ hdeg = 0;
    std::vector<HdegNode> children;
};

inline ZZ module_length(const ModulePresentation& M, const RingSpec& ring, GBOptions opt = {}) {
    if (M.ambient.rank() == 0) return 0;
    GroebnerBasis g(ring, M.relations, opt);
    auto n = standard_monomial_count(g);
    if (!n) throw input_error("module_length: module does not have finite length");
    return *n;
}

/// hdeg_Q(M) = len(M) in dimension <= 0, and otherwise
/// e0_Q(M) + sum_{j=0}^{s-1} binom(s-1, j) * hdeg_Q(M_j), s = dim M.
inline HdegNode hdeg_tree(const ModulePresentation& M, const std::vector<Polynomial>& Q,
                          const RingSpec& ring, GBOptions opt = {}, FitOptions fit = {}) {
    HdegNode node;
    node.dim = krull_dim(M, ring, opt);
    if (!node.dim || *node.dim <= 0) {
        node.length = module_length(M, ring, opt);
        node.e0 = *node.length;
        node.hdeg = *node.length;
        return node;
    }
    long s = *node.dim;
    node.e0 = hilbert_coefficients_with_dim(M, Q, s, ring, opt, fit).e.at(0);
    node.hdeg = node.e0;

    FreeResolution res = free_resolution(M, ring, opt);
    long n = static_cast<long>(ring.nvars());
    for (long j = 0; j < s; ++j) {
        HdegNode child;
        if (n - j > static_cast<long>(res.length())) {
            child.j = j; // vanishing Ext: zero module
            child.length = ZZ(0);
        } else {
            ModulePresentation ext =
                ext_module_from_resolution(res, static_cast<std::size_t>(n - j), ring, opt);
            child = hdeg_tree(ext, Q, ring, opt, fit);
            child.j = j;
            if (child.dim && *child.dim > j)
                throw input_error("hdeg: deficiency module dimension exceeds its index");
        }
        node.hdeg += binomial(s - 1, j) * child.hdeg;
        node.children.push_back(std::move(child));
    }
    return node;
}

struct HdegReport {
    HdegNode root;
    std::vector<ZZ> torsions;   // torsions[i-1] = T^i for 1 <= i <= dim
    std::optional<ZZ> sv;       // Stueckrad-Vogel invariant; empty if not generalized CM
};

/// T^i(M) = sum_{j=1}^{s-i} binom(s-i-1, j-1) * hdeg_Q(M_j), 1 <= i <= s.
inline ZZ torsion_from_tree(const HdegNode& root, long i) {
    if (!root.dim || *root.dim <= 0) return 0;
    long s = *root.dim;
    if (i < 1 || i > s) throw input_error("torsion: index out of range");
    ZZ t = 0;
    for (long j = 1; j <= s - i; ++j)
        t += binomial(s - i - 1, j - 1) * root.children.at(static_cast<std::size_t>(j)).hdeg;
    return t;
}

inline HdegReport hdeg_report(const ModulePresentation& M, const std::vector<Polynomial>& Q,
                              const RingSpec& ring, GBOptions opt = {}, FitOptions fit = {}) {
    HdegReport rep;
    rep.root = hdeg_tree(M, Q, ring, opt, fit);
    if (rep.root.dim && *rep.root.dim >= 1) {
        long s = *rep.root.dim;
        for (long i = 1; i <= s - 1; ++i) rep.torsions.push_back(torsion_from_tree(rep.root, i));
        // Stueckrad-Vogel invariant: defined when all lower deficiencies have
        // finite length, I(M) = sum binom(s-1, j) * len(M_j)
        bool gcm = true;
        ZZ sv = 0;
        for (const auto& c : rep.root.children) {
            if (!c.length) { gcm = false; break; }
            sv += binomial(s - 1, c.j) * *c.length;
        }
        if (gcm) rep.sv = sv;
    } else {
        rep.sv = ZZ(0); // finite length module is trivially generalized CM
    }
    return rep;
}

inline ZZ homological_degree(const ModulePresentation& M, const std::vector<Polynomial>& Q,
                             const RingSpec& ring, GBOptions opt = {}, FitOptions fit = {}) {
    return hdeg_tree(M, Q, ring, opt, fit).hdeg;
}

inline ZZ homological_torsion(const ModulePresentation& M, const std::vector<Polynomial>& Q,
                              long i, const RingSpec& ring, GBOptions opt = {},
                              FitOptions fit = {}) {
    return torsion_from_tree(hdeg_tree(M, Q, ring, opt, fit), i);
}

} // namespace hdeg

#endif
