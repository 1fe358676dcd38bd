#ifndef HDEG_SUBMODULE_OPS_HPP
#define HDEG_SUBMODULE_OPS_HPP

#include <sstream>

#include "hdeg/groebner.hpp"

namespace hdeg {

inline SubmodulePresentation zero_submodule(const GradedFreeModule& amb) {
    return SubmodulePresentation(amb, {});
}

/// Drops zero generators and exact duplicates; keeps listed order otherwise.
inline SubmodulePresentation prune_generators(const SubmodulePresentation& N) {
    SubmodulePresentation out(N.ambient, {});
    for (const auto& g : N.generators) {
        if (g.is_zero()) continue;
        bool dup = false;
        for (const auto& h : out.generators)
            if (h == g) { dup = true; break; }
        if (!dup) out.generators.push_back(g);
    }
    return out;
}

/// Generators reduced to a minimal generating set using the basis returned by
/// a Groebner computation (each generator redundant if expressible in the others).
inline SubmodulePresentation interreduce_generators(const SubmodulePresentation& N,
                                                    const RingSpec& ring, GBOptions opt = {}) {
    SubmodulePresentation cur = prune_generators(N);
    bool changed = true;
    while (changed && cur.generators.size() > 1) {
        changed = false;
        for (std::size_t i = 0; i < cur.generators.size(); ++i) {
            SubmodulePresentation rest(cur.ambient, {});
            for (std::size_t j = 0; j < cur.generators.size(); ++j)
                if (j != i) rest.generators.push_back(cur.generators[j]);
            GroebnerBasis g(ring, rest, opt);
            if (g.contains(cur.generators[i])) {
                cur = std::move(rest);
                changed = true;
                break;
            }
        }
    }
    return cur;
}

inline bool submodule_contains(const SubmodulePresentation& big,
                               const SubmodulePresentation& small, const RingSpec& ring,
                               GBOptions opt = {}) {
    GroebnerBasis g(ring, big, opt);
    for (const auto& v : small.generators)
        if (!g.contains(v)) return false;
    return true;
}

inline bool submodule_equal(const SubmodulePresentation& a, const SubmodulePresentation& b,
                            const RingSpec& ring, GBOptions opt = {}) {
    return submodule_contains(a, b, ring, opt) && submodule_contains(b, a, ring, opt);
}

/// Kernel of a homogeneous map between graded free modules.
inline SubmodulePresentation kernel(const FreeMap& f, const RingSpec& ring, GBOptions opt = {}) {
    SubmodulePresentation cols(f.target, f.columns);
    SubmodulePresentation syz = syzygy_module(cols, ring, opt);
    syz.ambient = f.source; // syzygy coordinates are source coordinates
    return prune_generators(syz);
}

/// Preimage {x in source : f(x) in R}, R a submodule of the target.
inline SubmodulePresentation kernel_mod(const FreeMap& f, const SubmodulePresentation& R,
                                        const RingSpec& ring, GBOptions opt = {}) {
    SubmodulePresentation combined(f.target, f.columns);
    for (const auto& g : R.generators) combined.generators.push_back(g);
    SubmodulePresentation syz = syzygy_module(combined, ring, opt);
    // project syzygies onto the column block
    SubmodulePresentation out(f.source, {});
    for (const auto& s : syz.generators) {
        ModuleElement x(f.source.rank(), ring.nvars());
        for (std::size_t j = 0; j < f.source.rank(); ++j) x.components[j] = s.components[j];
        if (!x.is_zero()) out.generators.push_back(std::move(x));
    }
    return prune_generators(out);
}

/// {m in F : a*m in N}, for a single ring element a and N a submodule of F.
inline SubmodulePresentation colon_by_element(const SubmodulePresentation& N,
                                              const Polynomial& a, const RingSpec& ring,
                                              GBOptions opt = {}) {
    FreeMap mul;
    mul.source = N.ambient;
    mul.target = N.ambient;
    // grading: source slot degrees shifted by deg a keeps the map homogeneous
    auto deg = a.homogeneous_degree(ring);
    if (!deg && !a.is_zero()) throw input_error("colon: inhomogeneous element");
    if (a.is_zero()) {
        // (N : 0) is everything
        SubmodulePresentation all(N.ambient, {});
        for (std::size_t s = 0; s < N.ambient.rank(); ++s)
            all.generators.push_back(basis_element(s, N.ambient.rank(), ring));
        return all;
    }
    for (auto& d : mul.source.generator_degrees) d += *deg;
    for (std::size_t s = 0; s < N.ambient.rank(); ++s) {
        ModuleElement col(N.ambient.rank(), ring.nvars());
        col.components[s] = a;
        mul.columns.push_back(std::move(col));
    }
    SubmodulePresentation pre = kernel_mod(mul, N, ring, opt);
    pre.ambient = N.ambient; // undo the degree shift: coordinates live in F itself
    return pre;
}

/// Intersection of two submodules of the same free module.
inline SubmodulePresentation intersect(const SubmodulePresentation& A,
                                       const SubmodulePresentation& B, const RingSpec& ring,
                                       GBOptions opt = {}) {
    if (!(A.ambient == B.ambient)) throw input_error("intersect: ambient mismatch");
    std::size_t r = A.ambient.rank();
    // kernel of the diagonal F -> F/A (+) F/B
    std::vector<long> degs = A.ambient.generator_degrees;
    for (long d : A.ambient.generator_degrees) degs.push_back(d);
    GradedFreeModule doubled(degs);
    FreeMap diag;
    diag.source = A.ambient;
    diag.target = doubled;
    for (std::size_t s = 0; s < r; ++s) {
        ModuleElement col(2 * r, ring.nvars());
        col.components[s] = Polynomial::constant(1, ring);
        col.components[r + s] = Polynomial::constant(1, ring);
        diag.columns.push_back(std::move(col));
    }
    SubmodulePresentation rel(doubled, {});
    for (const auto& g : A.generators) {
        ModuleElement v(2 * r, ring.nvars());
        for (std::size_t s = 0; s < r; ++s) v.components[s] = g.components[s];
        rel.generators.push_back(std::move(v));
    }
    for (const auto& g : B.generators) {
        ModuleElement v(2 * r, ring.nvars());
        for (std::size_t s = 0; s < r; ++s) v.components[r + s] = g.components[s];
        rel.generators.push_back(std::move(v));
    }
    return kernel_mod(diag, rel, ring, opt);
}

/// Colon submodule (N :_M J) for M = F/R presented inside F: elements m of F
/// with J*m contained in N + R, returned as generators in F (containing N + R).
inline SubmodulePresentation colon(const SubmodulePresentation& N,
                                   const SubmodulePresentation& R,
                                   const std::vector<Polynomial>& J, const RingSpec& ring,
                                   GBOptions opt = {}) {
    if (J.empty()) throw input_error("colon: empty element list");
    SubmodulePresentation NR = prune_generators(N);
    for (const auto& g : R.generators) NR.generators.push_back(g);
    NR = prune_generators(NR);
    std::optional<SubmodulePresentation> acc;
    for (const auto& a : J) {
        SubmodulePresentation c = colon_by_element(NR, a, ring, opt);
        acc = acc ? intersect(*acc, c, ring, opt) : std::move(c);
    }
    return interreduce_generators(*acc, ring, opt);
}

/// Ideal (N :_S v) = {f in S : f*v in N}, for v an element of N's ambient module.
inline std::vector<Polynomial> colon_ideal(const SubmodulePresentation& N,
                                           const ModuleElement& v, const RingSpec& ring,
                                           GBOptions opt = {}) {
    FreeMap f;
    auto d = v.homogeneous_degree(N.ambient, ring);
    f.source = GradedFreeModule(std::vector<long>{d ? *d : 0});
    f.target = N.ambient;
    f.columns.push_back(v);
    SubmodulePresentation pre = kernel_mod(f, N, ring, opt);
    std::vector<Polynomial> out;
    for (const auto& g : pre.generators) out.push_back(g.components[0]);
    return out;
}

// ---------------------------------------------------------------------------
// standard monomials and lengths
// ---------------------------------------------------------------------------

namespace detail {

inline std::string monomial_list_key(const std::vector<Monomial>& gens) {
    std::vector<std::string> keys;
    for (const auto& m : gens) {
        std::string k;
        for (int32_t x : m.e) k += std::to_string(x) + ",";
        keys.push_back(std::move(k));
    }
    std::sort(keys.begin(), keys.end());
    std::string out;
    for (auto& k : keys) out += k + ";";
    return out;
}

inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            if (gens[j].divides(gens[i])) redundant = (gens[j] != gens[i]) || (j < i);
        }
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

/// Number of monomials outside the monomial ideal <gens>; caller guarantees
/// finiteness. Classic splitting recursion N(I) = N(I + (x)) + N(I : x).
inline ZZ count_standard(std::vector<Monomial> gens,
                         std::map<std::string, ZZ>& memo) {
    gens = minimalize_monomials(std::move(gens));
    for (const auto& g : gens)
        if (g.is_one()) return 0;
    std::string key = monomial_list_key(gens);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    // pick a variable occurring in a non-pure-power generator
    int var = -1;
    for (const auto& g : gens) {
        int nz = 0, last = -1;
        for (std::size_t i = 0; i < g.e.size(); ++i)
            if (g.e[i] > 0) { ++nz; last = static_cast<int>(i); }
        if (nz > 1) { var = last; break; }
    }
    ZZ result;
    if (var < 0) {
        // all pure powers; finite requires every variable present
        std::size_t n = gens.empty() ? 0 : gens[0].e.size();
        std::vector<long> bound(n, -1);
        for (const auto& g : gens)
            for (std::size_t i = 0; i < n; ++i)
                if (g.e[i] > 0 && (bound[i] < 0 || g.e[i] < bound[i])) bound[i] = g.e[i];
        result = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (bound[i] < 0) throw input_error("count_standard: infinite quotient");
            result *= bound[i];
        }
    } else {
        std::vector<Monomial> at_zero; // I + (x_var), restricted to x_var-degree 0
        Monomial xv(gens[0].e.size());
        xv.e[var] = 1;
        at_zero.push_back(xv);
        std::vector<Monomial> shifted; // I : x_var
        for (const auto& g : gens) {
            if (g.e[var] == 0) at_zero.push_back(g);
            Monomial h = g;
            if (h.e[var] > 0) h.e[var] -= 1;
            shifted.push_back(std::move(h));
        }
        result = count_standard(std::move(at_zero), memo) +
                 count_standard(std::move(shifted), memo);
    }
    memo.emplace(std::move(key), result);
    return result;
}

} // namespace detail

/// True iff the initial module of G has, in every slot, a pure power of every
/// variable (the finiteness criterion for the standard-monomial count).
inline bool finite_over_leads(const GroebnerBasis& G) {
    std::size_t n = G.ring().nvars();
    std::size_t r = G.ambient().rank();
    if (n == 0) return true;
    std::vector<std::vector<bool>> has(r, std::vector<bool>(n, false));
    for (const auto& [m, slot] : G.leads()) {
        int nz = 0, which = -1;
        for (std::size_t i = 0; i < n; ++i)
            if (m.e[i] > 0) { ++nz; which = static_cast<int>(i); }
        if (nz == 1) has[slot][which] = true;
        if (nz == 0)
            for (std::size_t i = 0; i < n; ++i) has[slot][i] = true; // slot collapses
    }
    for (std::size_t s = 0; s < r; ++s)
        for (std::size_t i = 0; i < n; ++i)
            if (!has[s][i]) return false;
    return true;
}

/// Exact count of standard monomials (the length of the quotient) or nullopt
/// when the quotient is not finite-dimensional.
inline std::optional<ZZ> standard_monomial_count(const GroebnerBasis& G) {
    if (!finite_over_leads(G)) return std::nullopt;
    std::size_t r = G.ambient().rank();
    std::vector<std::vector<Monomial>> per_slot(r);
    for (const auto& [m, slot] : G.leads()) per_slot[slot].push_back(m);
    ZZ total = 0;
    std::map<std::string, ZZ> memo;
    for (std::size_t s = 0; s < r; ++s)
        total += detail::count_standard(per_slot[s], memo);
    return total;
}

/// Number of standard monomials of a fixed internal degree (monomial degree
/// plus slot degree); used for graded dimensions of presentations.
inline ZZ standard_monomial_count_in_degree(const GroebnerBasis& G, long degree) {
    const RingSpec& ring = G.ring();
    std::size_t n = ring.nvars();
    auto leads = G.leads();
    ZZ total = 0;
    for (std::size_t s = 0; s < G.ambient().rank(); ++s) {
        long target = degree - G.ambient().generator_degrees[s];
        if (target < 0) continue;
        std::vector<Monomial> slot_leads;
        for (const auto& [m, slot] : leads)
            if (slot == static_cast<int32_t>(s)) slot_leads.push_back(m);
        // enumerate exponent vectors of weighted degree `target`
        Monomial m(n);
        std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
            if (i == n) {
                if (left != 0) return;
                for (const auto& l : slot_leads)
                    if (l.divides(m)) return;
                total += 1;
                return;
            }
            long w = ring.variable_degrees[i];
            if (i + 1 == n) {
                if (left % w == 0) {
                    m.e[i] = static_cast<int32_t>(left / w);
                    rec(i + 1, 0);
                    m.e[i] = 0;
                }
                return;
            }
            for (long k = 0; k * w <= left; ++k) {
                m.e[i] = static_cast<int32_t>(k);
                rec(i + 1, left - k * w);
            }
            m.e[i] = 0;
        };
        rec(0, target);
    }
    return total;
}

/// True iff F/N is the zero module.
inline bool is_zero_module(const ModulePresentation& M, const RingSpec& ring,
                           GBOptions opt = {}) {
    if (M.ambient.rank() == 0) return true;
    GroebnerBasis g(ring, M.relations, opt);
    for (std::size_t s = 0; s < M.ambient.rank(); ++s)
        if (!g.contains(basis_element(s, M.ambient.rank(), ring))) return false;
    return true;
}

} // namespace hdeg

#endif
