#ifndef HDEG_RESOLUTION_HPP
#define HDEG_RESOLUTION_HPP

#include <functional>

#include "hdeg/submodule_ops.hpp"

namespace hdeg {

/// Free resolution F0 <- F1 <- ... <- FL (graded, minimal after pruning).
struct FreeResolution {
    GradedFreeModule f0;
    std::vector<FreeMap> differentials; // differentials[k] : F_{k+1} -> F_k

    std::size_t length() const { return differentials.size(); }
    const GradedFreeModule& module(std::size_t i) const {
        return i == 0 ? f0 : differentials[i - 1].source;
    }
};

namespace detail {

using PolyMatrix = std::vector<std::vector<Polynomial>>; // [row][col]

inline PolyMatrix to_matrix(const FreeMap& f, const RingSpec& ring) {
    PolyMatrix m(f.nrows(), std::vector<Polynomial>(f.ncols(), Polynomial(ring.nvars())));
    for (std::size_t j = 0; j < f.ncols(); ++j)
        for (std::size_t i = 0; i < f.nrows(); ++i) m[i][j] = f.columns[j].components[i];
    return m;
}

inline FreeMap from_matrix(const PolyMatrix& m, const GradedFreeModule& src,
                           const GradedFreeModule& tgt, const RingSpec& ring) {
    FreeMap f;
    f.source = src;
    f.target = tgt;
    for (std::size_t j = 0; j < src.rank(); ++j) {
        ModuleElement col(tgt.rank(), ring.nvars());
        for (std::size_t i = 0; i < tgt.rank(); ++i) col.components[i] = m[i][j];
        f.columns.push_back(std::move(col));
    }
    return f;
}

inline std::optional<QQ> constant_value(const Polynomial& p) {
    if (p.is_zero() || !p.is_constant()) return std::nullopt;
    return p.terms().begin()->second;
}

} // namespace detail

/// Cancels a split pair across differentials[i] (a nonzero constant entry),
/// shrinking F_{i+1} and F_i by one slot each. Returns false if no unit found.
inline bool prune_one_unit(FreeResolution& res, const RingSpec& ring) {
    for (std::size_t i = 0; i < res.differentials.size(); ++i) {
        FreeMap& d = res.differentials[i];
        detail::PolyMatrix m = detail::to_matrix(d, ring);
        std::size_t rows = d.nrows(), cols = d.ncols();
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                auto unit = detail::constant_value(m[r][c]);
                if (!unit) continue;

                // clear row r across other columns (source basis change)
                std::vector<Polynomial> lambda(cols, Polynomial(ring.nvars()));
                for (std::size_t j = 0; j < cols; ++j) {
                    if (j == c || m[r][j].is_zero()) continue;
                    lambda[j] = m[r][j] * (QQ(1) / *unit);
                    for (std::size_t k = 0; k < rows; ++k)
                        m[k][j] = m[k][j] - m[k][c] * lambda[j];
                }
                // clear column c across other rows (target basis change)
                std::vector<Polynomial> mu(rows, Polynomial(ring.nvars()));
                for (std::size_t k = 0; k < rows; ++k) {
                    if (k == r || m[k][c].is_zero()) continue;
                    mu[k] = m[k][c] * (QQ(1) / *unit);
                    m[k][c] = Polynomial(ring.nvars());
                }

                // next differential: row' _c += lambda_j * row_j, then drop row c
                if (i + 1 < res.differentials.size()) {
                    FreeMap& up = res.differentials[i + 1];
                    detail::PolyMatrix u = detail::to_matrix(up, ring);
                    for (std::size_t j = 0; j < cols; ++j) {
                        if (j == c || lambda[j].is_zero()) continue;
                        for (std::size_t x = 0; x < up.ncols(); ++x)
                            u[c][x] = u[c][x] + u[j][x] * lambda[j];
                    }
                    detail::PolyMatrix u2;
                    for (std::size_t k = 0; k < cols; ++k)
                        if (k != c) u2.push_back(std::move(u[k]));
                    GradedFreeModule tgt2;
                    for (std::size_t k = 0; k < cols; ++k)
                        if (k != c)
                            tgt2.generator_degrees.push_back(d.source.generator_degrees[k]);
                    res.differentials[i + 1] =
                        detail::from_matrix(u2, up.source, tgt2, ring);
                }
                // previous differential: col'_r += mu_k * col_k, then drop col r
                if (i > 0) {
                    FreeMap& down = res.differentials[i - 1];
                    detail::PolyMatrix w = detail::to_matrix(down, ring);
                    for (std::size_t k = 0; k < rows; ++k) {
                        if (k == r || mu[k].is_zero()) continue;
                        for (std::size_t x = 0; x < down.nrows(); ++x)
                            w[x][r] = w[x][r] + w[x][k] * mu[k];
                    }
                    // the new column r must vanish in a complex; drop it
                    detail::PolyMatrix w2(down.nrows());
                    for (std::size_t x = 0; x < down.nrows(); ++x)
                        for (std::size_t k = 0; k < rows; ++k)
                            if (k != r) w2[x].push_back(std::move(w[x][k]));
                    GradedFreeModule src2;
                    for (std::size_t k = 0; k < rows; ++k)
                        if (k != r)
                            src2.generator_degrees.push_back(d.target.generator_degrees[k]);
                    res.differentials[i - 1] =
                        detail::from_matrix(w2, src2, down.target, ring);
                }

                // shrink d itself
                detail::PolyMatrix m2;
                for (std::size_t k = 0; k < rows; ++k) {
                    if (k == r) continue;
                    std::vector<Polynomial> row;
                    for (std::size_t j = 0; j < cols; ++j)
                        if (j != c) row.push_back(std::move(m[k][j]));
                    m2.push_back(std::move(row));
                }
                GradedFreeModule src2, tgt2;
                for (std::size_t j = 0; j < cols; ++j)
                    if (j != c) src2.generator_degrees.push_back(d.source.generator_degrees[j]);
                for (std::size_t k = 0; k < rows; ++k)
                    if (k != r) tgt2.generator_degrees.push_back(d.target.generator_degrees[k]);
                res.differentials[i] = detail::from_matrix(m2, src2, tgt2, ring);
                if (i == 0) res.f0 = tgt2;
                return true;
            }
        }
    }
    return false;
}

inline void minimize_resolution(FreeResolution& res, const RingSpec& ring) {
    while (prune_one_unit(res, ring)) {}
    // drop trailing zero modules
    while (!res.differentials.empty() && res.differentials.back().ncols() == 0)
        res.differentials.pop_back();
}

/// Minimal graded free resolution by iterated syzygies with unit pruning.
inline FreeResolution free_resolution(const ModulePresentation& M, const RingSpec& ring,
                                      GBOptions opt = {}) {
    FreeResolution res;
    res.f0 = M.ambient;
    SubmodulePresentation current = prune_generators(M.relations);
    std::size_t guard = 0;
    while (!current.generators.empty()) {
        FreeMap d;
        d.target = res.differentials.empty() ? res.f0 : res.differentials.back().source;
        std::vector<long> degs;
        for (const auto& g : current.generators) {
            auto dd = g.homogeneous_degree(d.target, ring);
            degs.push_back(dd ? *dd : 0);
        }
        d.source = GradedFreeModule(std::move(degs));
        d.columns = current.generators;
        res.differentials.push_back(std::move(d));
        minimize_resolution(res, ring);
        if (res.differentials.empty() || res.differentials.back().ncols() == 0) break;
        if (++guard > ring.nvars() + 2)
            throw cap_exceeded("free_resolution: length exceeded variable count bound");
        const FreeMap& last = res.differentials.back();
        SubmodulePresentation cols(last.target, last.columns);
        current = syzygy_module(cols, ring, opt);
        current = prune_generators(current);
    }
    minimize_resolution(res, ring);
    return res;
}

// ---------------------------------------------------------------------------
// Hilbert series data and Krull dimension
// ---------------------------------------------------------------------------

/// Numerator of the Hilbert series over the common denominator prod(1-t^w):
/// N(t) = sum_i (-1)^i sum_slots t^deg, as a sparse Laurent polynomial.
inline std::map<long, ZZ> hilbert_numerator(const FreeResolution& res) {
    std::map<long, ZZ> num;
    auto add = [&](const GradedFreeModule& f, int sign) {
        for (long d : f.generator_degrees) {
            num[d] += sign;
            if (num[d] == 0) num.erase(d);
        }
    };
    add(res.f0, 1);
    for (std::size_t i = 0; i < res.differentials.size(); ++i)
        add(res.differentials[i].source, i % 2 == 0 ? -1 : 1);
    return num;
}

/// Krull dimension from the pole order of the Hilbert series at t=1.
/// nullopt encodes dim of the zero module (minus infinity).
inline std::optional<long> krull_dim_from_numerator(std::map<long, ZZ> num, std::size_t nvars) {
    if (num.empty()) return std::nullopt;
    // divide by (1-t) while the value at t=1 vanishes
    long vanish = 0;
    while (true) {
        ZZ at_one = 0;
        for (const auto& [d, c] : num) at_one += c;
        if (at_one != 0) break;
        // quotient of N by (1-t): q_d with N = (1-t) * q; q_d = sum_{e<=d} N_e
        std::map<long, ZZ> q;
        ZZ run = 0;
        long lo = num.begin()->first, hi = num.rbegin()->first;
        for (long d = lo; d < hi; ++d) {
            auto it = num.find(d);
            if (it != num.end()) run += it->second;
            if (run != 0) q[d] = run;
        }
        num = std::move(q);
        ++vanish;
        if (num.empty()) return std::nullopt; // N was identically zero
    }
    return static_cast<long>(nvars) - vanish;
}

inline std::optional<long> krull_dim(const ModulePresentation& M, const RingSpec& ring,
                                     GBOptions opt = {}) {
    FreeResolution res = free_resolution(M, ring, opt);
    return krull_dim_from_numerator(hilbert_numerator(res), ring.nvars());
}

/// Dimension of the degree-k graded piece of M = F/N.
inline ZZ graded_dimension(const ModulePresentation& M, long k, const RingSpec& ring,
                           GBOptions opt = {}) {
    GroebnerBasis g(ring, M.relations, opt);
    return standard_monomial_count_in_degree(g, k);
}

// ---------------------------------------------------------------------------
// Ext modules against the ring, deficiency modules, unmixedness
// ---------------------------------------------------------------------------

/// Presentation of Ext^i_S(M, S) as cohomology of the dualized resolution.
inline ModulePresentation ext_module_from_resolution(const FreeResolution& res, std::size_t i,
                                                     const RingSpec& ring, GBOptions opt = {}) {
    std::size_t L = res.length();
    if (i > L) return ModulePresentation(GradedFreeModule(0));

    GradedFreeModule fi_dual;
    for (long d : res.module(i).generator_degrees) fi_dual.generator_degrees.push_back(-d);

    // kernel of the outgoing dual map
    SubmodulePresentation K(fi_dual, {});
    if (i < L) {
        FreeMap out = transpose(res.differentials[i], ring); // F_i^v -> F_{i+1}^v
        K = kernel(out, ring, opt);
    } else {
        for (std::size_t s = 0; s < fi_dual.rank(); ++s)
            K.generators.push_back(basis_element(s, fi_dual.rank(), ring));
    }
    if (K.generators.empty()) return ModulePresentation(GradedFreeModule(0));

    // image of the incoming dual map
    SubmodulePresentation img(fi_dual, {});
    if (i >= 1) {
        FreeMap in = transpose(res.differentials[i - 1], ring); // F_{i-1}^v -> F_i^v
        img.generators = in.columns;
        img = prune_generators(img);
    }

    // subquotient presentation: generators K, relations = preimage of <img>
    FreeMap kmap;
    std::vector<long> degs;
    for (const auto& g : K.generators) {
        auto d = g.homogeneous_degree(fi_dual, ring);
        degs.push_back(d ? *d : 0);
    }
    kmap.source = GradedFreeModule(degs);
    kmap.target = fi_dual;
    kmap.columns = K.generators;
    SubmodulePresentation rels = kernel_mod(kmap, img, ring, opt);
    ModulePresentation ext;
    ext.ambient = kmap.source;
    ext.relations = rels;
    ext.relations.ambient = ext.ambient;
    return ext;
}

inline ModulePresentation ext_module(const ModulePresentation& M, std::size_t i,
                                     const RingSpec& ring, GBOptions opt = {}) {
    FreeResolution res = free_resolution(M, ring, opt);
    return ext_module_from_resolution(res, i, ring, opt);
}

/// Deficiency module M_j realized as Ext^{n-j}_S(M, S) (graded local duality;
/// twists dropped). Verifies dim M_j <= j.
struct DeficiencyModule {
    long j = 0;
    ModulePresentation presentation;
    std::optional<long> dim; // nullopt = zero module
};

inline DeficiencyModule deficiency_module_from_resolution(const FreeResolution& res, long j,
                                                          const RingSpec& ring,
                                                          GBOptions opt = {}) {
    long n = static_cast<long>(ring.nvars());
    DeficiencyModule out;
    out.j = j;
    if (n - j < 0 || j < 0) {
        out.presentation = ModulePresentation(GradedFreeModule(0));
        return out;
    }
    out.presentation =
        ext_module_from_resolution(res, static_cast<std::size_t>(n - j), ring, opt);
    out.dim = krull_dim(out.presentation, ring, opt);
    if (out.dim && *out.dim > j)
        throw input_error("deficiency_module: dim " + std::to_string(*out.dim) +
                          " exceeds index " + std::to_string(j));
    return out;
}

inline DeficiencyModule deficiency_module(const ModulePresentation& M, long j,
                                          const RingSpec& ring, GBOptions opt = {}) {
    FreeResolution res = free_resolution(M, ring, opt);
    return deficiency_module_from_resolution(res, j, ring, opt);
}

/// Duality criterion: no associated primes of dimension j < dim M, i.e.
/// dim Ext^{n-j}(M,S) < j for all 0 <= j < dim M.
inline bool is_unmixed(const ModulePresentation& M, const RingSpec& ring, GBOptions opt = {}) {
    FreeResolution res = free_resolution(M, ring, opt);
    auto d = krull_dim_from_numerator(hilbert_numerator(res), ring.nvars());
    if (!d) return true; // zero module, vacuously
    long n = static_cast<long>(ring.nvars());
    for (long j = 0; j < *d; ++j) {
        if (n - j > static_cast<long>(res.length())) continue; // Ext vanishes
        ModulePresentation e =
            ext_module_from_resolution(res, static_cast<std::size_t>(n - j), ring, opt);
        auto dj = krull_dim(e, ring, opt);
        if (dj && *dj >= j) return false;
    }
    return true;
}

/// Annihilator ideal of M = F/N.
inline std::vector<Polynomial> annihilator(const ModulePresentation& M, const RingSpec& ring,
                                           GBOptions opt = {}) {
    std::size_t r = M.ambient.rank();
    if (r == 0) return {Polynomial::constant(1, ring)};
    std::optional<SubmodulePresentation> acc; // rank-1 ideals as submodules of S
    GradedFreeModule rank1(1);
    for (std::size_t s = 0; s < r; ++s) {
        auto gens = colon_ideal(M.relations, basis_element(s, r, ring), ring, opt);
        SubmodulePresentation ideal(rank1, {});
        for (auto& f : gens) {
            ModuleElement v(1, ring.nvars());
            v.components[0] = std::move(f);
            ideal.generators.push_back(std::move(v));
        }
        acc = acc ? intersect(*acc, ideal, ring, opt) : std::move(ideal);
    }
    std::vector<Polynomial> out;
    for (const auto& g : interreduce_generators(*acc, ring, opt).generators)
        out.push_back(g.components[0]);
    return out;
}

/// Saturation (N :_M J^infinity) as a submodule of F (contains the relations).
inline SubmodulePresentation saturate(const SubmodulePresentation& N,
                                      const SubmodulePresentation& relations,
                                      const std::vector<Polynomial>& J, const RingSpec& ring,
                                      GBOptions opt = {}) {
    SubmodulePresentation cur = colon(N, relations, J, ring, opt);
    while (true) {
        SubmodulePresentation next = colon(cur, relations, J, ring, opt);
        if (submodule_equal(cur, next, ring, opt)) return cur;
        cur = std::move(next);
    }
}

/// H^0_m(M) = (0 :_M m^infinity), generators in the ambient free module.
inline SubmodulePresentation torsion_submodule(const ModulePresentation& M,
                                               const RingSpec& ring, GBOptions opt = {}) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < ring.nvars(); ++i)
        vars.push_back(Polynomial::variable(static_cast<int>(i), ring));
    return saturate(zero_submodule(M.ambient), M.relations, vars, ring, opt);
}

/// Unmixed component U_M(0): elements supported in dimension < dim M.
/// Computed as (0 :_M b^infinity) for b the product of the annihilators of the
/// nonzero lower deficiency modules (each of dimension < dim M).
inline SubmodulePresentation unmixed_component(const ModulePresentation& M, const RingSpec& ring,
                                               GBOptions opt = {}) {
    FreeResolution res = free_resolution(M, ring, opt);
    auto d = krull_dim_from_numerator(hilbert_numerator(res), ring.nvars());
    if (!d || *d < 1) throw input_error("unmixed_component: module must have dim >= 1");
    long n = static_cast<long>(ring.nvars());

    std::vector<Polynomial> b{Polynomial::constant(1, ring)};
    bool any = false;
    for (long j = 0; j < *d; ++j) {
        if (n - j > static_cast<long>(res.length())) continue;
        ModulePresentation e =
            ext_module_from_resolution(res, static_cast<std::size_t>(n - j), ring, opt);
        if (is_zero_module(e, ring, opt)) continue;
        any = true;
        std::vector<Polynomial> a = annihilator(e, ring, opt);
        std::vector<Polynomial> prod;
        for (const auto& f : b)
            for (const auto& g : a) prod.push_back(f * g);
        // trim the product generating set
        SubmodulePresentation ideal(GradedFreeModule(1), {});
        for (auto& f : prod) {
            ModuleElement v(1, ring.nvars());
            v.components[0] = std::move(f);
            ideal.generators.push_back(std::move(v));
        }
        ideal = interreduce_generators(ideal, ring, opt);
        b.clear();
        for (const auto& g : ideal.generators) b.push_back(g.components[0]);
    }
    if (!any) return prune_generators(M.relations); // already unmixed: U = 0 in M
    return saturate(zero_submodule(M.ambient), M.relations, b, ring, opt);
}

/// M / (submodule given by generators in M's ambient free module).
inline ModulePresentation quotient_by_submodule(const ModulePresentation& M,
                                                const SubmodulePresentation& U) {
    ModulePresentation out;
    out.ambient = M.ambient;
    out.relations = SubmodulePresentation(M.ambient, U.generators);
    for (const auto& g : M.relations.generators) out.relations.generators.push_back(g);
    out.relations = prune_generators(out.relations);
    return out;
}

} // namespace hdeg

#endif
