#ifndef HDEG_SEQUENCES_HPP
#define HDEG_SEQUENCES_HPP

#include <algorithm>
#include <random>

#include "hdeg/hilbert.hpp"

namespace hdeg {

struct SequenceVerdict {
    bool holds = false;
    // indices (i, j), 1-based, of the first failing colon identity
    std::optional<std::pair<long, long>> first_violation;
};

namespace detail {

inline SubmodulePresentation scaled_submodule(const std::vector<Polynomial>& elems,
                                              std::size_t count, const ModulePresentation& M,
                                              const RingSpec& ring) {
    SubmodulePresentation N(M.ambient, {});
    std::size_t r = M.ambient.rank();
    for (std::size_t k = 0; k < count; ++k)
        for (std::size_t s = 0; s < r; ++s) {
            ModuleElement v(r, ring.nvars());
            v.components[s] = elems[k];
            N.generators.push_back(std::move(v));
        }
    return N;
}

} // namespace detail

/// d-sequence test on M: ((a_1..a_{i-1})M :_M a_i a_j) = ((a_1..a_{i-1})M :_M a_j)
/// for all 1 <= i <= j <= d.
inline SequenceVerdict is_d_sequence(const std::vector<Polynomial>& a,
                                     const ModulePresentation& M, const RingSpec& ring,
                                     GBOptions opt = {}) {
    SequenceVerdict v;
    long d = static_cast<long>(a.size());
    for (long i = 1; i <= d; ++i) {
        SubmodulePresentation N =
            detail::scaled_submodule(a, static_cast<std::size_t>(i - 1), M, ring);
        for (long j = i; j <= d; ++j) {
            const Polynomial& ai = a[static_cast<std::size_t>(i - 1)];
            const Polynomial& aj = a[static_cast<std::size_t>(j - 1)];
            SubmodulePresentation lhs = colon(N, M.relations, {ai * aj}, ring, opt);
            SubmodulePresentation rhs = colon(N, M.relations, {aj}, ring, opt);
            if (!submodule_equal(lhs, rhs, ring, opt)) {
                v.first_violation = {i, j};
                return v;
            }
        }
    }
    v.holds = true;
    return v;
}

struct SuperficialOptions {
    long window = 5; // number of power indices checked past the postulation index
};

/// Superficial element test: a in Q, a not in m*Q, and
/// (Q^{n+1}M :_M a) = Q^n M + (0 :_M a) on a window past the postulation index.
inline bool is_superficial(const Polynomial& a, const ModulePresentation& M,
                           const std::vector<Polynomial>& Q, const RingSpec& ring,
                           GBOptions opt = {}, FitOptions fit = {},
                           SuperficialOptions sup = {}) {
    // membership preconditions on a
    GradedFreeModule rank1(1);
    auto as_ideal = [&](const std::vector<Polynomial>& gens) {
        SubmodulePresentation I(rank1, {});
        for (const auto& f : gens) {
            if (f.is_zero()) continue;
            ModuleElement v(1, ring.nvars());
            v.components[0] = f;
            I.generators.push_back(std::move(v));
        }
        return I;
    };
    ModuleElement av(1, ring.nvars());
    av.components[0] = a;
    GroebnerBasis qgb(ring, as_ideal(Q), opt);
    if (!qgb.contains(av)) throw input_error("is_superficial: element not in the ideal");
    std::vector<Polynomial> mq;
    for (std::size_t i = 0; i < ring.nvars(); ++i)
        for (const auto& q : Q) mq.push_back(Polynomial::variable(static_cast<int>(i), ring) * q);
    GroebnerBasis mqgb(ring, as_ideal(mq), opt);
    if (mqgb.contains(av)) throw input_error("is_superficial: element lies in m*Q");

    auto check = check_parameter_ideal(Q, M, ring, opt);
    if (!check.ok) throw input_error("is_superficial: " + check.reason);
    long d = *krull_dim(M, ring, opt);
    HilbertSamuelResult hs = hilbert_coefficients_with_dim(M, Q, d, ring, opt, fit);

    HilbertSamuelTable table(M, Q, ring, opt);
    SubmodulePresentation zero_colon =
        colon(zero_submodule(M.ambient), M.relations, {a}, ring, opt);
    long start = std::max<long>(1, hs.postulation_index);
    for (long n = start; n < start + sup.window; ++n) {
        SubmodulePresentation qn1(M.ambient, table.power_generators(n + 1, fit.table_cap));
        SubmodulePresentation lhs = colon(qn1, M.relations, {a}, ring, opt);
        SubmodulePresentation rhs(M.ambient, table.power_generators(n, fit.table_cap));
        for (const auto& g : zero_colon.generators) rhs.generators.push_back(g);
        for (const auto& g : M.relations.generators) rhs.generators.push_back(g);
        if (!submodule_equal(lhs, rhs, ring, opt)) return false;
    }
    return true;
}

struct DSequenceSearchOptions {
    long trials = 50;
    unsigned long long seed = 0;
};

struct DSequenceSearchResult {
    bool found = false;
    std::vector<Polynomial> sequence;   // a d-sequence generating Q, when found
    long trials_used = 0;
};

namespace detail {

/// Determinant over QQ; exact and adequate for the tiny matrices used here.
inline ZZ determinant_qq(const std::vector<std::vector<long>>& mi) {
    std::size_t n = mi.size();
    std::vector<std::vector<QQ>> m(n, std::vector<QQ>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = mi[i][j];
    QQ det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) { std::swap(m[p], m[c]); det = -det; }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            QQ f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    if (boost::multiprecision::denominator(det) != 1) return 0;
    return boost::multiprecision::numerator(det);
}

} // namespace detail

/// Searches for a d-sequence generating the same ideal as Q on M: the given
/// order first, then permutations (d <= 4), then seeded unimodular integer
/// recombinations within blocks of equal degree (entries in [-3, 3]).
inline DSequenceSearchResult find_d_sequence_generators(const std::vector<Polynomial>& Q,
                                                        const ModulePresentation& M,
                                                        const RingSpec& ring, GBOptions opt = {},
                                                        DSequenceSearchOptions search = {}) {
    DSequenceSearchResult out;
    auto attempt = [&](const std::vector<Polynomial>& cand) {
        ++out.trials_used;
        if (is_d_sequence(cand, M, ring, opt).holds) {
            out.found = true;
            out.sequence = cand;
            return true;
        }
        return false;
    };

    if (attempt(Q)) return out;
    std::size_t d = Q.size();
    if (d <= 4) {
        std::vector<std::size_t> idx(d);
        for (std::size_t i = 0; i < d; ++i) idx[i] = i;
        std::vector<std::size_t> perm = idx;
        while (std::next_permutation(perm.begin(), perm.end())) {
            std::vector<Polynomial> cand;
            for (std::size_t i : perm) cand.push_back(Q[i]);
            if (attempt(cand)) return out;
            if (out.trials_used >= search.trials) return out;
        }
    }

    // group generators by degree; mix only within a block to stay homogeneous
    std::map<long, std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < d; ++i) {
        auto deg = Q[i].homogeneous_degree(ring);
        if (!deg) return out; // cannot recombine inhomogeneous input
        blocks[*deg].push_back(i);
    }
    std::mt19937_64 rng(search.seed);
    std::uniform_int_distribution<long> entry(-3, 3);
    while (out.trials_used < search.trials) {
        std::vector<Polynomial> cand(d, Polynomial(ring.nvars()));
        bool ok = true;
        for (const auto& [deg, ids] : blocks) {
            std::size_t b = ids.size();
            std::vector<std::vector<long>> U(b, std::vector<long>(b));
            for (auto& row : U)
                for (auto& x : row) x = entry(rng);
            ZZ det = detail::determinant_qq(U);
            if (det != 1 && det != -1) { ok = false; break; }
            for (std::size_t r = 0; r < b; ++r) {
                Polynomial f(ring.nvars());
                for (std::size_t c = 0; c < b; ++c)
                    f = f + Q[ids[c]] * QQ(U[r][c]);
                if (f.is_zero()) { ok = false; break; }
                cand[ids[r]] = std::move(f);
            }
            if (!ok) break;
        }
        if (!ok) { ++out.trials_used; continue; }
        if (attempt(cand)) return out;
    }
    return out;
}

} // namespace hdeg

#endif
