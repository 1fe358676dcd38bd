#ifndef HDEG_THEOREMS_HPP
#define HDEG_THEOREMS_HPP

#include <set>

#include "hdeg/homdeg.hpp"
#include "hdeg/sequences.hpp"

namespace hdeg {

enum class Verdict { holds, fails, hypotheses_not_met };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::hypotheses_not_met: return "hypotheses-not-met";
    }
    return "?";
}

struct TheoremCheck {
    std::string theorem_id;
    std::vector<std::pair<std::string, bool>> hypotheses;
    std::map<std::string, ZZ> quantities; // exact integers; booleans stored as 0/1
    Verdict verdict = Verdict::hypotheses_not_met;
    std::string witness;

    bool hypothesis(const std::string& name, bool value) {
        hypotheses.emplace_back(name, value);
        return value;
    }
};

struct CheckOptions {
    GBOptions gb;
    FitOptions fit;
    SuperficialOptions superficial;
    DSequenceSearchOptions search;
};

namespace detail {

/// (-1)^i e_i as a plain integer (the convention the bounds are stated in).
inline ZZ signed_e(const HilbertSamuelResult& hs, long i) {
    ZZ v = hs.e.at(static_cast<std::size_t>(i));
    return i % 2 == 0 ? v : -v;
}

inline ModulePresentation quotient_by_torsion(const ModulePresentation& M, const RingSpec& ring,
                                              GBOptions opt) {
    SubmodulePresentation h0 = torsion_submodule(M, ring, opt);
    return quotient_by_submodule(M, h0);
}

inline std::optional<ZZ> finite_length(const ModulePresentation& M, const RingSpec& ring,
                                       GBOptions opt) {
    if (M.ambient.rank() == 0) return ZZ(0);
    GroebnerBasis g(ring, M.relations, opt);
    return standard_monomial_count(g);
}

inline bool ideal_contains(const std::vector<Polynomial>& gens, const Polynomial& f,
                           const RingSpec& ring, GBOptions opt) {
    SubmodulePresentation I(GradedFreeModule(1), {});
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        ModuleElement v(1, ring.nvars());
        v.components[0] = g;
        I.generators.push_back(std::move(v));
    }
    GroebnerBasis gb(ring, I, opt);
    ModuleElement fv(1, ring.nvars());
    fv.components[0] = f;
    return gb.contains(fv);
}

} // namespace detail

/// Two-dimensional bound and equivalence check: -len(H^1) <= e2 <= 0 on the
/// depth-positive reduction, with the four equivalent conditions
/// (1) g_s = 0, (2) e2 = 0, (3) a1,a2 is a d-sequence, (4) squares too.
inline TheoremCheck check_prop31(const ModulePresentation& M, const std::vector<Polynomial>& Q,
                                 const RingSpec& ring, CheckOptions opt = {}) {
    TheoremCheck c;
    c.theorem_id = "prop31";
    auto d = krull_dim(M, ring, opt.gb);
    bool dim_ok = c.hypothesis("dim == 2", d && *d == 2);
    auto pc = check_parameter_ideal(Q, M, ring, opt.gb);
    bool q_ok = c.hypothesis("Q parameter ideal", pc.ok);
    if (!dim_ok || !q_ok) {
        c.witness = pc.ok ? "" : pc.reason;
        return c;
    }

    // bound chain on M itself: len(H0) - len(H1) <= e2 <= len(H0)
    HilbertSamuelResult hsM = hilbert_coefficients(M, Q, ring, opt.gb, opt.fit);
    FreeResolution res = free_resolution(M, ring, opt.gb);
    DeficiencyModule m0 = deficiency_module_from_resolution(res, 0, ring, opt.gb);
    DeficiencyModule m1 = deficiency_module_from_resolution(res, 1, ring, opt.gb);
    ZZ l_h0 = module_length(m0.presentation, ring, opt.gb);
    // M_1 may have dimension 1 (H^1 not finitely generated); the lower bound
    // is then vacuous
    std::optional<ZZ> l_h1 = detail::finite_length(m1.presentation, ring, opt.gb);
    ZZ e2M = detail::signed_e(hsM, 2);
    c.quantities["e2"] = e2M;
    c.quantities["len_H0"] = l_h0;
    if (l_h1) c.quantities["len_H1"] = *l_h1;
    bool chain = (!l_h1 || l_h0 - *l_h1 <= e2M) && (e2M <= l_h0);
    c.quantities["bound_chain"] = chain ? 1 : 0;

    // pass to M' = M/H0(M), which has positive depth
    ModulePresentation Mp = l_h0 == 0 ? M : detail::quotient_by_torsion(M, ring, opt.gb);
    HilbertSamuelResult hs = l_h0 == 0 ? hsM : hilbert_coefficients(Mp, Q, ring, opt.gb, opt.fit);
    ZZ e2 = detail::signed_e(hs, 2);
    ZZ gs = sectional_genus(hs);
    c.quantities["e2_reduced"] = e2;
    c.quantities["gs_reduced"] = gs;

    // order the parameters with a superficial element first
    std::vector<Polynomial> a = Q;
    auto superficial_first = [&]() {
        auto test = [&](const std::vector<Polynomial>& cand) {
            try {
                return is_superficial(cand[0], Mp, Q, ring, opt.gb, opt.fit, opt.superficial);
            } catch (const input_error&) {
                return false;
            }
        };
        if (test(a)) return true;
        std::swap(a[0], a[1]);
        if (test(a)) return true;
        std::swap(a[0], a[1]);
        return false;
    };
    bool sup = c.hypothesis("superficial first element", superficial_first());

    // bound on M': -len(H1(M')) <= e2 <= 0, vacuous below when H1 is infinite
    DeficiencyModule m1p = l_h0 == 0 ? m1 : deficiency_module(Mp, 1, ring, opt.gb);
    std::optional<ZZ> h1p = detail::finite_length(m1p.presentation, ring, opt.gb);
    bool bounds = (!h1p || -*h1p <= e2) && (e2 <= 0);
    if (h1p) c.quantities["len_H1_reduced"] = *h1p;
    c.quantities["bounds_hold"] = bounds ? 1 : 0;

    bool cond1 = gs == 0;
    bool cond2 = e2 == 0;
    bool cond3 = is_d_sequence(a, Mp, ring, opt.gb).holds;
    bool cond4 = is_d_sequence({a[0] * a[0], a[1] * a[1]}, Mp, ring, opt.gb).holds;
    c.quantities["cond1_gs_zero"] = cond1 ? 1 : 0;
    c.quantities["cond2_e2_zero"] = cond2 ? 1 : 0;
    c.quantities["cond3_d_sequence"] = cond3 ? 1 : 0;
    c.quantities["cond4_square_d_sequence"] = cond4 ? 1 : 0;

    if (!sup) return c; // hypotheses-not-met: no superficial-first order found
    bool agree = (cond1 == cond2) && (cond2 == cond3) && (cond3 == cond4);
    c.verdict = (chain && bounds && agree) ? Verdict::holds : Verdict::fails;
    if (c.verdict == Verdict::fails)
        c.witness = !bounds ? "reduced bound chain violated" : !chain ? "bound chain violated"
                                                             : "equivalences disagree";
    return c;
}

/// e2 <= T2 always (dim >= 3); the lower bound
/// -sum_{j=2}^{d-1} binom(d-3, j-2) hdeg(M_j) <= e2 only under unmixedness.
inline TheoremCheck check_thm33(const ModulePresentation& M, const std::vector<Polynomial>& Q,
                                const RingSpec& ring, CheckOptions opt = {}) {
    TheoremCheck c;
    c.theorem_id = "thm33";
    auto d = krull_dim(M, ring, opt.gb);
    bool dim_ok = c.hypothesis("dim >= 3", d && *d >= 3);
    auto pc = check_parameter_ideal(Q, M, ring, opt.gb);
    bool q_ok = c.hypothesis("Q parameter ideal", pc.ok);
    if (!dim_ok || !q_ok) {
        c.witness = pc.ok ? "" : pc.reason;
        return c;
    }
    long dd = *d;
    bool unmixed = is_unmixed(M, ring, opt.gb);
    c.hypothesis("M unmixed (for the lower bound)", unmixed);

    HilbertSamuelResult hs = hilbert_coefficients(M, Q, ring, opt.gb, opt.fit);
    HdegReport rep = hdeg_report(M, Q, ring, opt.gb, opt.fit);
    ZZ e2 = detail::signed_e(hs, 2);
    ZZ t2 = torsion_from_tree(rep.root, 2);
    ZZ lower = 0;
    for (long j = 2; j <= dd - 1; ++j)
        lower -= binomial(dd - 3, j - 2) * rep.root.children.at(static_cast<std::size_t>(j)).hdeg;
    c.quantities["e2"] = e2;
    c.quantities["T2"] = t2;
    c.quantities["lower_bound"] = lower;
    c.quantities["upper_holds"] = (e2 <= t2) ? 1 : 0;
    c.quantities["lower_holds"] = (lower <= e2) ? 1 : 0;

    if (!unmixed) {
        // part (1) still asserted; part (2) has no claim, so hypotheses-not-met
        c.verdict = (e2 <= t2) ? Verdict::hypotheses_not_met : Verdict::fails;
        if (lower > e2) c.witness = "lower bound violated on mixed input (no claim)";
        return c;
    }
    c.verdict = (e2 <= t2 && lower <= e2) ? Verdict::holds : Verdict::fails;
    if (c.verdict == Verdict::fails)
        c.witness = e2 > t2 ? "upper bound violated" : "lower bound violated";
    return c;
}

/// Equivalence (1) g_s = hdeg - e0 - T1  <=>  (2) e2 = T2 for unmixed dim >= 3,
/// plus the consequences (i)-(iv) when the equalities hold.
inline TheoremCheck check_thm41(const ModulePresentation& M, const std::vector<Polynomial>& Q,
                                const RingSpec& ring, CheckOptions opt = {}) {
    TheoremCheck c;
    c.theorem_id = "thm41";
    auto d = krull_dim(M, ring, opt.gb);
    bool dim_ok = c.hypothesis("dim >= 3", d && *d >= 3);
    auto pc = check_parameter_ideal(Q, M, ring, opt.gb);
    bool q_ok = c.hypothesis("Q parameter ideal", pc.ok);
    if (!dim_ok || !q_ok) {
        c.witness = pc.ok ? "" : pc.reason;
        return c;
    }
    long dd = *d;
    bool unmixed = is_unmixed(M, ring, opt.gb);
    c.hypothesis("M unmixed", unmixed);

    HilbertSamuelResult hs = hilbert_coefficients(M, Q, ring, opt.gb, opt.fit);
    HdegReport rep = hdeg_report(M, Q, ring, opt.gb, opt.fit);
    ZZ gs = sectional_genus(hs);
    ZZ rhs1 = rep.root.hdeg - rep.root.e0 - torsion_from_tree(rep.root, 1);
    ZZ e2 = detail::signed_e(hs, 2);
    ZZ t2 = torsion_from_tree(rep.root, 2);
    bool cond1 = gs == rhs1;
    bool cond2 = e2 == t2;
    c.quantities["gs"] = gs;
    c.quantities["hdeg_minus_e0_minus_T1"] = rhs1;
    c.quantities["e2"] = e2;
    c.quantities["T2"] = t2;
    c.quantities["cond1"] = cond1 ? 1 : 0;
    c.quantities["cond2"] = cond2 ? 1 : 0;

    if (!unmixed) {
        if (cond1 != cond2) c.witness = "conditions diverge on mixed input (no claim)";
        return c; // hypotheses-not-met; both sides reported
    }
    if (cond1 != cond2) {
        c.verdict = Verdict::fails;
        c.witness = "equivalence (1) <=> (2) broken";
        return c;
    }
    if (!cond1) {
        c.verdict = Verdict::holds; // both false: equivalence satisfied, no consequences
        return c;
    }

    bool all_ok = true;
    // (i) (-1)^i e_i = T^i for 3 <= i <= d-1, and e_d = 0
    for (long i = 3; i <= dd - 1; ++i) {
        ZZ lhs = detail::signed_e(hs, i);
        ZZ ti = torsion_from_tree(rep.root, i);
        c.quantities["signed_e" + std::to_string(i)] = lhs;
        c.quantities["T" + std::to_string(i)] = ti;
        if (lhs != ti) all_ok = false;
    }
    ZZ ed = hs.e.at(static_cast<std::size_t>(dd));
    c.quantities["e_d"] = ed;
    if (ed != 0) all_ok = false;
    c.quantities["consequence_i"] = all_ok ? 1 : 0;

    // (ii) closed formula for 0 <= n <= postulation + 3
    bool closed = true;
    HilbertSamuelTable table(M, Q, ring, opt.gb);
    for (long n = 0; n <= hs.postulation_index + 3; ++n) {
        ZZ h = n < static_cast<long>(hs.values.size()) ? hs.values[static_cast<std::size_t>(n)]
                                                       : table.value(n, opt.fit.table_cap);
        if (h != detail::eval_hilbert_polynomial(hs.e, n, dd)) { closed = false; break; }
    }
    c.quantities["consequence_ii"] = closed ? 1 : 0;
    if (!closed) all_ok = false;

    // (iii) d-sequence generator search
    DSequenceSearchResult found = find_d_sequence_generators(Q, M, ring, opt.gb, opt.search);
    c.quantities["consequence_iii"] = found.found ? 1 : 0;
    if (!found.found) all_ok = false;

    // (iv) Q annihilates M_j for 1 <= j <= d-3
    bool ann_ok = true;
    FreeResolution res = free_resolution(M, ring, opt.gb);
    long n = static_cast<long>(ring.nvars());
    for (long j = 1; j <= dd - 3; ++j) {
        if (n - j > static_cast<long>(res.length())) continue;
        ModulePresentation ext =
            ext_module_from_resolution(res, static_cast<std::size_t>(n - j), ring, opt.gb);
        if (is_zero_module(ext, ring, opt.gb)) continue;
        std::vector<Polynomial> ann = annihilator(ext, ring, opt.gb);
        for (const auto& q : Q)
            if (!detail::ideal_contains(ann, q, ring, opt.gb)) { ann_ok = false; break; }
        if (!ann_ok) break;
    }
    c.quantities["consequence_iv"] = ann_ok ? 1 : 0;
    if (!ann_ok) all_ok = false;

    c.verdict = all_ok ? Verdict::holds : Verdict::fails;
    if (!all_ok) c.witness = "a consequence of the equality case failed";
    return c;
}

/// Genus equality (1) <=> conditions (a) and (b), for dim >= 2.
inline TheoremCheck check_thm42_conditions(const ModulePresentation& M,
                                           const std::vector<Polynomial>& Q, const RingSpec& ring,
                                           CheckOptions opt = {}) {
    TheoremCheck c;
    c.theorem_id = "thm42";
    auto d = krull_dim(M, ring, opt.gb);
    bool dim_ok = c.hypothesis("dim >= 2", d && *d >= 2);
    auto pc = check_parameter_ideal(Q, M, ring, opt.gb);
    bool q_ok = c.hypothesis("Q parameter ideal", pc.ok);
    if (!dim_ok || !q_ok) {
        c.witness = pc.ok ? "" : pc.reason;
        return c;
    }
    long dd = *d;

    HilbertSamuelResult hs = hilbert_coefficients(M, Q, ring, opt.gb, opt.fit);
    HdegReport rep = hdeg_report(M, Q, ring, opt.gb, opt.fit);
    ZZ gs = sectional_genus(hs);
    ZZ rhs1 = rep.root.hdeg - rep.root.e0 - torsion_from_tree(rep.root, 1);
    bool genus_eq = gs == rhs1;
    c.quantities["gs"] = gs;
    c.quantities["hdeg_minus_e0_minus_T1"] = rhs1;

    // (a): (-1)^i e_i = T^i (2 <= i <= d-1) and (-1)^d e_d = len(H^0)
    bool cond_a = true;
    for (long i = 2; i <= dd - 1; ++i) {
        ZZ lhs = detail::signed_e(hs, i);
        ZZ ti = torsion_from_tree(rep.root, i);
        c.quantities["signed_e" + std::to_string(i)] = lhs;
        c.quantities["T" + std::to_string(i)] = ti;
        if (lhs != ti) cond_a = false;
    }
    ZZ l_h0 = rep.root.children.empty()
                  ? ZZ(0)
                  : (rep.root.children[0].length ? *rep.root.children[0].length : ZZ(0));
    ZZ ed_signed = detail::signed_e(hs, dd);
    c.quantities["signed_e_d"] = ed_signed;
    c.quantities["len_H0"] = l_h0;
    if (ed_signed != l_h0) cond_a = false;

    // (b): len(M/QM) - sum (-1)^i e_i = 0
    ZZ alt = 0;
    for (long i = 0; i <= dd; ++i) alt += detail::signed_e(hs, i);
    ZZ resid = hs.values.at(0) - alt;
    c.quantities["len_mod_Q"] = hs.values.at(0);
    c.quantities["alternating_sum"] = alt;
    c.quantities["cond_b_residual"] = resid;
    bool cond_b = resid == 0;

    c.quantities["genus_equality"] = genus_eq ? 1 : 0;
    c.quantities["cond_a"] = cond_a ? 1 : 0;
    c.quantities["cond_b"] = cond_b ? 1 : 0;
    c.verdict = (genus_eq == (cond_a && cond_b)) ? Verdict::holds : Verdict::fails;
    if (c.verdict == Verdict::fails) c.witness = "equivalence (1) <=> (a)&(b) broken";
    return c;
}

// ---------------------------------------------------------------------------
// example families
// ---------------------------------------------------------------------------

enum class ExampleFamily { idealization, two_planes, mixed_plane_line };

struct ExampleInstance {
    RingSpec ring;
    ModulePresentation module;
    std::vector<Polynomial> Q;
};

inline ExampleInstance build_example(ExampleFamily family, long ell, long m = 1) {
    ExampleInstance ex;
    switch (family) {
    case ExampleFamily::idealization: {
        if (ell < 1) throw input_error("idealization: requires ell >= 1");
        ex.ring.variable_names = {"X", "Y", "Z"};
        ex.ring.variable_degrees = {1, 1, 1};
        ex.ring.validate();
        // the module S (+) S/(Z^ell), rank-2 ambient, one relation Z^ell * e2
        GradedFreeModule amb(2);
        ModuleElement rel(2, 3);
        rel.components[1] = parse_polynomial("Z^" + std::to_string(ell), ex.ring);
        ex.module = ModulePresentation(amb, {rel});
        ex.Q = {parse_polynomial("X", ex.ring), parse_polynomial("Y", ex.ring),
                parse_polynomial("Z", ex.ring)};
        return ex;
    }
    case ExampleFamily::two_planes: {
        if (ell < 2 || m < 1) throw input_error("two_planes: requires ell >= 2, m >= 1");
        for (long i = 1; i <= ell; ++i) ex.ring.variable_names.push_back("X" + std::to_string(i));
        for (long i = 1; i <= ell; ++i) ex.ring.variable_names.push_back("Y" + std::to_string(i));
        for (long j = 1; j <= m; ++j) ex.ring.variable_names.push_back("Z" + std::to_string(j));
        ex.ring.variable_degrees.assign(ex.ring.variable_names.size(), 1);
        ex.ring.validate();
        // (X_1..X_ell) cap (Y_1..Y_ell) = (X_i Y_j)
        std::vector<Polynomial> gens;
        for (long i = 0; i < ell; ++i)
            for (long j = 0; j < ell; ++j)
                gens.push_back(Polynomial::variable(static_cast<int>(i), ex.ring) *
                               Polynomial::variable(static_cast<int>(ell + j), ex.ring));
        ex.module = quotient_ring_module(ex.ring, gens);
        for (long i = 0; i < ell; ++i)
            ex.Q.push_back(Polynomial::variable(static_cast<int>(i), ex.ring) -
                           Polynomial::variable(static_cast<int>(ell + i), ex.ring));
        for (long j = 0; j < m; ++j)
            ex.Q.push_back(Polynomial::variable(static_cast<int>(2 * ell + j), ex.ring));
        return ex;
    }
    case ExampleFamily::mixed_plane_line: {
        if (ell < 1) throw input_error("mixed_plane_line: requires ell >= 1");
        ex.ring.variable_names = {"X", "Y", "Z", "W"};
        ex.ring.variable_degrees = {1, 1, 1, 1};
        ex.ring.validate();
        // (X) cap (Y^ell, Z, W) = (X Y^ell, X Z, X W)
        std::vector<Polynomial> gens = {
            parse_polynomial("X*Y^" + std::to_string(ell), ex.ring),
            parse_polynomial("X*Z", ex.ring), parse_polynomial("X*W", ex.ring)};
        ex.module = quotient_ring_module(ex.ring, gens);
        ex.Q = {parse_polynomial("X-Y", ex.ring), parse_polynomial("X-Z", ex.ring),
                parse_polynomial("X-W", ex.ring)};
        return ex;
    }
    }
    throw input_error("build_example: unknown family");
}

/// Sampled e2 values over seeded unimodular recombinations q of Q with
/// e0(q) = e0(Q) (proxy for the integral-closure quantifier).
inline std::set<ZZ> sample_lambda2(const ModulePresentation& M, const std::vector<Polynomial>& Q,
                                   long trials, unsigned long long seed, const RingSpec& ring,
                                   GBOptions opt = {}, FitOptions fit = {}) {
    std::set<ZZ> values;
    if (trials <= 0) return values;
    auto pc = check_parameter_ideal(Q, M, ring, opt);
    if (!pc.ok) throw input_error("sample_lambda2: " + pc.reason);
    long d = *krull_dim(M, ring, opt);
    HilbertSamuelResult base = hilbert_coefficients_with_dim(M, Q, d, ring, opt, fit);
    values.insert(detail::signed_e(base, 2));

    std::map<long, std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < Q.size(); ++i) {
        auto deg = Q[i].homogeneous_degree(ring);
        if (!deg) return values;
        blocks[*deg].push_back(i);
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> entry(-3, 3);
    for (long t = 1; t < trials; ++t) {
        std::vector<Polynomial> q(Q.size(), Polynomial(ring.nvars()));
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
                for (std::size_t c2 = 0; c2 < b; ++c2) f = f + Q[ids[c2]] * QQ(U[r][c2]);
                if (f.is_zero()) { ok = false; break; }
                q[ids[r]] = std::move(f);
            }
            if (!ok) break;
        }
        if (!ok) continue;
        // unimodular recombination generates the same ideal, so q is again a
        // parameter ideal with the same e0; fit and record e2
        HilbertSamuelResult hs = hilbert_coefficients_with_dim(M, q, d, ring, opt, fit);
        if (hs.e.at(0) != base.e.at(0)) continue;
        values.insert(detail::signed_e(hs, 2));
    }
    return values;
}

} // namespace hdeg

#endif
