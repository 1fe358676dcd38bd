#ifndef HDEG_HILBERT_HPP
#define HDEG_HILBERT_HPP

#include "hdeg/resolution.hpp"

namespace hdeg {

struct FitOptions {
    long fit_extra = 3;   // extra agreement points required beyond the d+1 fit window
    long table_cap = 30;  // hard cap on the power index n
};

struct ParamCheckResult {
    bool ok = false;
    std::string reason;
};

/// A parameter ideal for M: homogeneous generators, as many as dim M,
/// with M/QM of finite length.
inline ParamCheckResult check_parameter_ideal(const std::vector<Polynomial>& Q,
                                              const ModulePresentation& M, const RingSpec& ring,
                                              GBOptions opt = {}) {
    auto d = krull_dim(M, ring, opt);
    if (!d) return {false, "module is zero"};
    if (*d < 1) return {false, "module dimension is not positive"};
    if (static_cast<long>(Q.size()) != *d)
        return {false, "generator count " + std::to_string(Q.size()) +
                           " differs from module dimension " + std::to_string(*d)};
    for (const auto& q : Q) {
        if (q.is_zero() || q.is_constant()) return {false, "generator is constant"};
        if (!q.is_homogeneous(ring)) return {false, "generator is not homogeneous"};
    }
    // finite colength: GB of relations + Q*F has a pure power in every slot/variable
    SubmodulePresentation N = M.relations;
    std::size_t r = M.ambient.rank();
    for (const auto& q : Q)
        for (std::size_t s = 0; s < r; ++s) {
            ModuleElement v(r, ring.nvars());
            v.components[s] = q;
            N.generators.push_back(std::move(v));
        }
    GroebnerBasis g(ring, N, opt);
    if (!finite_over_leads(g)) return {false, "M/QM does not have finite length"};
    return {true, ""};
}

/// Incremental table of lengths H(n) = len(M / Q^{n+1} M).
/// Generators of Q^{n+1} F are built recursively and kept reduced modulo a
/// Groebner basis of the relations, which keeps products short.
class HilbertSamuelTable {
public:
    HilbertSamuelTable(const ModulePresentation& M, std::vector<Polynomial> Q,
                       const RingSpec& ring, GBOptions opt = {})
        : ring_(ring), opt_(opt), M_(M), Q_(std::move(Q)),
          rel_gb_(ring, M.relations, opt) {
        std::size_t r = M_.ambient.rank();
        for (std::size_t s = 0; s < r; ++s)
            power_gens_.push_back(basis_element(s, r, ring_)); // Q^0 * F
        power_ = 0;
    }

    /// H(n); advances the internal power as needed. Throws input_error if the
    /// quotient is not of finite length, cap_exceeded past the table cap.
    ZZ value(long n, long table_cap = 30) {
        if (n < 0) throw input_error("hilbert table: negative index");
        if (n > table_cap)
            throw cap_exceeded("hilbert table: power index exceeds cap " +
                               std::to_string(table_cap));
        while (power_ < n + 1) advance();
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;

        SubmodulePresentation N = M_.relations;
        for (const auto& w : at_power_[n + 1]) N.generators.push_back(w);
        GroebnerBasis g(ring_, N, opt_);
        auto len = standard_monomial_count(g);
        if (!len) throw input_error("hilbert table: quotient does not have finite length");
        cache_[n] = *len;
        return *len;
    }

    const ModulePresentation& module() const { return M_; }
    const std::vector<Polynomial>& parameters() const { return Q_; }

    /// Generators of Q^k * F, reduced modulo the relations (so they generate
    /// Q^k M inside M). Advances the table as needed.
    const std::vector<ModuleElement>& power_generators(long k, long table_cap = 30) {
        if (k < 0) throw input_error("hilbert table: negative power");
        if (k > table_cap + 1)
            throw cap_exceeded("hilbert table: power index exceeds cap " +
                               std::to_string(table_cap));
        while (power_ < k) advance();
        if (at_power_.empty()) at_power_.push_back(power_gens_);
        return at_power_[static_cast<std::size_t>(k)];
    }

private:
    void advance() {
        if (at_power_.empty()) at_power_.push_back(power_gens_);
        std::vector<ModuleElement> next;
        for (const auto& q : Q_)
            for (const auto& w : power_gens_) {
                ModuleElement p = rel_gb_.normal_form(w.scaled(q));
                if (p.is_zero()) continue;
                normalize(p);
                bool dup = false;
                for (const auto& u : next)
                    if (u == p) { dup = true; break; }
                if (!dup) next.push_back(std::move(p));
            }
        power_gens_ = std::move(next);
        at_power_.push_back(power_gens_);
        ++power_;
    }

    static void normalize(ModuleElement& v) {
        for (auto& c : v.components) {
            if (c.is_zero()) continue;
            QQ lead = c.terms().rbegin()->second;
            if (lead != 1)
                for (auto& comp : v.components) comp = comp * (QQ(1) / lead);
            return;
        }
    }

    const RingSpec& ring_;
    GBOptions opt_;
    ModulePresentation M_;
    std::vector<Polynomial> Q_;
    GroebnerBasis rel_gb_;
    std::vector<ModuleElement> power_gens_;               // reduced gens of Q^power * F
    std::vector<std::vector<ModuleElement>> at_power_;    // index k: gens of Q^k * F
    long power_ = 0;
    std::map<long, ZZ> cache_;
};

struct HilbertSamuelResult {
    long dim = 0;
    std::vector<ZZ> e;          // e[0..dim], signs as in the alternating binomial expansion
    long postulation_index = 0; // least n0 with H(n) = P(n) for all computed n >= n0
    std::vector<ZZ> values;     // H(0), H(1), ...
};

namespace detail {

/// Solves the (d+1)x(d+1) rational system for the coefficients e_i of
/// P(n) = sum_i (-1)^i e_i binom(n+d-i, d-i) through the given points.
inline std::optional<std::vector<ZZ>> fit_hilbert_polynomial(const std::vector<long>& ns,
                                                             const std::vector<ZZ>& hs, long d) {
    std::size_t m = static_cast<std::size_t>(d + 1);
    std::vector<std::vector<QQ>> A(m, std::vector<QQ>(m + 1));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t i = 0; i < m; ++i) {
            ZZ b = binomial(ns[r] + d - static_cast<long>(i), d - static_cast<long>(i));
            A[r][i] = (i % 2 == 0) ? QQ(b) : QQ(-b);
        }
        A[r][m] = QQ(hs[r]);
    }
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        while (piv < m && A[piv][col] == 0) ++piv;
        if (piv == m) return std::nullopt;
        std::swap(A[col], A[piv]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col || A[r][col] == 0) continue;
            QQ f = A[r][col] / A[col][col];
            for (std::size_t k = col; k <= m; ++k) A[r][k] -= f * A[col][k];
        }
    }
    std::vector<ZZ> e(m);
    for (std::size_t i = 0; i < m; ++i) {
        QQ v = A[i][m] / A[i][i];
        if (boost::multiprecision::denominator(v) != 1) return std::nullopt;
        e[i] = boost::multiprecision::numerator(v);
    }
    return e;
}

inline ZZ eval_hilbert_polynomial(const std::vector<ZZ>& e, long n, long d) {
    ZZ v = 0;
    for (long i = 0; i <= d; ++i) {
        ZZ t = e[static_cast<std::size_t>(i)] * binomial(n + d - i, d - i);
        v += (i % 2 == 0) ? t : -t;
    }
    return v;
}

} // namespace detail

/// Computes H(n) = len(M/Q^{n+1}M) until a degree-d polynomial through the last
/// d+1 points also matches the preceding fit_extra points, then locates the
/// postulation index. Exact throughout. Applies to any ideal Q with
/// len(M/QM) finite; d must be dim M.
inline HilbertSamuelResult hilbert_coefficients_with_dim(const ModulePresentation& M,
                                                         const std::vector<Polynomial>& Q,
                                                         long d, const RingSpec& ring,
                                                         GBOptions opt = {}, FitOptions fit = {}) {
    HilbertSamuelTable table(M, Q, ring, opt);
    HilbertSamuelResult out;
    out.dim = d;

    long need = d + 1 + fit.fit_extra;
    std::vector<ZZ>& H = out.values;
    for (long n = 0; n < need; ++n) H.push_back(table.value(n, fit.table_cap));

    while (true) {
        long top = static_cast<long>(H.size()) - 1;
        std::vector<long> ns;
        std::vector<ZZ> hs;
        for (long n = top - d; n <= top; ++n) {
            ns.push_back(n);
            hs.push_back(H[static_cast<std::size_t>(n)]);
        }
        auto e = detail::fit_hilbert_polynomial(ns, hs, d);
        bool good = e.has_value();
        if (good)
            for (long k = 1; k <= fit.fit_extra; ++k) {
                long n = top - d - k;
                if (detail::eval_hilbert_polynomial(*e, n, d) != H[static_cast<std::size_t>(n)]) {
                    good = false;
                    break;
                }
            }
        if (good) {
            out.e = *e;
            break;
        }
        long n = static_cast<long>(H.size());
        H.push_back(table.value(n, fit.table_cap)); // throws cap_exceeded past the cap
    }

    long post = static_cast<long>(H.size());
    for (long n = static_cast<long>(H.size()) - 1; n >= 0; --n) {
        if (detail::eval_hilbert_polynomial(out.e, n, d) != H[static_cast<std::size_t>(n)]) break;
        post = n;
    }
    out.postulation_index = post;
    return out;
}

/// Hilbert coefficients with respect to a parameter ideal of M.
inline HilbertSamuelResult hilbert_coefficients(const ModulePresentation& M,
                                                const std::vector<Polynomial>& Q,
                                                const RingSpec& ring, GBOptions opt = {},
                                                FitOptions fit = {}) {
    auto check = check_parameter_ideal(Q, M, ring, opt);
    if (!check.ok) throw input_error("hilbert_coefficients: " + check.reason);
    long d = *krull_dim(M, ring, opt);
    return hilbert_coefficients_with_dim(M, Q, d, ring, opt, fit);
}

inline ZZ multiplicity(const HilbertSamuelResult& r) { return r.e.at(0); }

/// chi_1 = len(M/QM) - e_0 (non-negative for parameter ideals).
inline ZZ euler_characteristic_chi1(const HilbertSamuelResult& r) {
    return r.values.at(0) - r.e.at(0);
}

/// Sectional genus len(M/QM) - e_0 + e_1 in the alternating-sign convention.
inline ZZ sectional_genus(const HilbertSamuelResult& r) {
    if (r.dim < 1) throw input_error("sectional_genus: requires dim >= 1");
    return r.values.at(0) - r.e.at(0) + r.e.at(1);
}

} // namespace hdeg

#endif
