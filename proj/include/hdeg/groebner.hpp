#ifndef HDEG_GROEBNER_HPP
#define HDEG_GROEBNER_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "hdeg/freemodule.hpp"

namespace hdeg {

struct GBOptions {
    long degree_cap = 40;
};

namespace gb {

struct VTerm {
    Monomial m;
    int32_t slot;
    QQ c;
};

// terms sorted descending under the module order
using VPoly = std::vector<VTerm>;

/// Graded term-over-position order, optionally with a leading block of slots
/// (slots < block_split compare greater than slots >= block_split; used to
/// eliminate the ambient block when computing syzygies).
struct ModOrder {
    const RingSpec* ring = nullptr;
    std::vector<long> slot_degrees;
    std::size_t block_split = SIZE_MAX;

    int cmp(const Monomial& ma, int32_t sa, const Monomial& mb, int32_t sb) const {
        if (block_split != SIZE_MAX) {
            bool aux_a = static_cast<std::size_t>(sa) >= block_split;
            bool aux_b = static_cast<std::size_t>(sb) >= block_split;
            if (aux_a != aux_b) return aux_a ? -1 : 1;
        }
        long da = ma.degree(*ring) + slot_degrees[sa];
        long db = mb.degree(*ring) + slot_degrees[sb];
        if (da != db) return da < db ? -1 : 1;
        int c = compare_monomials(MonomialOrder::degrevlex, ma, mb, *ring);
        if (c != 0) return c;
        if (sa != sb) return sa < sb ? 1 : -1; // lower slot is larger
        return 0;
    }
    long term_degree(const VTerm& t) const {
        return t.m.degree(*ring) + slot_degrees[t.slot];
    }
};

inline VPoly to_vpoly(const ModuleElement& v, const ModOrder& ord) {
    VPoly p;
    for (std::size_t s = 0; s < v.components.size(); ++s)
        for (const auto& [m, c] : v.components[s].terms())
            p.push_back(VTerm{m, static_cast<int32_t>(s), c});
    std::sort(p.begin(), p.end(), [&](const VTerm& a, const VTerm& b) {
        return ord.cmp(a.m, a.slot, b.m, b.slot) > 0;
    });
    return p;
}

inline ModuleElement from_vpoly(const VPoly& p, std::size_t rank, std::size_t nvars) {
    ModuleElement v(rank, nvars);
    for (const auto& t : p) v.components[t.slot].add_term(t.m, t.c);
    return v;
}

/// v[pos..] -= c * u * g, assuming the leading terms cancel exactly.
inline void axpy_suffix(VPoly& v, std::size_t pos, const QQ& c, const Monomial& u,
                        const VPoly& g, const ModOrder& ord) {
    VPoly merged;
    merged.reserve(v.size() - pos + g.size());
    std::size_t i = pos, j = 0;
    while (i < v.size() || j < g.size()) {
        if (j >= g.size()) {
            merged.push_back(std::move(v[i++]));
            continue;
        }
        Monomial gm = g[j].m * u;
        int32_t gs = g[j].slot;
        if (i >= v.size()) {
            QQ nc = -c * g[j].c;
            if (nc != 0) merged.push_back(VTerm{std::move(gm), gs, std::move(nc)});
            ++j;
            continue;
        }
        int cc = ord.cmp(v[i].m, v[i].slot, gm, gs);
        if (cc > 0) {
            merged.push_back(std::move(v[i++]));
        } else if (cc < 0) {
            QQ nc = -c * g[j].c;
            if (nc != 0) merged.push_back(VTerm{std::move(gm), gs, std::move(nc)});
            ++j;
        } else {
            QQ nc = v[i].c - c * g[j].c;
            if (nc != 0) merged.push_back(VTerm{std::move(gm), gs, std::move(nc)});
            ++i;
            ++j;
        }
    }
    v.resize(pos);
    for (auto& t : merged) v.push_back(std::move(t));
}

inline void make_monic(VPoly& p) {
    if (p.empty() || p[0].c == 1) return;
    QQ inv = QQ(1) / p[0].c;
    for (auto& t : p) t.c *= inv;
}

/// Full normal form of v against a basis (leading-term index rebuilt per call).
inline VPoly reduce_full(VPoly v, const std::vector<VPoly>& basis, const ModOrder& ord) {
    std::size_t pos = 0;
    while (pos < v.size()) {
        int gi = -1;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i][0].slot == v[pos].slot && basis[i][0].m.divides(v[pos].m)) {
                gi = static_cast<int>(i);
                break;
            }
        }
        if (gi < 0) {
            ++pos;
            continue;
        }
        const VPoly& g = basis[gi];
        QQ c = v[pos].c / g[0].c;
        Monomial u = v[pos].m / g[0].m;
        axpy_suffix(v, pos, c, u, g, ord);
    }
    return v;
}

/// Buchberger engine over a graded free module. Normal selection strategy
/// (degree, then generator index), Gebauer-Moeller pair pruning.
class Engine {
public:
    Engine(const RingSpec& ring, ModOrder ord, GBOptions opt)
        : ring_(ring), ord_(std::move(ord)), opt_(opt) {}

    std::vector<VPoly> take_basis() { return std::move(G_); }

    void compute(const std::vector<VPoly>& gens) {
        for (const auto& g : gens) {
            VPoly r = reduce(g);
            if (!r.empty()) add_element(std::move(r));
        }
        while (!pairs_.empty()) {
            Pair p = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            if (p.deg > opt_.degree_cap)
                throw cap_exceeded("groebner: degree cap " + std::to_string(opt_.degree_cap) +
                                   " exceeded at S-pair degree " + std::to_string(p.deg));
            VPoly r = reduce(s_poly(p));
            if (!r.empty()) add_element(std::move(r));
        }
        reduce_basis();
    }

private:
    struct Pair {
        long deg;
        int i, j;
        Monomial lcm;
        bool operator<(const Pair& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (j != o.j) return j < o.j;
            return i < o.i;
        }
    };

    int find_reducer(const VTerm& t) const {
        auto it = by_slot_.find(t.slot);
        if (it == by_slot_.end()) return -1;
        for (int gi : it->second)
            if (G_[gi][0].m.divides(t.m)) return gi;
        return -1;
    }

    VPoly reduce(VPoly v) const {
        std::size_t pos = 0;
        while (pos < v.size()) {
            int gi = find_reducer(v[pos]);
            if (gi < 0) {
                ++pos;
                continue;
            }
            const VPoly& g = G_[gi];
            QQ c = v[pos].c / g[0].c;
            Monomial u = v[pos].m / g[0].m;
            axpy_suffix(v, pos, c, u, g, ord_);
        }
        return v;
    }

    VPoly s_poly(const Pair& p) const {
        const VPoly& f = G_[p.i];
        const VPoly& g = G_[p.j];
        Monomial uf = p.lcm / f[0].m;
        Monomial ug = p.lcm / g[0].m;
        VPoly s;
        s.reserve(f.size());
        for (const auto& t : f) s.push_back(VTerm{t.m * uf, t.slot, t.c});
        make_monic(s);
        axpy_suffix(s, 0, QQ(1) / g[0].c, ug, g, ord_); // leading terms cancel
        return s;
    }

    bool single_slot(const VPoly& p) const {
        for (const auto& t : p)
            if (t.slot != p[0].slot) return false;
        return true;
    }

    void add_element(VPoly p) {
        make_monic(p);
        int t = static_cast<int>(G_.size());
        const Monomial lm = p[0].m;
        int32_t ls = p[0].slot;

        // Gebauer-Moeller: discard old pairs strictly dominated by the new lead
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            const Pair& q = *it;
            if (G_[q.i][0].slot == ls && lm.divides(q.lcm) &&
                Monomial::lcm(G_[q.i][0].m, lm) != q.lcm &&
                Monomial::lcm(G_[q.j][0].m, lm) != q.lcm)
                it = pairs_.erase(it);
            else
                ++it;
        }

        // new pairs, keeping only minimal lcms
        std::vector<Pair> fresh;
        for (int i = 0; i < t; ++i) {
            if (G_[i][0].slot != ls) continue;
            Monomial l = Monomial::lcm(G_[i][0].m, lm);
            long deg = l.degree(ring_) + ord_.slot_degrees[ls];
            fresh.push_back(Pair{deg, i, t, std::move(l)});
        }
        std::vector<bool> drop(fresh.size(), false);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || drop[a] || drop[b]) continue;
                if (fresh[b].lcm != fresh[a].lcm && fresh[b].lcm.divides(fresh[a].lcm))
                    drop[a] = true;
            }
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = a + 1; b < fresh.size(); ++b)
                if (!drop[a] && !drop[b] && fresh[a].lcm == fresh[b].lcm) drop[b] = true;
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            // product criterion; only valid when both elements live in a single slot
            const VPoly& f = G_[fresh[a].i];
            if (fresh[a].lcm == f[0].m * lm && single_slot(f) && single_slot(p)) continue;
            pairs_.insert(std::move(fresh[a]));
        }

        by_slot_[ls].push_back(t);
        G_.push_back(std::move(p));
    }

    void reduce_basis() {
        // minimalize: drop any element whose lead another lead divides
        std::vector<bool> drop(G_.size(), false);
        for (std::size_t i = 0; i < G_.size(); ++i)
            for (std::size_t j = 0; j < G_.size() && !drop[i]; ++j) {
                if (i == j || drop[j] || G_[j][0].slot != G_[i][0].slot) continue;
                if (!G_[j][0].m.divides(G_[i][0].m)) continue;
                drop[i] = (G_[j][0].m != G_[i][0].m) || (j < i);
            }
        std::vector<VPoly> mini;
        for (std::size_t i = 0; i < G_.size(); ++i)
            if (!drop[i]) mini.push_back(std::move(G_[i]));
        G_ = std::move(mini);
        rebuild_index();

        // tail-reduce: tails are never divisible by their own lead (graded order),
        // so reducing against the whole basis is safe
        for (std::size_t i = 0; i < G_.size(); ++i) {
            VPoly tail(G_[i].begin() + 1, G_[i].end());
            tail = reduce_full(std::move(tail), G_, ord_);
            G_[i].resize(1);
            for (auto& t : tail) G_[i].push_back(std::move(t));
        }
        std::sort(G_.begin(), G_.end(), [&](const VPoly& a, const VPoly& b) {
            return ord_.cmp(a[0].m, a[0].slot, b[0].m, b[0].slot) < 0;
        });
        rebuild_index();
    }

    void rebuild_index() {
        by_slot_.clear();
        for (std::size_t i = 0; i < G_.size(); ++i)
            by_slot_[G_[i][0].slot].push_back(static_cast<int>(i));
    }

    const RingSpec& ring_;
    ModOrder ord_;
    GBOptions opt_;
    std::vector<VPoly> G_;
    std::set<Pair> pairs_;
    std::unordered_map<int32_t, std::vector<int>> by_slot_;
};

/// Deterministic text form of a basis, used for cache keys and cache values.
inline std::string serialize_vpolys(const std::vector<VPoly>& ps) {
    std::ostringstream os;
    os << ps.size() << "\n";
    for (const auto& p : ps) {
        os << p.size();
        for (const auto& t : p) {
            os << " " << t.slot;
            for (int32_t e : t.m.e) os << " " << e;
            os << " " << t.c;
        }
        os << "\n";
    }
    return os.str();
}

inline std::optional<std::vector<VPoly>> deserialize_vpolys(const std::string& text,
                                                            std::size_t nvars) {
    std::istringstream is(text);
    std::size_t count = 0;
    if (!(is >> count)) return std::nullopt;
    std::vector<VPoly> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t terms = 0;
        if (!(is >> terms) || terms == 0) return std::nullopt;
        VPoly p;
        p.reserve(terms);
        for (std::size_t k = 0; k < terms; ++k) {
            VTerm t;
            t.m = Monomial(nvars);
            if (!(is >> t.slot)) return std::nullopt;
            for (std::size_t v = 0; v < nvars; ++v)
                if (!(is >> t.m.e[v])) return std::nullopt;
            std::string c;
            if (!(is >> c)) return std::nullopt;
            try {
                t.c = QQ(c);
            } catch (...) {
                return std::nullopt;
            }
            if (t.c == 0) return std::nullopt;
            p.push_back(std::move(t));
        }
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace gb

/// Optional external cache for computed bases. When installed (see the cache
/// header), basis computations first consult lookup and publish via store.
struct GBCacheHooks {
    std::function<std::optional<std::string>(const std::string& key)> lookup;
    std::function<void(const std::string& key, const std::string& value)> store;
    bool installed() const { return static_cast<bool>(lookup); }
};

inline GBCacheHooks& gb_cache_hooks() {
    static GBCacheHooks hooks;
    return hooks;
}

namespace gb {

inline std::string cache_key_text(const char* tag, const RingSpec& ring,
                                  const std::vector<long>& slot_degrees,
                                  const std::vector<VPoly>& gens, const GBOptions& opt) {
    std::ostringstream os;
    os << tag << "|cap=" << opt.degree_cap << "|vars";
    for (long w : ring.variable_degrees) os << " " << w;
    os << "|slots";
    for (long d : slot_degrees) os << " " << d;
    os << "|\n" << serialize_vpolys(gens);
    return os.str();
}

} // namespace gb

/// Reduced Groebner basis of a submodule of a graded free module.
class GroebnerBasis {
public:
    GroebnerBasis() = default;

    GroebnerBasis(const RingSpec& ring, const SubmodulePresentation& N, GBOptions opt = {})
        : ring_(ring), ambient_(N.ambient) {
        gb::ModOrder ord = make_order();
        std::vector<gb::VPoly> gens;
        for (const auto& g : N.generators) {
            if (g.rank() != N.ambient.rank())
                throw input_error("groebner: generator rank does not match ambient module");
            if (!g.is_homogeneous(N.ambient, ring))
                throw input_error("groebner: inhomogeneous generator");
            if (!g.is_zero()) gens.push_back(gb::to_vpoly(g, ord));
        }
        auto& hooks = gb_cache_hooks();
        std::string key;
        if (hooks.installed()) {
            key = gb::cache_key_text("GB", ring_, ord.slot_degrees, gens, opt);
            if (auto hit = hooks.lookup(key)) {
                if (auto parsed = gb::deserialize_vpolys(*hit, ring_.nvars())) {
                    basis_ = std::move(*parsed);
                    return;
                }
            }
        }
        gb::Engine eng(ring_, ord, opt);
        eng.compute(gens);
        basis_ = eng.take_basis();
        if (hooks.installed() && hooks.store) hooks.store(key, gb::serialize_vpolys(basis_));
    }

    const RingSpec& ring() const { return ring_; }
    const GradedFreeModule& ambient() const { return ambient_; }
    std::size_t size() const { return basis_.size(); }
    bool reduced() const { return true; }
    MonomialOrder order() const { return MonomialOrder::degrevlex; }

    std::vector<ModuleElement> elements() const {
        std::vector<ModuleElement> out;
        for (const auto& p : basis_)
            out.push_back(gb::from_vpoly(p, ambient_.rank(), ring_.nvars()));
        return out;
    }

    std::vector<std::pair<Monomial, int32_t>> leads() const {
        std::vector<std::pair<Monomial, int32_t>> out;
        for (const auto& p : basis_) out.emplace_back(p[0].m, p[0].slot);
        return out;
    }

    ModuleElement normal_form(const ModuleElement& v) const {
        if (v.rank() != ambient_.rank())
            throw input_error("normal_form: ambient module mismatch");
        gb::ModOrder ord = make_order();
        gb::VPoly r = gb::reduce_full(gb::to_vpoly(v, ord), basis_, ord);
        return gb::from_vpoly(r, ambient_.rank(), ring_.nvars());
    }

    bool contains(const ModuleElement& v) const { return normal_form(v).is_zero(); }

    const std::vector<gb::VPoly>& raw() const { return basis_; }

    gb::ModOrder make_order() const {
        gb::ModOrder ord;
        ord.ring = &ring_;
        ord.slot_degrees = ambient_.generator_degrees;
        return ord;
    }

private:
    RingSpec ring_;
    GradedFreeModule ambient_;
    std::vector<gb::VPoly> basis_;
};

inline GroebnerBasis groebner_basis(const SubmodulePresentation& N, const RingSpec& ring,
                                    GBOptions opt = {}) {
    return GroebnerBasis(ring, N, opt);
}

inline ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& G) {
    return G.normal_form(v);
}

/// Groebner basis of {(g_i, e_i)} in F (+) S^k under a block order eliminating
/// the F block. Yields syzygies and membership expressions for the generator
/// list in one computation.
class AugmentedBasis {
public:
    AugmentedBasis(const RingSpec& ring, const SubmodulePresentation& N, GBOptions opt = {})
        : ring_(ring), ambient_(N.ambient), ngens_(N.generators.size()) {
        std::size_t r = ambient_.rank();
        std::vector<long> degs = ambient_.generator_degrees;
        for (const auto& g : N.generators) {
            if (!g.is_homogeneous(ambient_, ring))
                throw input_error("syzygy: inhomogeneous generator");
            auto d = g.homogeneous_degree(ambient_, ring);
            degs.push_back(d ? *d : 0);
        }
        aug_degrees_ = std::move(degs);

        gb::ModOrder ord = make_order();
        std::vector<gb::VPoly> gens;
        for (std::size_t i = 0; i < N.generators.size(); ++i) {
            ModuleElement a(r + ngens_, ring.nvars());
            for (std::size_t s = 0; s < r; ++s) a.components[s] = N.generators[i].components[s];
            a.components[r + i] = Polynomial::constant(1, ring);
            gens.push_back(gb::to_vpoly(a, ord));
        }
        auto& hooks = gb_cache_hooks();
        std::string key;
        if (hooks.installed()) {
            key = gb::cache_key_text("AUG", ring_, ord.slot_degrees, gens, opt);
            if (auto hit = hooks.lookup(key)) {
                if (auto parsed = gb::deserialize_vpolys(*hit, ring_.nvars())) {
                    basis_ = std::move(*parsed);
                    return;
                }
            }
        }
        gb::Engine eng(ring_, ord, opt);
        eng.compute(gens);
        basis_ = eng.take_basis();
        if (hooks.installed() && hooks.store) hooks.store(key, gb::serialize_vpolys(basis_));
    }

    /// Generators of the first syzygy module of the input list.
    SubmodulePresentation syzygies() const {
        std::size_t r = ambient_.rank();
        std::vector<long> degs(aug_degrees_.begin() + r, aug_degrees_.end());
        GradedFreeModule syz_amb(std::move(degs));
        std::vector<ModuleElement> out;
        for (const auto& p : basis_) {
            if (static_cast<std::size_t>(p[0].slot) >= r) {
                ModuleElement v(ngens_, ring_.nvars());
                for (const auto& t : p) v.components[t.slot - r].add_term(t.m, t.c);
                out.push_back(std::move(v));
            }
        }
        return SubmodulePresentation(syz_amb, std::move(out));
    }

    /// Coefficients c with v = sum c_i g_i, if v lies in the submodule.
    std::optional<std::vector<Polynomial>> express(const ModuleElement& v) const {
        std::size_t r = ambient_.rank();
        ModuleElement a(r + ngens_, ring_.nvars());
        for (std::size_t s = 0; s < r; ++s) a.components[s] = v.components[s];
        gb::ModOrder ord = make_order();
        gb::VPoly red = gb::reduce_full(gb::to_vpoly(a, ord), basis_, ord);
        std::vector<Polynomial> coeffs(ngens_, Polynomial(ring_.nvars()));
        for (const auto& t : red) {
            if (static_cast<std::size_t>(t.slot) < r) return std::nullopt; // not a member
            coeffs[t.slot - r].add_term(t.m, -t.c);
        }
        return coeffs;
    }

    bool contains(const ModuleElement& v) const { return express(v).has_value(); }

private:
    gb::ModOrder make_order() const {
        gb::ModOrder ord;
        ord.ring = &ring_;
        ord.slot_degrees = aug_degrees_;
        ord.block_split = ambient_.rank();
        return ord;
    }

    RingSpec ring_;
    GradedFreeModule ambient_;
    std::vector<long> aug_degrees_;
    std::size_t ngens_;
    std::vector<gb::VPoly> basis_;
};

/// First syzygies of the generators of N (as listed).
inline SubmodulePresentation syzygy_module(const SubmodulePresentation& N, const RingSpec& ring,
                                           GBOptions opt = {}) {
    return AugmentedBasis(ring, N, opt).syzygies();
}

} // namespace hdeg

#endif
