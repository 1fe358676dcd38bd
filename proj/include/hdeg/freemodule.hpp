#ifndef HDEG_FREEMODULE_HPP
#define HDEG_FREEMODULE_HPP

#include <optional>
#include <vector>

#include "hdeg/polynomial.hpp"

namespace hdeg {

/// Graded free module S^r with a degree attached to each basis slot.
struct GradedFreeModule {
    std::vector<long> generator_degrees;

    GradedFreeModule() = default;
    explicit GradedFreeModule(std::size_t rank, long degree = 0)
        : generator_degrees(rank, degree) {}
    explicit GradedFreeModule(std::vector<long> degrees)
        : generator_degrees(std::move(degrees)) {}

    std::size_t rank() const { return generator_degrees.size(); }
    bool operator==(const GradedFreeModule& o) const {
        return generator_degrees == o.generator_degrees;
    }
};

/// Element of a graded free module: one polynomial per slot.
struct ModuleElement {
    std::vector<Polynomial> components;

    ModuleElement() = default;
    ModuleElement(std::size_t rank, std::size_t nvars)
        : components(rank, Polynomial(nvars)) {}

    std::size_t rank() const { return components.size(); }
    bool is_zero() const {
        for (const auto& p : components)
            if (!p.is_zero()) return false;
        return true;
    }

    ModuleElement operator+(const ModuleElement& o) const {
        ModuleElement r(*this);
        for (std::size_t i = 0; i < components.size(); ++i)
            r.components[i] = r.components[i] + o.components[i];
        return r;
    }
    ModuleElement operator-(const ModuleElement& o) const {
        ModuleElement r(*this);
        for (std::size_t i = 0; i < components.size(); ++i)
            r.components[i] = r.components[i] - o.components[i];
        return r;
    }
    ModuleElement scaled(const Polynomial& f) const {
        ModuleElement r(*this);
        for (auto& c : r.components) c = c * f;
        return r;
    }

    bool operator==(const ModuleElement& o) const { return components == o.components; }

    /// Degree of a homogeneous element (component degree + slot degree,
    /// constant across nonzero slots); nullopt for zero or inhomogeneous.
    std::optional<long> homogeneous_degree(const GradedFreeModule& amb,
                                           const RingSpec& ring) const {
        std::optional<long> d;
        for (std::size_t i = 0; i < components.size(); ++i) {
            if (components[i].is_zero()) continue;
            auto cd = components[i].homogeneous_degree(ring);
            if (!cd) return std::nullopt;
            long total = *cd + amb.generator_degrees[i];
            if (d && *d != total) return std::nullopt;
            d = total;
        }
        return d;
    }
    bool is_homogeneous(const GradedFreeModule& amb, const RingSpec& ring) const {
        return is_zero() || homogeneous_degree(amb, ring).has_value();
    }
};

inline ModuleElement basis_element(std::size_t slot, std::size_t rank, const RingSpec& ring) {
    ModuleElement v(rank, ring.nvars());
    v.components[slot] = Polynomial::constant(1, ring);
    return v;
}

/// Submodule of a graded free module given by a homogeneous generating set.
struct SubmodulePresentation {
    GradedFreeModule ambient;
    std::vector<ModuleElement> generators;

    SubmodulePresentation() = default;
    SubmodulePresentation(GradedFreeModule amb, std::vector<ModuleElement> gens)
        : ambient(std::move(amb)), generators(std::move(gens)) {}
};

/// Finitely generated graded module: cokernel of relations inside a free module.
struct ModulePresentation {
    GradedFreeModule ambient;
    SubmodulePresentation relations; // relations.ambient == ambient

    ModulePresentation() = default;
    explicit ModulePresentation(GradedFreeModule amb)
        : ambient(amb), relations(amb, {}) {}
    ModulePresentation(GradedFreeModule amb, std::vector<ModuleElement> rels)
        : ambient(amb), relations(std::move(amb), std::move(rels)) {
        relations.ambient = ambient;
    }
};

/// The ambient ring viewed as a module over itself.
inline ModulePresentation ring_as_module(const RingSpec& ring) {
    return ModulePresentation(GradedFreeModule(1));
}

/// S/I for an ideal given by polynomial generators.
inline ModulePresentation quotient_ring_module(const RingSpec& ring,
                                               const std::vector<Polynomial>& ideal_gens) {
    std::vector<ModuleElement> rels;
    for (const auto& f : ideal_gens) {
        if (f.is_zero()) continue;
        ModuleElement v(1, ring.nvars());
        v.components[0] = f;
        rels.push_back(std::move(v));
    }
    return ModulePresentation(GradedFreeModule(1), std::move(rels));
}

/// Homogeneous matrix between graded free modules, stored column-major:
/// columns are images of the source basis, as elements of the target.
struct FreeMap {
    GradedFreeModule source;
    GradedFreeModule target;
    std::vector<ModuleElement> columns; // size = source.rank(), each of target rank

    std::size_t nrows() const { return target.rank(); }
    std::size_t ncols() const { return source.rank(); }

    ModuleElement apply(const ModuleElement& x) const {
        ModuleElement r(target.rank(), x.components.empty() ? 0 : x.components[0].nvars());
        if (columns.empty()) {
            // zero map out of a possibly nonzero source
            for (auto& c : r.components) c = Polynomial(0);
        }
        for (std::size_t j = 0; j < columns.size(); ++j)
            r = r + columns[j].scaled(x.components[j]);
        return r;
    }
};

/// Transpose with negated degrees (grading of Hom(-, S)).
inline FreeMap transpose(const FreeMap& m, const RingSpec& ring) {
    FreeMap t;
    std::vector<long> src, tgt;
    for (long d : m.target.generator_degrees) src.push_back(-d);
    for (long d : m.source.generator_degrees) tgt.push_back(-d);
    t.source = GradedFreeModule(std::move(src));
    t.target = GradedFreeModule(std::move(tgt));
    t.columns.assign(t.source.rank(), ModuleElement(t.target.rank(), ring.nvars()));
    for (std::size_t j = 0; j < m.columns.size(); ++j)
        for (std::size_t i = 0; i < m.target.rank(); ++i)
            t.columns[i].components[j] = m.columns[j].components[i];
    return t;
}

} // namespace hdeg

#endif
