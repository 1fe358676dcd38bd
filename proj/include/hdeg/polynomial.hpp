#ifndef HDEG_POLYNOMIAL_HPP
#define HDEG_POLYNOMIAL_HPP

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "hdeg/ring.hpp"

namespace hdeg {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept in a canonical (storage) order; no zero coefficients stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, QQ>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(const QQ& c, const RingSpec& ring) {
        Polynomial p(ring.nvars());
        if (c != 0) p.terms_[Monomial(ring.nvars())] = c;
        return p;
    }
    static Polynomial variable(int i, const RingSpec& ring) {
        Polynomial p(ring.nvars());
        Monomial m(ring.nvars());
        m.e[i] = 1;
        p.terms_[m] = 1;
        return p;
    }
    static Polynomial term(const Monomial& m, const QQ& c) {
        Polynomial p(m.nvars());
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    void add_term(const Monomial& m, const QQ& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator+(const Polynomial& g) const {
        check_compatible(g);
        Polynomial r(*this);
        for (const auto& [m, c] : g.terms_) r.add_term(m, c);
        return r;
    }
    Polynomial operator-(const Polynomial& g) const {
        check_compatible(g);
        Polynomial r(*this);
        for (const auto& [m, c] : g.terms_) r.add_term(m, -c);
        return r;
    }
    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    Polynomial operator*(const Polynomial& g) const {
        check_compatible(g);
        Polynomial r(nvars_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : g.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Polynomial operator*(const QQ& c) const {
        Polynomial r(nvars_);
        if (c == 0) return r;
        r.terms_ = terms_;
        for (auto& [m, cc] : r.terms_) cc *= c;
        return r;
    }

    bool operator==(const Polynomial& g) const { return terms_ == g.terms_; }
    bool operator!=(const Polynomial& g) const { return terms_ != g.terms_; }

    /// Weighted degree of the highest term, or nullopt for the zero polynomial.
    std::optional<long> degree(const RingSpec& ring) const {
        if (terms_.empty()) return std::nullopt;
        long d = terms_.begin()->first.degree(ring);
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree(ring));
        return d;
    }

    /// Degree if all terms share it, nullopt otherwise (or for zero).
    std::optional<long> homogeneous_degree(const RingSpec& ring) const {
        if (terms_.empty()) return std::nullopt;
        long d = terms_.begin()->first.degree(ring);
        for (const auto& [m, c] : terms_)
            if (m.degree(ring) != d) return std::nullopt;
        return d;
    }
    bool is_homogeneous(const RingSpec& ring) const {
        return terms_.empty() || homogeneous_degree(ring).has_value();
    }

private:
    void check_compatible(const Polynomial& g) const {
        if (nvars_ != g.nvars_) throw input_error("polynomial arithmetic: ring mismatch");
    }

    std::size_t nvars_ = 0;
    TermMap terms_;
};

inline std::string to_string(const QQ& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

/// Canonical printer: terms in descending degrevlex, integer/fraction coefficients.
inline std::string to_string(const Polynomial& p, const RingSpec& ring) {
    if (p.is_zero()) return "0";
    std::vector<const std::pair<const Monomial, QQ>*> ts;
    for (const auto& t : p.terms()) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
        return compare_monomials(MonomialOrder::degrevlex, a->first, b->first, ring) > 0;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        QQ c = t->second;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        std::string mono;
        for (std::size_t i = 0; i < t->first.nvars(); ++i) {
            int32_t x = t->first.e[i];
            if (x == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring.variable_names[i];
            if (x > 1) mono += "^" + std::to_string(x);
        }
        if (mono.empty()) {
            os << to_string(c);
        } else {
            if (c != 1) os << to_string(c) << "*";
            os << mono;
        }
    }
    return os.str();
}

namespace detail {

struct PolyLexer {
    const std::string& s;
    std::size_t pos = 0;

    explicit PolyLexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    ZZ integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw input_error("polynomial parse: expected integer at offset " +
                                            std::to_string(pos));
        return ZZ(s.substr(start, pos - start));
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
};

} // namespace detail

/// Parses the canonical grammar: term (('+'|'-') term)*,
/// term = [coeff '*'] var('^'int)? ('*' var('^'int))*, coeff = int or int/int.
inline Polynomial parse_polynomial(const std::string& text, const RingSpec& ring) {
    detail::PolyLexer lx(text);
    if (lx.eof()) throw input_error("polynomial parse: empty input");
    Polynomial result(ring.nvars());
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        if (lx.accept('-')) sign = -1;
        else if (lx.accept('+')) sign = 1;
        else if (!first) throw input_error("polynomial parse: expected '+' or '-' at offset " +
                                           std::to_string(lx.pos));
        first = false;

        QQ coeff = sign;
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            ZZ num = lx.integer();
            if (lx.accept('/')) {
                ZZ den = lx.integer();
                if (den == 0) throw input_error("polynomial parse: zero denominator");
                coeff *= QQ(num, den);
            } else {
                coeff *= num;
            }
            saw_factor = true;
            if (!lx.accept('*')) {
                result.add_term(Monomial(ring.nvars()), coeff);
                continue;
            }
        }
        Monomial mono(ring.nvars());
        while (true) {
            std::string name = lx.identifier();
            if (name.empty()) {
                if (saw_factor) throw input_error(
                    "polynomial parse: expected variable at offset " + std::to_string(lx.pos));
                throw input_error("polynomial parse: expected term at offset " +
                                  std::to_string(lx.pos));
            }
            int vi = ring.var_index(name);
            if (vi < 0) throw input_error("polynomial parse: unknown variable '" + name + "'");
            long exp = 1;
            if (lx.accept('^')) {
                ZZ e = lx.integer();
                if (e < 0 || e > 1000000) throw input_error("polynomial parse: malformed exponent");
                exp = static_cast<long>(e);
            }
            mono.e[vi] += static_cast<int32_t>(exp);
            saw_factor = true;
            if (!lx.accept('*')) break;
        }
        result.add_term(mono, coeff);
    }
    return result;
}

enum class PolyOp { add, subtract, multiply };

inline Polynomial polynomial_arithmetic(PolyOp op, const Polynomial& f, const Polynomial& g) {
    switch (op) {
    case PolyOp::add: return f + g;
    case PolyOp::subtract: return f - g;
    case PolyOp::multiply: return f * g;
    }
    throw input_error("polynomial_arithmetic: unknown op");
}

} // namespace hdeg

#endif
