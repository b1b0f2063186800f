#ifndef ISOFLOW_MULTIPOLY_HPP
#define ISOFLOW_MULTIPOLY_HPP

// Sparse multivariate polynomials, arity 2 or 3, graded-lexicographic
// monomial order. Enough for the modular-curve polynomials and the
// trivariate susceptibility identity; no zero coefficients are stored.

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "isoflow/rational.hpp"

namespace isoflow {

struct Monomial {
    std::array<int, 3> e{0, 0, 0};

    int total() const { return e[0] + e[1] + e[2]; }
    friend Monomial operator+(const Monomial& a, const Monomial& b) {
        return Monomial{{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]}};
    }
    // componentwise divisibility, quotient when it exists
    std::optional<Monomial> divide(const Monomial& b) const {
        Monomial q;
        for (int i = 0; i < 3; ++i) {
            q.e[i] = e[i] - b.e[i];
            if (q.e[i] < 0) return std::nullopt;
        }
        return q;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

// graded lex: higher total degree first, ties by lex
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.total() != b.total()) return a.total() > b.total();
        return a.e > b.e;
    }
};

template <class K>
class MultiPoly {
public:
    using Map = std::map<Monomial, K, GradedLexGreater>;

    MultiPoly() = default;

    static MultiPoly constant(const K& k) {
        MultiPoly p;
        p.add_term(Monomial{}, k);
        return p;
    }
    static MultiPoly var(int i, int exp = 1) {
        MultiPoly p;
        Monomial m;
        m.e[static_cast<size_t>(i)] = exp;
        p.add_term(m, FieldTraits<K>::one());
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    int degree_in(int i) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.e[static_cast<size_t>(i)]);
        return d;
    }

    void add_term(const Monomial& m, const K& c) {
        if (k_is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (k_is_zero(it->second)) terms_.erase(it);
        }
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    MultiPoly operator-() const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
        return r;
    }
    MultiPoly scaled(const K& k) const {
        MultiPoly r;
        if (k_is_zero(k)) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * k);
        return r;
    }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(int n) const {
        MultiPoly r = constant(FieldTraits<K>::one());
        MultiPoly base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    // exact division; nullopt when a remainder would be left.
    // For f = q*g the graded-lex leading term of every partial remainder is
    // divisible by LT(g), so the greedy loop is a complete decision procedure.
    std::optional<MultiPoly> divide_exact(const MultiPoly& g) const {
        if (g.is_zero()) throw std::domain_error("divide_exact: zero divisor");
        MultiPoly f = *this;
        MultiPoly q;
        const auto& [gm, gc] = *g.terms_.begin();
        while (!f.is_zero()) {
            const auto& [fm, fc] = *f.terms_.begin();
            auto qm = fm.divide(gm);
            if (!qm) return std::nullopt;
            K qc = fc / gc;
            MultiPoly t;
            t.terms_.emplace(*qm, qc);
            q.add_term(*qm, qc);
            f = f - t * g;
        }
        return q;
    }

    // substitute values (e.g. rational functions) for the variables;
    // V needs +, *, scaling by K via mul_k
    template <class V, class MulK>
    V eval(const std::vector<V>& vars, const V& one, MulK mul_k) const {
        V acc = mul_k(one, FieldTraits<K>::zero());
        for (const auto& [m, c] : terms_) {
            V t = mul_k(one, c);
            for (int i = 0; i < 3; ++i)
                for (int k = 0; k < m.e[static_cast<size_t>(i)]; ++k)
                    t = t * vars[static_cast<size_t>(i)];
            acc = acc + t;
        }
        return acc;
    }

    // swap two variables
    MultiPoly swapped(int i, int j) const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) {
            Monomial s = m;
            std::swap(s.e[static_cast<size_t>(i)], s.e[static_cast<size_t>(j)]);
            r.terms_.emplace(s, c);
        }
        return r;
    }

private:
    Map terms_;
};

using MultiPolyQ = MultiPoly<Rat>;

}  // namespace isoflow

#endif
