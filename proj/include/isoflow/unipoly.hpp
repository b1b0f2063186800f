#ifndef ISOFLOW_UNIPOLY_HPP
#define ISOFLOW_UNIPOLY_HPP

// Dense univariate polynomials over an exact field, coefficients stored
// low degree first. The zero polynomial has an empty coefficient vector.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "isoflow/rational.hpp"

namespace isoflow {

struct NotDivisible : std::runtime_error {
    NotDivisible() : std::runtime_error("exact polynomial division left a remainder") {}
};

template <class K>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<long> ints) {
        c_.reserve(ints.size());
        for (long v : ints) c_.push_back(k_from_rat<K>(Rat(v)));
        trim();
    }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const K& k) { return UniPoly(std::vector<K>{k}); }
    static UniPoly x() { return UniPoly(std::vector<K>{FieldTraits<K>::zero(), FieldTraits<K>::one()}); }
    static UniPoly monomial(const K& k, int deg) {
        std::vector<K> c(static_cast<size_t>(deg) + 1, FieldTraits<K>::zero());
        c.back() = k;
        return UniPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    const K& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return FieldTraits<K>::zero();
        return c_[static_cast<size_t>(i)];
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), FieldTraits<K>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), FieldTraits<K>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return UniPoly(std::move(r));
    }
    UniPoly operator-() const {
        std::vector<K> r(c_);
        for (auto& v : r) v = -v;
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, FieldTraits<K>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (k_is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (!k_is_zero(b.c_[j])) r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return UniPoly(std::move(r));
    }
    UniPoly& operator+=(const UniPoly& o) { *this = *this + o; return *this; }
    UniPoly& operator-=(const UniPoly& o) { *this = *this - o; return *this; }
    UniPoly& operator*=(const UniPoly& o) { *this = *this * o; return *this; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly scaled(const K& k) const {
        if (k_is_zero(k)) return UniPoly();
        std::vector<K> r(c_);
        for (auto& v : r) v *= k;
        return UniPoly(std::move(r));
    }

    UniPoly shifted(int n) const {  // multiply by x^n
        if (is_zero()) return UniPoly();
        std::vector<K> r(c_.size() + static_cast<size_t>(n), FieldTraits<K>::zero());
        std::copy(c_.begin(), c_.end(), r.begin() + n);
        return UniPoly(std::move(r));
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<K> r(c_.size() - 1, FieldTraits<K>::zero());
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * k_from_rat<K>(Rat(static_cast<long>(i)));
        return UniPoly(std::move(r));
    }

    K eval(const K& x0) const {
        K acc = FieldTraits<K>::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + *it;
        return acc;
    }

    // reversal: x^deg * p(1/x)
    UniPoly reversed() const {
        std::vector<K> r(c_.rbegin(), c_.rend());
        return UniPoly(std::move(r));
    }

    UniPoly monic() const {
        if (is_zero()) return UniPoly();
        K inv = FieldTraits<K>::one() / leading();
        return scaled(inv);
    }

    // quotient-remainder division (field coefficients)
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
        UniPoly r = *this;
        if (r.degree() < d.degree()) return {UniPoly(), r};
        std::vector<K> q(static_cast<size_t>(r.degree() - d.degree()) + 1, FieldTraits<K>::zero());
        K dlc = d.leading();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            K f = r.leading() / dlc;
            int shift = r.degree() - d.degree();
            q[static_cast<size_t>(shift)] = f;
            r -= d.scaled(f).shifted(shift);
        }
        return {UniPoly(std::move(q)), r};
    }

    // exact division; throws NotDivisible when a remainder is left
    friend UniPoly operator/(const UniPoly& a, const UniPoly& b) {
        auto [q, r] = a.divmod(b);
        if (!r.is_zero()) throw NotDivisible();
        return q;
    }

    bool divides(const UniPoly& other) const {
        if (is_zero()) return other.is_zero();
        return other.divmod(*this).second.is_zero();
    }

    UniPoly compose(const UniPoly& inner) const {
        UniPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * inner + constant(*it);
        return acc;
    }

    // p(num/den) * den^degree(p), exact (Horner with denominator powers)
    UniPoly compose_scaled(const UniPoly& num, const UniPoly& den) const {
        if (is_zero()) return UniPoly();
        UniPoly acc = constant(c_.back());
        UniPoly dpow = constant(FieldTraits<K>::one());
        for (int k = degree() - 1; k >= 0; --k) {
            acc = acc * num;
            dpow = dpow * den;
            acc += dpow.scaled(c_[static_cast<size_t>(k)]);
        }
        return acc;
    }

    std::string str(const std::string& var = "z") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const K& v = c_[static_cast<size_t>(i)];
            if (k_is_zero(v)) continue;
            if (!out.empty()) out += " + ";
            out += "(" + FieldTraits<K>::str(v) + ")";
            if (i == 1) out += "*" + var;
            else if (i > 1) out += "*" + var + "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && k_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

using UniPolyQ = UniPoly<Rat>;
using UniPolyQi = UniPoly<GaussRat>;

// Plain monic Euclid; fine for small degrees and the reference oracle for the
// modular gcd in polygcd.hpp.
template <class K>
UniPoly<K> poly_gcd_euclid(UniPoly<K> a, UniPoly<K> b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
        if (!b.is_zero()) b = b.monic();
    }
    return a.is_zero() ? a : a.monic();
}

// Forward-declared fast gcd (modular for Q and Q(i)); implemented in polygcd.cpp.
UniPoly<Rat> poly_gcd(const UniPoly<Rat>& a, const UniPoly<Rat>& b);
UniPoly<GaussRat> poly_gcd(const UniPoly<GaussRat>& a, const UniPoly<GaussRat>& b);

// UniPoly<Rat> also serves as the coefficient ring for parametric flows
// (polynomials in the multiplier a1). Division there is the exact one above.
template <>
struct FieldTraits<UniPoly<Rat>> {
    static constexpr const char* name = "Q[a1]";
    static UniPoly<Rat> zero() { return UniPoly<Rat>(); }
    static UniPoly<Rat> one() { return UniPoly<Rat>::constant(Rat(1)); }
    static bool is_zero(const UniPoly<Rat>& x) { return x.is_zero(); }
    static UniPoly<Rat> from_rat(const Rat& x) {
        return x == 0 ? UniPoly<Rat>() : UniPoly<Rat>::constant(x);
    }
    static std::string str(const UniPoly<Rat>& x) { return x.str("a1"); }
};

}  // namespace isoflow

#endif
