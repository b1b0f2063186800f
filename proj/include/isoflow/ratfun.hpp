#ifndef ISOFLOW_RATFUN_HPP
#define ISOFLOW_RATFUN_HPP

// Exact univariate rational functions. Canonical form: numerator and
// denominator coprime, and the lowest-degree nonzero coefficient of the
// denominator normalized to 1 (so z/(2+z) prints as z over 1+z/2).

#include <stdexcept>
#include <string>
#include <utility>

#include "isoflow/series.hpp"
#include "isoflow/unipoly.hpp"

namespace isoflow {

struct ZeroDenominator : std::runtime_error {
    ZeroDenominator() : std::runtime_error("rational function with zero denominator") {}
};
struct DegenerateComposition : std::runtime_error {
    DegenerateComposition() : std::runtime_error("composition collapsed to 0/0") {}
};
struct DegreeCapExceeded : std::runtime_error {
    explicit DegreeCapExceeded(int deg)
        : std::runtime_error("composition degree " + std::to_string(deg) +
                             " exceeds the configured cap") {}
};

template <class K>
class RatFun {
public:
    RatFun() : num_(), den_(UniPoly<K>::constant(FieldTraits<K>::one())) {}

    RatFun(UniPoly<K> num, UniPoly<K> den) {
        if (den.is_zero()) throw ZeroDenominator();
        normalize(std::move(num), std::move(den));
    }

    static RatFun from_poly(const UniPoly<K>& p) {
        return RatFun(p, UniPoly<K>::constant(FieldTraits<K>::one()));
    }
    static RatFun constant(const K& k) { return from_poly(UniPoly<K>::constant(k)); }
    static RatFun x() { return from_poly(UniPoly<K>::x()); }

    const UniPoly<K>& num() const { return num_; }
    const UniPoly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    int degree() const { return std::max(num_.degree(), den_.degree()); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw ZeroDenominator();
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFun& operator+=(const RatFun& o) { *this = *this + o; return *this; }
    RatFun& operator-=(const RatFun& o) { *this = *this - o; return *this; }
    RatFun& operator*=(const RatFun& o) { *this = *this * o; return *this; }

    // canonical form makes this structural
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    // cross-multiplied equality (no reduction needed on the inputs)
    static bool cross_equal(const UniPoly<K>& n1, const UniPoly<K>& d1,
                            const UniPoly<K>& n2, const UniPoly<K>& d2) {
        return n1 * d2 == n2 * d1;
    }

    RatFun scaled(const K& k) const {
        RatFun r;
        r.num_ = num_.scaled(k);
        r.den_ = den_;
        return r;
    }

    RatFun derivative() const {
        return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    K eval(const K& x0) const {
        K d = den_.eval(x0);
        if (k_is_zero(d)) throw ZeroDenominator();
        return num_.eval(x0) / d;
    }

    // f o g, reduced; clears denominators projectively so poles are fine
    RatFun compose(const RatFun& g, int degree_cap = 0) const {
        auto [n, d] = compose_unreduced(g);
        if (n.is_zero() && d.is_zero()) throw DegenerateComposition();
        if (degree_cap > 0 && std::max(n.degree(), d.degree()) > degree_cap)
            throw DegreeCapExceeded(std::max(n.degree(), d.degree()));
        return RatFun(std::move(n), std::move(d));
    }

    // unreduced (num, den) of f o g; useful when only a cross-multiplied
    // comparison is needed and the gcd would be large
    std::pair<UniPoly<K>, UniPoly<K>> compose_unreduced(const RatFun& g) const {
        int m = std::max(num_.degree(), den_.degree());
        if (m < 0) return {UniPoly<K>(), UniPoly<K>::constant(FieldTraits<K>::one())};
        // pad both to degree m, then Horner in g = gn/gd with gd powers
        UniPoly<K> accn, accd_scale = UniPoly<K>::constant(FieldTraits<K>::one());
        UniPoly<K> nacc = UniPoly<K>::constant(num_.coeff(m));
        UniPoly<K> dacc = UniPoly<K>::constant(den_.coeff(m));
        UniPoly<K> dpow = UniPoly<K>::constant(FieldTraits<K>::one());
        for (int k = m - 1; k >= 0; --k) {
            nacc = nacc * g.num_;
            dacc = dacc * g.num_;
            dpow = dpow * g.den_;
            nacc += dpow.scaled(num_.coeff(k));
            dacc += dpow.scaled(den_.coeff(k));
        }
        return {std::move(nacc), std::move(dacc)};
    }

    // Laurent expansion at 0 with correct valuation
    TruncatedSeries<K> series(int order) const {
        if (num_.is_zero()) return TruncatedSeries<K>::zero(order);
        int vn = low_valuation(num_), vd = low_valuation(den_);
        // strip z^v from both so denominators become units
        UniPoly<K> n = shift_down(num_, vn);
        UniPoly<K> d = shift_down(den_, vd);
        int val = vn - vd;
        int rel = order - val;
        if (rel <= 0) return TruncatedSeries<K>::zero(order);
        TruncatedSeries<K> ns = TruncatedSeries<K>::from_poly(n, rel);
        TruncatedSeries<K> ds = TruncatedSeries<K>::from_poly(d, rel);
        TruncatedSeries<K> q = ns * ds.inverse();
        return q.shifted(val).truncated(order);
    }

    std::string str(const std::string& var = "z") const {
        return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
    }

private:
    static int low_valuation(const UniPoly<K>& p) {
        for (int i = 0; i <= p.degree(); ++i)
            if (!k_is_zero(p.coeff(i))) return i;
        return 0;
    }
    static UniPoly<K> shift_down(const UniPoly<K>& p, int v) {
        std::vector<K> c(p.coeffs().begin() + v, p.coeffs().end());
        return UniPoly<K>(std::move(c));
    }

    void normalize(UniPoly<K> num, UniPoly<K> den) {
        if (num.is_zero()) {
            num_ = UniPoly<K>();
            den_ = UniPoly<K>::constant(FieldTraits<K>::one());
            return;
        }
        UniPoly<K> g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = num / g;
            den = den / g;
        }
        int lv = low_valuation(den);
        K lead = den.coeff(lv);
        K inv = FieldTraits<K>::one() / lead;
        num_ = num.scaled(inv);
        den_ = den.scaled(inv);
    }

    UniPoly<K> num_;
    UniPoly<K> den_;
};

using RatFunQ = RatFun<Rat>;
using RatFunQi = RatFun<GaussRat>;

// rf_normalize per the module contract
template <class K>
RatFun<K> rf_normalize(const UniPoly<K>& n, const UniPoly<K>& d) {
    return RatFun<K>(n, d);
}

// convenience builders from integer coefficient lists (low degree first)
inline RatFunQ rfq(std::initializer_list<long> num, std::initializer_list<long> den) {
    return RatFunQ(UniPolyQ(num), UniPolyQ(den));
}

template <class K>
RatFun<K> promote(const RatFun<Rat>& f) {
    auto lift = [](const UniPoly<Rat>& p) {
        std::vector<K> c;
        c.reserve(p.coeffs().size());
        for (const auto& v : p.coeffs()) c.push_back(k_from_rat<K>(v));
        return UniPoly<K>(std::move(c));
    };
    return RatFun<K>(lift(f.num()), lift(f.den()));
}

}  // namespace isoflow

#endif
