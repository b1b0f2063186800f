#ifndef ISOFLOW_RATIONAL_HPP
#define ISOFLOW_RATIONAL_HPP

// Exact scalar fields: Q (GMP-backed rationals) and Q(i).
//
// Rat is boost::multiprecision::mpq_rational, which keeps every value in
// canonical form (gcd(|num|,den)=1, den>0, zero is 0/1), so equality is
// structural. GaussRat layers i = sqrt(-1) on top, componentwise canonical.

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace isoflow {

// expression templates off: these types flow through heavily templated
// series/polynomial code where eager evaluation is the predictable choice
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

inline Rat rat(long n, long d = 1) {
    if (d == 0) throw std::domain_error("rat: zero denominator");
    if (d < 0) { n = -n; d = -d; }   // the two-arg mpq constructor wants d > 0
    return Rat(n, d);
}

inline BigInt numerator(const Rat& x) { return boost::multiprecision::numerator(x); }
inline BigInt denominator(const Rat& x) { return boost::multiprecision::denominator(x); }

inline std::string rat_to_string(const Rat& x) { return x.str(); }

inline Rat rat_ipow(const Rat& base, long e) {
    Rat r(1);
    for (long i = 0; i < (e >= 0 ? e : -e); ++i) r *= base;
    return e >= 0 ? r : Rat(1) / r;
}

// Accepts "p", "p/q" and optional leading sign; used by the JSON corpus too.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty");
    return Rat(s);
}

// ---------------------------------------------------------------------------
// Q(i)

struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long r) : re(r), im(0) {}                       // NOLINT(google-explicit-constructor)
    GaussRat(const Rat& r) : re(r), im(0) {}                 // NOLINT(google-explicit-constructor)
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return GaussRat(re, -im); }
    Rat norm() const { return re * re + im * im; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re + b.re, a.im + b.im);
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re - b.re, a.im - b.im);
    }
    GaussRat operator-() const { return GaussRat(-re, -im); }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        Rat n = b.norm();
        if (n == 0) throw std::domain_error("GaussRat: division by zero");
        return GaussRat((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
    }
    GaussRat& operator+=(const GaussRat& o) { *this = *this + o; return *this; }
    GaussRat& operator-=(const GaussRat& o) { *this = *this - o; return *this; }
    GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }
    GaussRat& operator/=(const GaussRat& o) { *this = *this / o; return *this; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

inline std::string to_string(const GaussRat& x) {
    if (x.im == 0) return x.re.str();
    return x.re.str() + (x.im > 0 ? "+" : "") + x.im.str() + "*i";
}

// ---------------------------------------------------------------------------
// Field traits used by the templated series / polynomial / operator layers.

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rat> {
    static constexpr const char* name = "Q";
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& x) { return x == 0; }
    static Rat from_rat(const Rat& x) { return x; }
    static std::string str(const Rat& x) { return x.str(); }
};

template <>
struct FieldTraits<GaussRat> {
    static constexpr const char* name = "Qi";
    static GaussRat zero() { return GaussRat(); }
    static GaussRat one() { return GaussRat(1); }
    static bool is_zero(const GaussRat& x) { return x.is_zero(); }
    static GaussRat from_rat(const Rat& x) { return GaussRat(x); }
    static std::string str(const GaussRat& x) { return to_string(x); }
};

template <class K>
inline K k_from_rat(const Rat& x) { return FieldTraits<K>::from_rat(x); }

template <class K>
inline bool k_is_zero(const K& x) { return FieldTraits<K>::is_zero(x); }

}  // namespace isoflow

#endif
