// Polynomial gcd over Q via modular images (Brown's algorithm): reduce mod
// word-size primes, gcd in F_p[x], CRT-lift, verify by exact division. The
// verification step makes the result unconditional; primes only steer the
// search. Q(i) uses monic Euclid (the Gaussian inputs in this project stay
// small after the cross-multiplied equality checks take over).

#include "isoflow/unipoly.hpp"

#include <array>
#include <cstdint>

namespace isoflow {
namespace {

constexpr std::array<uint64_t, 40> kPrimes = {
    4611686018427387847ULL,
    4611686018427387817ULL,
    4611686018427387787ULL,
    4611686018427387761ULL,
    4611686018427387751ULL,
    4611686018427387737ULL,
    4611686018427387733ULL,
    4611686018427387709ULL,
    4611686018427387701ULL,
    4611686018427387631ULL,
    4611686018427387617ULL,
    4611686018427387587ULL,
    4611686018427387461ULL,
    4611686018427387421ULL,
    4611686018427387409ULL,
    4611686018427387329ULL,
    4611686018427387323ULL,
    4611686018427387301ULL,
    4611686018427387271ULL,
    4611686018427387241ULL,
    4611686018427387139ULL,
    4611686018427387131ULL,
    4611686018427387127ULL,
    4611686018427387113ULL,
    4611686018427387091ULL,
    4611686018427387073ULL,
    4611686018427386981ULL,
    4611686018427386923ULL,
    4611686018427386911ULL,
    4611686018427386903ULL,
    4611686018427386897ULL,
    4611686018427386887ULL,
    4611686018427386707ULL,
    4611686018427386663ULL,
    4611686018427386611ULL,
    4611686018427386551ULL,
    4611686018427386471ULL,
    4611686018427386389ULL,
    4611686018427386351ULL,
    4611686018427386329ULL};

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline uint64_t submod(uint64_t a, uint64_t b, uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}
inline uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

using ZpPoly = std::vector<uint64_t>;

void zp_trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly zp_gcd_monic(ZpPoly a, ZpPoly b, uint64_t p) {
    zp_trim(a);
    zp_trim(b);
    while (!b.empty()) {
        // a mod b in place
        uint64_t inv = invmod(b.back(), p);
        while (a.size() >= b.size()) {
            uint64_t f = mulmod(a.back(), inv, p);
            size_t shift = a.size() - b.size();
            if (f != 0) {
                for (size_t i = 0; i < b.size(); ++i)
                    a[shift + i] = submod(a[shift + i], mulmod(f, b[i], p), p);
            }
            a.pop_back();
            zp_trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (a.empty()) return a;
    uint64_t inv = invmod(a.back(), p);
    for (auto& v : a) v = mulmod(v, inv, p);
    return a;
}

uint64_t big_mod(const BigInt& v, uint64_t p) {
    // mpz residue (handles negatives)
    uint64_t r = mpz_fdiv_ui(v.backend().data(), p);
    return r;
}

// clear denominators and divide by integer content; sign normalized to
// positive leading coefficient
std::vector<BigInt> primitive_int(const UniPoly<Rat>& a) {
    BigInt l = 1;
    for (const auto& c : a.coeffs()) l = lcm(l, denominator(c));
    std::vector<BigInt> r;
    r.reserve(a.coeffs().size());
    BigInt content = 0;
    for (const auto& c : a.coeffs()) {
        BigInt v = numerator(c) * (l / denominator(c));
        content = gcd(content, v);
        r.push_back(std::move(v));
    }
    if (content != 0) {
        if (r.back() < 0) content = -content;
        for (auto& v : r) v /= content;
    }
    return r;
}

}  // namespace

UniPoly<Rat> poly_gcd(const UniPoly<Rat>& a, const UniPoly<Rat>& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0)
        return UniPoly<Rat>::constant(Rat(1));

    std::vector<BigInt> ai = primitive_int(a);
    std::vector<BigInt> bi = primitive_int(b);
    BigInt gamma = gcd(ai.back(), bi.back());

    int dmin = std::min(a.degree(), b.degree()) + 1;
    std::vector<BigInt> crt;      // scaled images lifted
    BigInt modulus = 1;
    std::vector<BigInt> last_lift;
    bool have_last = false;

    auto symmetric = [](const BigInt& v, const BigInt& m) {
        BigInt r = v % m;
        if (r < 0) r += m;
        if (2 * r > m) r -= m;
        return r;
    };

    for (uint64_t p : kPrimes) {
        if (big_mod(ai.back(), p) == 0 || big_mod(bi.back(), p) == 0) continue;
        ZpPoly ap(ai.size()), bp(bi.size());
        for (size_t i = 0; i < ai.size(); ++i) ap[i] = big_mod(ai[i], p);
        for (size_t i = 0; i < bi.size(); ++i) bp[i] = big_mod(bi[i], p);
        ZpPoly gp = zp_gcd_monic(std::move(ap), std::move(bp), p);
        int dg = static_cast<int>(gp.size()) - 1;
        if (dg == 0) return UniPoly<Rat>::constant(Rat(1));
        if (dg > dmin) continue;  // unlucky prime
        if (dg < dmin) {          // all previous primes were unlucky
            dmin = dg;
            crt.assign(gp.size(), BigInt(0));
            modulus = 1;
            have_last = false;
        }
        // scale so the image corresponds to the integer polynomial (gamma/lc(g)) * g
        uint64_t gm = big_mod(gamma, p);
        BigInt pp = BigInt(static_cast<unsigned long long>(p));
        // CRT combine coefficientwise
        BigInt minv;  // modulus^{-1} mod p
        {
            uint64_t mi = invmod(big_mod(modulus, p) % p, p);
            minv = BigInt(static_cast<unsigned long long>(mi));
        }
        for (size_t i = 0; i < gp.size(); ++i) {
            uint64_t target = mulmod(gp[i], gm, p);
            BigInt cur = crt[i] % pp;
            if (cur < 0) cur += pp;
            BigInt delta = (BigInt(static_cast<unsigned long long>(target)) - cur) % pp;
            if (delta < 0) delta += pp;
            crt[i] += modulus * ((delta * minv) % pp);
        }
        modulus *= pp;

        std::vector<BigInt> lift(crt.size());
        for (size_t i = 0; i < crt.size(); ++i) lift[i] = symmetric(crt[i], modulus);
        if (have_last && lift == last_lift) {
            // stabilized: strip content and verify by exact division
            BigInt content = 0;
            for (const auto& v : lift) content = gcd(content, v);
            if (content != 0) {
                if (lift.back() < 0) content = -content;
                std::vector<Rat> qc;
                qc.reserve(lift.size());
                for (const auto& v : lift) qc.emplace_back(Rat(v / content));
                UniPoly<Rat> cand{std::move(qc)};
                if (cand.divides(a) && cand.divides(b)) return cand.monic();
            }
        }
        last_lift = std::move(lift);
        have_last = true;
    }
    // prime table exhausted without a verified candidate; fall back
    return poly_gcd_euclid(a, b);
}

UniPoly<GaussRat> poly_gcd(const UniPoly<GaussRat>& a, const UniPoly<GaussRat>& b) {
    return poly_gcd_euclid(a, b);
}

}  // namespace isoflow
