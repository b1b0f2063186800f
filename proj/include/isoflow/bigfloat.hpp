#ifndef ISOFLOW_BIGFLOAT_HPP
#define ISOFLOW_BIGFLOAT_HPP

// High-precision floating point on MPFR via Boost.Multiprecision, with
// explicit decimal-digit precision management. All entry points take a
// `digits` target and compute with guard digits internally; results are
// deterministic for a fixed precision.

#include <boost/multiprecision/mpfr.hpp>
#include <functional>
#include <stdexcept>
#include <string>

#include "isoflow/rational.hpp"

namespace isoflow {

using BigFloat = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

inline constexpr unsigned kGuardDigits = 15;
inline constexpr unsigned kMaxDigits = 2000;

struct PrecisionUnreachable : std::runtime_error {
    PrecisionUnreachable()
        : std::runtime_error("requested digits exceed the configured cap") {}
};

// RAII guard for the default working precision (numeric sections run on one
// thread; parallel suites each construct their own guard)
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

BigFloat bf_from_rat(const Rat& x, unsigned digits);

// complex arithmetic for the root finder
struct CBigFloat {
    BigFloat re;
    BigFloat im;

    CBigFloat() : re(0), im(0) {}
    CBigFloat(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    friend CBigFloat operator+(const CBigFloat& a, const CBigFloat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend CBigFloat operator-(const CBigFloat& a, const CBigFloat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend CBigFloat operator*(const CBigFloat& a, const CBigFloat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CBigFloat operator/(const CBigFloat& a, const CBigFloat& b) {
        BigFloat n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    BigFloat abs2() const { return re * re + im * im; }
};

BigFloat cabs(const CBigFloat& z);

// AGM-based constants (pi by Brent-Salamin, Gamma(1/4) from the lemniscatic AGM)
BigFloat agm(BigFloat a, BigFloat b, unsigned digits);
BigFloat pi_agm(unsigned digits);
BigFloat gamma_quarter(unsigned digits);          // Gamma(1/4)
BigFloat gamma_three_quarters(unsigned digits);   // Gamma(3/4) via reflection

struct EllipticConstants {
    BigFloat pi;
    BigFloat gamma34;
    BigFloat k1;  // pi^{3/2} / 2^{3/2} / Gamma(3/4)^2
};
EllipticConstants bigfloat_constants(unsigned digits);

// tanh-sinh quadrature of a regular integrand on [0, upper]
BigFloat tanh_sinh(const std::function<BigFloat(const BigFloat&)>& f,
                   const BigFloat& upper, unsigned digits);

}  // namespace isoflow

#endif
