#include "isoflow/bigfloat.hpp"

#include <cmath>

namespace isoflow {

PrecisionGuard::PrecisionGuard(unsigned digits) {
    if (digits > kMaxDigits) throw PrecisionUnreachable();
    saved_ = BigFloat::default_precision();
    BigFloat::default_precision(digits);
}

PrecisionGuard::~PrecisionGuard() { BigFloat::default_precision(saved_); }

BigFloat bf_from_rat(const Rat& x, unsigned digits) {
    PrecisionGuard g(digits);
    BigFloat n(numerator(x));
    BigFloat d(denominator(x));
    return n / d;
}

BigFloat cabs(const CBigFloat& z) { return sqrt(z.abs2()); }

BigFloat agm(BigFloat a, BigFloat b, unsigned digits) {
    PrecisionGuard g(digits + kGuardDigits);
    BigFloat eps = pow(BigFloat(10), -static_cast<int>(digits + kGuardDigits - 2));
    for (int it = 0; it < 200; ++it) {
        BigFloat an = (a + b) / 2;
        BigFloat bn = sqrt(a * b);
        if (abs(a - b) < eps * abs(an)) return an;
        a = an;
        b = bn;
    }
    return a;
}

BigFloat pi_agm(unsigned digits) {
    // Brent-Salamin
    PrecisionGuard g(digits + kGuardDigits);
    BigFloat a(1);
    BigFloat b = 1 / sqrt(BigFloat(2));
    BigFloat t(Rat(1, 4));
    BigFloat p(1);
    BigFloat eps = pow(BigFloat(10), -static_cast<int>(digits + kGuardDigits - 2));
    for (int it = 0; it < 200; ++it) {
        BigFloat an = (a + b) / 2;
        if (abs(a - b) < eps) break;
        BigFloat bn = sqrt(a * b);
        BigFloat d = a - an;
        t -= p * d * d;
        p *= 2;
        a = an;
        b = bn;
    }
    BigFloat s = a + b;
    return s * s / (4 * t);
}

BigFloat gamma_quarter(unsigned digits) {
    // Gamma(1/4) = (2 pi)^{3/4} / AGM(sqrt 2, 1)^{1/2}
    PrecisionGuard g(digits + kGuardDigits);
    BigFloat pi = pi_agm(digits + kGuardDigits);
    BigFloat m = agm(sqrt(BigFloat(2)), BigFloat(1), digits + kGuardDigits);
    return pow(2 * pi, BigFloat(Rat(3, 4))) / sqrt(m);
}

BigFloat gamma_three_quarters(unsigned digits) {
    PrecisionGuard g(digits + kGuardDigits);
    BigFloat pi = pi_agm(digits + kGuardDigits);
    return pi * sqrt(BigFloat(2)) / gamma_quarter(digits + kGuardDigits);
}

EllipticConstants bigfloat_constants(unsigned digits) {
    if (digits < 10) digits = 10;
    PrecisionGuard g(digits + kGuardDigits);
    EllipticConstants out;
    out.pi = pi_agm(digits);
    out.gamma34 = gamma_three_quarters(digits);
    out.k1 = pow(out.pi, BigFloat(Rat(3, 2))) /
             (pow(BigFloat(2), BigFloat(Rat(3, 2))) * out.gamma34 * out.gamma34);
    return out;
}

BigFloat tanh_sinh(const std::function<BigFloat(const BigFloat&)>& f,
                   const BigFloat& upper, unsigned digits) {
    // nodes x = (u/2)(1 + tanh((pi/2) sinh t)); integrand must be finite at
    // every generated node (callers regularize endpoint singularities first)
    PrecisionGuard g(digits + kGuardDigits);
    BigFloat pi = pi_agm(digits + kGuardDigits);
    BigFloat half_u = upper / 2;
    BigFloat eps = pow(BigFloat(10), -static_cast<int>(digits + 5));

    // t-range: weights decay like exp(-pi/2 exp(|t|)); solve for cutoff
    double tmax = std::log(2.0 / 3.141592653589793 *
                           (static_cast<double>(digits + 10) * std::log(10.0))) +
                  0.7;
    BigFloat result(0);
    BigFloat prev(0);
    int level = 0;
    BigFloat h(1);
    // level 0: coarse trapezoid over t in [-tmax, tmax], then halve h
    for (level = 0; level < 12; ++level) {
        BigFloat sum(0);
        long steps = static_cast<long>(std::ceil(tmax / static_cast<double>(h))) + 1;
        for (long k = -steps; k <= steps; ++k) {
            if (level > 0 && (k % 2 == 0)) continue;  // only new nodes
            BigFloat t = h * k;
            BigFloat s = sinh(t) * pi / 2;
            BigFloat ch = cosh(s);
            BigFloat w = (pi / 2) * cosh(t) / (ch * ch);  // dx/dt for x = tanh(s)
            if (w < eps) continue;
            BigFloat x = tanh(s);
            BigFloat node = half_u * (1 + x);
            sum += w * f(node);
        }
        if (level == 0) {
            result = sum * h;
        } else {
            result = result / 2 + sum * h;
        }
        if (level > 2 && abs(result - prev) < eps * (1 + abs(result))) break;
        prev = result;
        h /= 2;
    }
    return result * half_u;
}

}  // namespace isoflow
