#ifndef ISOFLOW_DIFFOP_HPP
#define ISOFLOW_DIFFOP_HPP

// Linear differential operators with rational-function coefficients,
// plus the transformations applied to them here: formal adjoint, pullback
// through a rational change of variable, and conjugation by a product of
// rational powers. Operators are stored un-normalized; covariance claims
// are projective, so comparisons go through equal_up_to_left_factor.

#include <stdexcept>
#include <utility>
#include <vector>

#include "isoflow/ratfun.hpp"
#include "isoflow/series.hpp"

namespace isoflow {

struct ConstantMap : std::runtime_error {
    ConstantMap() : std::runtime_error("pullback through a constant map") {}
};
struct IrrationalLogDerivative : std::runtime_error {
    IrrationalLogDerivative()
        : std::runtime_error("power conjugator has no rational log-derivative") {}
};

template <class K>
class LinDiffOp {
public:
    LinDiffOp() = default;
    explicit LinDiffOp(std::vector<RatFun<K>> coeffs) : c_(std::move(coeffs)) { trim(); }

    static LinDiffOp zero() { return LinDiffOp(); }
    static LinDiffOp identity() {
        return LinDiffOp({RatFun<K>::constant(FieldTraits<K>::one())});
    }
    static LinDiffOp d() {
        return LinDiffOp({RatFun<K>(), RatFun<K>::constant(FieldTraits<K>::one())});
    }
    // D + a
    static LinDiffOp d_plus(const RatFun<K>& a) {
        return LinDiffOp({a, RatFun<K>::constant(FieldTraits<K>::one())});
    }

    bool is_zero() const { return c_.empty(); }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const RatFun<K>& coeff(int k) const {
        static const RatFun<K> kZero{};
        if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
        return c_[static_cast<size_t>(k)];
    }
    const std::vector<RatFun<K>>& coeffs() const { return c_; }

    friend LinDiffOp operator+(const LinDiffOp& a, const LinDiffOp& b) {
        std::vector<RatFun<K>> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return LinDiffOp(std::move(r));
    }
    friend LinDiffOp operator-(const LinDiffOp& a, const LinDiffOp& b) {
        std::vector<RatFun<K>> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return LinDiffOp(std::move(r));
    }

    // operator composition: D^i . b = sum_l binom(i,l) b^{(l)} D^{i-l}
    friend LinDiffOp operator*(const LinDiffOp& a, const LinDiffOp& b) {
        if (a.is_zero() || b.is_zero()) return LinDiffOp();
        std::vector<RatFun<K>> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                RatFun<K> der = b.c_[j];
                Rat binom(1);
                for (size_t l = 0; l <= i; ++l) {
                    if (binom != 0)
                        r[i - l + j] += (a.c_[i] * der).scaled(k_from_rat<K>(binom));
                    if (l < i) {
                        der = der.derivative();
                        binom = binom * Rat(static_cast<long>(i - l)) / Rat(static_cast<long>(l + 1));
                    }
                }
            }
        }
        return LinDiffOp(std::move(r));
    }

    LinDiffOp left_mul(const RatFun<K>& f) const {
        std::vector<RatFun<K>> r = c_;
        for (auto& v : r) v = f * v;
        return LinDiffOp(std::move(r));
    }

    friend bool operator==(const LinDiffOp& a, const LinDiffOp& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LinDiffOp& a, const LinDiffOp& b) { return !(a == b); }

    // equality up to left multiplication by a rational function
    static bool equal_up_to_left_factor(const LinDiffOp& a, const LinDiffOp& b) {
        if (a.order() != b.order()) return false;
        if (a.is_zero()) return true;
        const RatFun<K>& la = a.c_.back();
        const RatFun<K>& lb = b.c_.back();
        for (int i = 0; i <= a.order(); ++i)
            if (a.coeff(i) * lb != b.coeff(i) * la) return false;
        return true;
    }

    // formal adjoint: sum (-D)^k . c_k
    LinDiffOp adjoint() const {
        if (is_zero()) return LinDiffOp();
        std::vector<RatFun<K>> r(c_.size());
        for (size_t k = 0; k < c_.size(); ++k) {
            RatFun<K> der = c_[k];
            Rat binom(1);
            Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);
            for (size_t j = 0; j <= k; ++j) {
                // contribution to D^{k-j}: (-1)^k binom(k,j) c_k^{(j)}
                r[k - j] += der.scaled(k_from_rat<K>(sign * binom));
                if (j < k) {
                    der = der.derivative();
                    binom = binom * Rat(static_cast<long>(k - j)) / Rat(static_cast<long>(j + 1));
                }
            }
        }
        return LinDiffOp(std::move(r));
    }

    // change of variable z -> R(z): coefficients compose with R and
    // D becomes C(z) D with C = 1/R'
    LinDiffOp pullback(const RatFun<K>& R) const {
        if (R.is_constant()) throw ConstantMap();
        RatFun<K> C = RatFun<K>::constant(FieldTraits<K>::one()) / R.derivative();
        LinDiffOp cd({RatFun<K>(), C});
        LinDiffOp pw = identity();
        LinDiffOp out;
        for (size_t k = 0; k < c_.size(); ++k) {
            if (!c_[k].is_zero()) out = out + pw.left_mul(c_[k].compose(R));
            if (k + 1 < c_.size()) pw = cd * pw;
        }
        return out;
    }

    // C^{-1} . L . C for C = prod base_i^{e_i}; only the log-derivative
    // Lambda = sum e_i base_i'/base_i enters, so the result stays rational
    LinDiffOp conjugate_by_log_derivative(const RatFun<K>& lambda) const {
        LinDiffOp shifted({lambda, RatFun<K>::constant(FieldTraits<K>::one())});  // D + Lambda
        LinDiffOp pw = identity();
        LinDiffOp out;
        for (size_t k = 0; k < c_.size(); ++k) {
            if (!c_[k].is_zero()) out = out + pw.left_mul(c_[k]);
            if (k + 1 < c_.size()) pw = shifted * pw;
        }
        return out;
    }

    // L(f) for a (Laurent) series f, to the attainable order
    TruncatedSeries<K> apply(const TruncatedSeries<K>& f, int series_order) const {
        TruncatedSeries<K> out = TruncatedSeries<K>::zero(series_order);
        TruncatedSeries<K> der = f;
        for (size_t k = 0; k < c_.size(); ++k) {
            if (!c_[k].is_zero())
                out += c_[k].series(series_order) * der;
            if (k + 1 < c_.size()) der = der.derivative();
        }
        return out;
    }

    // L(z^alpha g) = z^alpha * (returned series); uses
    // D(z^alpha g) = z^alpha (g' + alpha g / z)
    TruncatedSeries<K> apply_with_power(const Rat& alpha, const TruncatedSeries<K>& g,
                                        int series_order) const {
        TruncatedSeries<K> out = TruncatedSeries<K>::zero(series_order);
        TruncatedSeries<K> der = g;
        K ak = k_from_rat<K>(alpha);
        for (size_t k = 0; k < c_.size(); ++k) {
            if (!c_[k].is_zero())
                out += c_[k].series(series_order) * der;
            if (k + 1 < c_.size())
                der = der.derivative() + der.scaled(ak).shifted(-1);
        }
        return out;
    }

    std::string str() const {
        std::string out;
        for (int k = order(); k >= 0; --k) {
            if (coeff(k).is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "[" + coeff(k).str() + "]";
            if (k == 1) out += "*D";
            else if (k > 1) out += "*D^" + std::to_string(k);
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<RatFun<K>> c_;
};

using LinDiffOpQ = LinDiffOp<Rat>;

// list of (base, exponent) pairs standing for prod base_i^{e_i}
template <class K>
struct PowerConjugator {
    std::vector<std::pair<RatFun<K>, Rat>> factors;

    RatFun<K> log_derivative() const {
        RatFun<K> lam;
        for (const auto& [base, e] : factors) {
            if (base.is_zero()) throw IrrationalLogDerivative();
            lam += (base.derivative() / base).scaled(k_from_rat<K>(e));
        }
        return lam;
    }
    PowerConjugator inverse() const {
        PowerConjugator r = *this;
        for (auto& [base, e] : r.factors) e = -e;
        return r;
    }
};

template <class K>
LinDiffOp<K> op_conjugate_by_power(const LinDiffOp<K>& L, const PowerConjugator<K>& C) {
    return L.conjugate_by_log_derivative(C.log_derivative());
}

// Omega = (D + A) . D for the covariance systems
template <class K>
LinDiffOp<K> omega_of(const RatFun<K>& A) {
    return LinDiffOp<K>::d_plus(A) * LinDiffOp<K>::d();
}

// Solve (D + A) D y = 0 with y = z^alpha v(z), v(0) = 1:
//   y' = z^{-s0} u(z) with s0 the residue of A at 0, u' = -(A - s0/z) u.
// Returns {alpha, v}. Requires s0 not a nonpositive... alpha = 1 - s0 must be
// nonzero for the antiderivative; callers use systems where it is.
template <class K>
std::pair<Rat, TruncatedSeries<K>> omega_kernel_power_solution(const RatFun<K>& A,
                                                               const Rat& s0, int order) {
    // w = -(A - s0/z), regular at 0
    RatFun<K> w = -(A - RatFun<K>(UniPoly<K>::constant(k_from_rat<K>(s0)), UniPoly<K>::x()));
    TruncatedSeries<K> ws = w.series(order + 1);
    // u' = w u, u(0) = 1
    std::vector<K> u(static_cast<size_t>(order) + 1, FieldTraits<K>::zero());
    u[0] = FieldTraits<K>::one();
    for (int n = 1; n <= order; ++n) {
        K acc = FieldTraits<K>::zero();
        for (int j = 0; j < n; ++j) acc += ws.at(j) * u[static_cast<size_t>(n - 1 - j)];
        u[static_cast<size_t>(n)] = acc / k_from_rat<K>(Rat(n));
    }
    // y = int z^{-s0} u dz = z^{1-s0} * v, v_k = u_k / (1 - s0 + k)
    Rat alpha = Rat(1) - s0;
    std::vector<K> v(u.size());
    for (size_t k = 0; k < u.size(); ++k) {
        Rat denom = alpha + Rat(static_cast<long>(k));
        if (denom == 0) throw std::domain_error("integer resonance in power solution");
        v[k] = u[k] / k_from_rat<K>(denom);
    }
    return {alpha, TruncatedSeries<K>(0, std::move(v), order + 1)};
}

// the symmetric-power check: prod_{k=N..1}(D + k A) . D annihilates y^j,
// j = 0..N, for y the z^alpha-type kernel solution of (D + A) D
template <class K>
bool sympow_factored_check(const RatFun<K>& A, const Rat& s0, int N, int order) {
    LinDiffOp<K> P = LinDiffOp<K>::d();
    for (int k = 1; k <= N; ++k)
        P = LinDiffOp<K>::d_plus(A.scaled(k_from_rat<K>(Rat(k)))) * P;
    auto [alpha, v] = omega_kernel_power_solution(A, s0, order + N + 2);
    for (int j = 0; j <= N; ++j) {
        TruncatedSeries<K> vj = TruncatedSeries<K>::one(order + N + 2);
        for (int t = 0; t < j; ++t) vj *= v;
        TruncatedSeries<K> res = P.apply_with_power(alpha * Rat(j), vj, order);
        if (!res.truncated(order - N - 1).is_zero()) return false;
    }
    return true;
}

}  // namespace isoflow

#endif
