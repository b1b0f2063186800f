#ifndef ISOFLOW_ROTABAXTER_HPP
#define ISOFLOW_ROTABAXTER_HPP

// The covariance functional equation
//     R'(z)^2 A(R(z)) = R'(z) A(z) + R''(z)
// for factored operators (D + A) D: exact checking for rational R, and the
// order-by-order one-parameter flow of formal solutions R_{a1}.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "isoflow/ratfun.hpp"
#include "isoflow/series.hpp"

namespace isoflow {

struct ResonantParameter : std::runtime_error {
    int at_order;
    explicit ResonantParameter(int n)
        : std::runtime_error("flow solve hit a vanishing linear coefficient at order " +
                             std::to_string(n)),
          at_order(n) {}
};

// A together with its optional log-derivative witness A = (1/N) a'/a
template <class K>
struct CovariantSystem {
    std::string name;
    RatFun<K> A;
    std::optional<std::pair<RatFun<K>, long>> witness;

    bool witness_consistent() const {
        if (!witness) return true;
        const auto& [a, n] = *witness;
        RatFun<K> lhs = a.derivative() / a;
        return A.scaled(k_from_rat<K>(Rat(n))) == lhs;
    }
};

// ---------------------------------------------------------------------------
// exact check, fraction-free (A = p/q, R = n/d; no gcds on the big products)

template <class K>
bool mad_check(const RatFun<K>& A, const RatFun<K>& R) {
    if (R.is_constant()) return false;
    const UniPoly<K>&p = A.num(), &q = A.den(), &n = R.num(), &d = R.den();
    int dp = p.degree(), dq = q.degree();
    UniPoly<K> n1 = n.derivative(), d1 = d.derivative();
    UniPoly<K> w = n1 * d - n * d1;                      // R' = w / d^2
    UniPoly<K> n2 = n1.derivative(), d2 = d1.derivative();
    UniPoly<K> v = (n2 * d - n * d2) * d - (d1 * w).scaled(k_from_rat<K>(Rat(2)));
    UniPoly<K> phat = p.compose_scaled(n, d);            // p(R) d^dp
    UniPoly<K> qhat = q.compose_scaled(n, d);            // q(R) d^dq
    for (int i = 0; i < dq - dp; ++i) phat = phat * d;   // clear to d^dq
    // residual * d^4 q(R) q(z) d^dq:
    UniPoly<K> t1 = w * w * phat * q;
    UniPoly<K> t2 = w * p * d * d * qhat;
    UniPoly<K> t3 = v * d * qhat * q;
    return (t1 - t2 - t3).is_zero();
}

// residual of the functional equation on a truncated series R (exact to the
// attainable order); used to validate flow solutions
template <class K>
TruncatedSeries<K> mad_series_residual(const RatFun<K>& A, const TruncatedSeries<K>& R,
                                       int order) {
    TruncatedSeries<K> ps = TruncatedSeries<K>::from_poly(A.num(), order + 2);
    TruncatedSeries<K> qs = TruncatedSeries<K>::from_poly(A.den(), order + 2);
    auto comp = [&](const UniPoly<K>& poly) {
        TruncatedSeries<K> acc = TruncatedSeries<K>::zero(order + 2);
        for (int k = poly.degree(); k >= 0; --k)
            acc = acc * R + TruncatedSeries<K>::constant(poly.coeff(k), order + 2);
        return acc;
    };
    TruncatedSeries<K> rp = R.derivative();
    TruncatedSeries<K> rpp = rp.derivative();
    TruncatedSeries<K> pR = comp(A.num());
    TruncatedSeries<K> qR = comp(A.den());
    return ((rp * rp) * pR * qs - rp * ps * qR - rpp * qs * qR).truncated(order);
}

// ---------------------------------------------------------------------------
// order-by-order flow solver

template <class K>
struct FlowSeries {
    K a1;
    TruncatedSeries<K> series;
};

namespace detail {

// one step of the solver: given the partial sum through z^{n-1}, return the
// coefficient of z^n. Generic in the coefficient ring (field or Q[a1]),
// which is why A enters as the raw pair (p, q) rather than a RatFun.
template <class K>
K flow_next_coefficient(const UniPoly<K>& p, const UniPoly<K>& q,
                        const TruncatedSeries<K>& partial, int n) {
    int w = n + 3;
    auto comp = [&](const UniPoly<K>& poly, const TruncatedSeries<K>& g) {
        TruncatedSeries<K> acc = TruncatedSeries<K>::zero(w);
        for (int k = poly.degree(); k >= 0; --k)
            acc = acc * g + TruncatedSeries<K>::constant(poly.coeff(k), w);
        return acc;
    };
    TruncatedSeries<K> R = partial.truncated(w);
    TruncatedSeries<K> ps = TruncatedSeries<K>::from_poly(p, w);
    TruncatedSeries<K> qs = TruncatedSeries<K>::from_poly(q, w);
    TruncatedSeries<K> rp = R.derivative();
    TruncatedSeries<K> rpp = rp.derivative();
    TruncatedSeries<K> pR = comp(p, R);
    TruncatedSeries<K> qR = comp(q, R);
    TruncatedSeries<K> e0 = (rp * rp) * pR * qs - rp * ps * qR - rpp * qs * qR;

    // directional derivative along h = z^n:
    //   2 R' h' p(R) q + R'^2 h p'(R) q - h' p q(R) - R' p h q'(R)
    //   - h'' q q(R) - R'' q h q'(R)
    TruncatedSeries<K> h = TruncatedSeries<K>(n, {FieldTraits<K>::one()}, w);
    TruncatedSeries<K> hp = h.derivative();
    TruncatedSeries<K> hpp = hp.derivative();
    TruncatedSeries<K> ppR = comp(p.derivative(), R);
    TruncatedSeries<K> qpR = comp(q.derivative(), R);
    TruncatedSeries<K> dE = rp * hp * pR * qs;
    dE += dE;  // the factor 2
    dE += (rp * rp) * h * ppR * qs;
    dE -= hp * ps * qR;
    dE -= rp * ps * h * qpR;
    dE -= hpp * qs * qR;
    dE -= rpp * qs * h * qpR;

    // locate the first order where h enters
    int m0 = -1;
    for (int k = std::min(dE.valuation(), e0.valuation()); k < w - 1; ++k) {
        if (!k_is_zero(dE.at(k))) {
            m0 = k;
            break;
        }
        if (!k_is_zero(e0.at(k)))
            throw std::logic_error("flow residual nonzero below the linear order");
    }
    if (m0 < 0) throw ResonantParameter(n);
    K lambda = dE.at(m0);
    if (k_is_zero(lambda)) throw ResonantParameter(n);
    return -(e0.at(m0)) / lambda;
}

template <class K>
TruncatedSeries<K> flow_loop(const UniPoly<K>& p, const UniPoly<K>& q, const K& a1,
                             int order) {
    std::vector<K> coeffs{a1};
    TruncatedSeries<K> partial(1, {a1}, order);
    for (int n = 2; n < order; ++n) {
        K an = flow_next_coefficient(p, q, partial, n);
        coeffs.push_back(an);
        partial = TruncatedSeries<K>(1, coeffs, order);
    }
    return partial;
}

}  // namespace detail

// unique analytic-at-0 solution with R'(0) = a1
template <class K>
FlowSeries<K> flow_solve(const CovariantSystem<K>& sys, const K& a1, int order) {
    if (k_is_zero(a1)) {
        // a1 = 0 is the absorbing element R_0 = 0
        return {a1, TruncatedSeries<K>::zero(order)};
    }
    return {a1, detail::flow_loop(sys.A.num(), sys.A.den(), a1, order)};
}

// coefficients as polynomials in the symbol a1
struct ParametricFlow {
    std::string system;
    std::vector<UniPoly<Rat>> coeffs;  // index n >= 1 at position n-1

    TruncatedSeries<Rat> specialize(const Rat& a1, int order) const;
    // infinitesimal generator F = dR_{a1}/da1 at a1 = 1
    TruncatedSeries<Rat> generator(int order) const;
};

ParametricFlow flow_solve_parametric(const CovariantSystem<Rat>& sys, int order);
// reference path solving directly over Q[a1] (slow at higher order)
ParametricFlow flow_solve_parametric_direct(const CovariantSystem<Rat>& sys, int order);

template <class K>
bool flow_commutes(const CovariantSystem<K>& sys, const K& a1, const K& b1, int order) {
    FlowSeries<K> ra = flow_solve(sys, a1, order);
    FlowSeries<K> rb = flow_solve(sys, b1, order);
    FlowSeries<K> rab = flow_solve(sys, a1 * b1, order);
    TruncatedSeries<K> ab = ra.series.compose(rb.series);
    TruncatedSeries<K> ba = rb.series.compose(ra.series);
    return TruncatedSeries<K>::agree(ab, ba, order) &&
           TruncatedSeries<K>::agree(ab, rab.series, order);
}

// R'(z) F(z) = F(R(z)) for R with R(0) = 0
template <class K>
bool condcompo_check(const TruncatedSeries<K>& F, const RatFun<K>& R, int order) {
    TruncatedSeries<K> rs = R.series(order + 1);
    if (rs.valuation() < 1) return false;
    TruncatedSeries<K> lhs = rs.derivative() * F;
    TruncatedSeries<K> rhs = F.compose(rs);
    return TruncatedSeries<K>::agree(lhs, rhs, order);
}

// analytic solution of Delta(z) = (1+z)/(1-z) * Delta(-4z/(1-z)^2), Delta(0)=1;
// also reports whether the order-by-order linear system stayed uniquely
// solvable (it does: the order-n coefficient is 1 - (-4)^n)
TruncatedSeries<Rat> delta_solve(int order, bool* unique_through = nullptr);

// zeros of the flow-multiplier resultant: the numerator of 5 R - 3 divides
// the numerator of 5^5 a(z) R'(z)^4 - 4*27*lambda, a(z) = z^3 (1-z)^2
template <class K>
bool multiplier_check(const RatFun<K>& R, const K& lambda) {
    const UniPoly<K>&n = R.num(), &d = R.den();
    UniPoly<K> w = n.derivative() * d - n * d.derivative();
    UniPoly<K> w2 = w * w;
    UniPoly<K> w4 = w2 * w2;
    UniPoly<K> d2 = d * d, d4 = d2 * d2, d8 = d4 * d4;
    UniPoly<K> az{0, 0, 0, 1, -2, 1};  // z^3 (1-z)^2
    UniPoly<K> lhs = (az * w4).scaled(k_from_rat<K>(Rat(3125))) - d8.scaled(lambda * k_from_rat<K>(Rat(108)));
    UniPoly<K> target = n.scaled(k_from_rat<K>(Rat(5))) - d.scaled(k_from_rat<K>(Rat(3)));
    return target.divides(lhs);
}

// analytic-at-0 compositional inverse of R (R(0)=0, R'(0) invertible)
template <class K>
TruncatedSeries<K> inverse_branch(const RatFun<K>& R, int order) {
    TruncatedSeries<K> s = R.series(order);
    if (s.valuation() != 1) throw NotReversible();
    return s.reverse();
}

// named presets: "main", "sixth", "third", "arctanh", "genus2", "N7", "N11",
// plus "gauss(a,b,c=1+a)" / "gauss(a,b,c=1+b)" with rational a, b
CovariantSystem<Rat> system_by_name(const std::string& name);
CovariantSystem<Rat> gauss_system_c1pa(const Rat& a, const Rat& b);
CovariantSystem<Rat> gauss_system_c1pb(const Rat& a, const Rat& b);
std::vector<std::string> system_preset_names();

}  // namespace isoflow

#endif
