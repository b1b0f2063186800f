#ifndef ISOFLOW_HYPERGEOM_HPP
#define ISOFLOW_HYPERGEOM_HPP

// Gauss 2F1: exact series, declarative pullback/covariance identities,
// and high-precision evaluation (unit disk plus the z = 1 Gauss point).

#include <string>
#include <vector>

#include "isoflow/bigfloat.hpp"
#include "isoflow/ratfun.hpp"
#include "isoflow/series.hpp"

namespace isoflow {

struct BadC : std::runtime_error {
    BadC() : std::runtime_error("2F1 parameter c is a nonpositive integer") {}
};
struct DivergentPoint : std::runtime_error {
    DivergentPoint() : std::runtime_error("2F1 evaluation outside the convergence region") {}
};
struct NonComposablePullback : std::runtime_error {
    NonComposablePullback()
        : std::runtime_error("pullback does not vanish at 0; cannot compose series") {}
};

struct F21Params {
    Rat a, b, c;

    void validate() const {
        if (c <= 0 && denominator(c) == 1) throw BadC();
    }
};

// exact coefficients by the term-ratio recurrence
TruncatedSeries<Rat> f21_series(const F21Params& p, int order);

template <class K>
TruncatedSeries<K> promote_series(const TruncatedSeries<Rat>& s) {
    std::vector<K> c;
    c.reserve(static_cast<size_t>(std::max(0, s.order() - s.valuation())));
    for (int k = s.valuation(); k < s.order(); ++k) c.push_back(k_from_rat<K>(s.at(k)));
    return TruncatedSeries<K>(s.valuation(), std::move(c), s.order());
}

// F(left; u(z)) = constant * prod_i base_i(z)^{e_i} * F(right; v(z)).
// Invariant: every base has constant term exactly 1 (scalar roots such as
// 16^{1/4} must be folded into `constant` by the caller).
template <class K>
struct PullbackIdentity {
    std::string name;
    F21Params left;
    RatFun<K> u;
    F21Params right;
    RatFun<K> v;
    std::vector<std::pair<RatFun<K>, Rat>> prefactors;
    K constant;

    void validate() const {
        left.validate();
        right.validate();
        for (const auto& [base, e] : prefactors) {
            (void)e;
            TruncatedSeries<K> s = base.series(1);
            if (s.valuation() != 0 || !(s.at(0) == FieldTraits<K>::one()))
                throw NonComposablePullback();
        }
    }
};

template <class K>
bool check_pullback_identity(const PullbackIdentity<K>& id, int order) {
    id.validate();
    int slack = order + 2;
    TruncatedSeries<K> us = id.u.series(slack);
    TruncatedSeries<K> vs = id.v.series(slack);
    if (us.valuation() < 1 || vs.valuation() < 1) throw NonComposablePullback();
    TruncatedSeries<K> lhs = promote_series<K>(f21_series(id.left, slack)).compose(us);
    TruncatedSeries<K> rhs = promote_series<K>(f21_series(id.right, slack)).compose(vs);
    rhs = rhs.scaled(id.constant);
    for (const auto& [base, e] : id.prefactors)
        rhs *= base.series(slack).pow_frac(e);
    return TruncatedSeries<K>::agree(lhs, rhs, order);
}

// identity corpus shipped under share/; see README for the record format
struct CorpusRecord {
    std::string name;
    std::string field;  // "Q" or "Qi"
    int order = 40;
    bool pass = false;
};
std::vector<CorpusRecord> run_identity_corpus(const std::string& path, int max_order = 0);

// direct summation inside the unit disk
BigFloat f21_value(const F21Params& p, const BigFloat& z, unsigned digits);

// z = 1 via the Gamma quotient (needs c - a - b > 0)
BigFloat gauss_at_1(const F21Params& p, unsigned digits);
// independent route: regularized tanh-sinh quadrature of the Euler integral
// (needs 0 < b and c - a - b > 0)
BigFloat gauss_at_1_quadrature(const F21Params& p, unsigned digits);

}  // namespace isoflow

#endif
