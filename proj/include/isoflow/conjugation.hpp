#ifndef ISOFLOW_CONJUGATION_HPP
#define ISOFLOW_CONJUGATION_HPP

// The transcendental conjugation triple: Q(z) = z 2F1([1/2,1/4],[5/4];z)^4,
// its compositional inverse P, and the infinitesimal generator
// F(z) = z (1-z)^{1/2} 2F1([1/4,1/2],[5/4];z), with the nonlinear ODE and
// elliptic-sinus verifications attached to P.

#include <optional>
#include <string>
#include <vector>

#include "isoflow/bigfloat.hpp"
#include "isoflow/catalog.hpp"
#include "isoflow/series.hpp"

namespace isoflow {

struct ConjugacyTriple {
    TruncatedSeries<Rat> Q;
    TruncatedSeries<Rat> P;  // reversion of Q
    TruncatedSeries<Rat> F;
    int order = 0;
};

ConjugacyTriple build_triple(int order);

// the parametrization series on its own (used at high order by the
// singularity scan); identical to build_triple(order).P
TruncatedSeries<Rat> p_series(int order);

// P(a1 z) = R_{a1}(P(z)) for rational a1 (flow route)
bool flow_conjugacy_check(const Rat& a1, int order);
// same over Q(i), e.g. a1 = -7-24i against T
bool flow_conjugacy_check_gaussian(const GaussRat& a1, int order);
// the analytic inverse branch: S^{(1)}_{-1/4}(P(z)) = P(-z/4)
bool inverse_branch_conjugacy_check(int order);

// z P' = F(P), Q' F = Q, Q(-4z/(1-z)^2) = -4 Q, Q(R_81) = 81 Q
std::vector<NamedCheck> generator_identities(int order);

// residuals of the nonlinear ODEs satisfied by P: the order-one quartic,
// the Painleve-V-like second-order equation, the third-order equation,
// the elliptic-sinus pair, and the 1/P-invariance witness of the quartic
std::vector<NamedCheck> nonlinear_residuals(int order);

struct PainleveProbe {
    Rat eta;
    TruncatedSeries<Rat> candidate;
    bool solved = false;
};

struct NonSolvableOrder : std::runtime_error {
    int at_order;
    explicit NonSolvableOrder(int n)
        : std::runtime_error("Painleve-type recurrence not solvable at order " +
                             std::to_string(n)),
          at_order(n) {}
};

// analytic solution of  y'' - (3/(4y) + 1/(2(y-1))) y'^2 + (eta/z) y' = 0
// with y = 1 + z + ..., plus the P(z^{4(1-eta)}) substitution checks
PainleveProbe painleve_eta(const Rat& eta, int order);
std::vector<NamedCheck> painleve_checks(int order);

// numeric spot-check of the scaled Puiseux family member (mu, lambda) =
// (1/2, 1) in the second-order equation, at BigFloat precision
bool puiseux_scaled_numeric_check(unsigned digits);

// the elliptic-sinus series in u: S'' + 2 S^3 = 0, S(0) = 0, S'(0) = 1
TruncatedSeries<Rat> sn_series(int u_order);
// P(u^4) = S(u)^4 and the incomplete-elliptic-integral Taylor identity
std::vector<NamedCheck> sn_closed_form(int order);

}  // namespace isoflow

#endif
