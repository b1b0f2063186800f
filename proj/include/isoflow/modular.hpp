#ifndef ISOFLOW_MODULAR_HPP
#define ISOFLOW_MODULAR_HPP

// The fundamental modular curve for the period-doubling isogeny, its
// Hauptmodul parametrization, the Atkin-Lehner involution, and the
// weight-one modular form operators alpha and beta.

#include <vector>

#include "isoflow/catalog.hpp"
#include "isoflow/diffop.hpp"
#include "isoflow/multipoly.hpp"
#include "isoflow/ratfun.hpp"

namespace isoflow {

struct ModularCurve {
    MultiPolyQ phi;     // in (u, v)
    MultiPolyQ j_form;  // the same curve in (j, j')
};

struct HauptmodulParam {
    RatFunQ u;    // 1728 z / (z+16)^3
    RatFunQ v;    // 1728 z^2 / (z+256)^3
    RatFunQ j_of_k;       // 256 (1-k^2+k^4)^3 / (k^4 (1-k^2)^2), in s with k = s^2
    RatFunQ j_of_kl;      // printed j(k_L) in s with k = s^2
    RatFunQ landen_in_s;  // k_L = 2s/(1+s^2)
};

const ModularCurve& modular_curve();
const HauptmodulParam& hauptmodul_param();

std::vector<NamedCheck> curve_checks();
std::vector<NamedCheck> atkin_lehner();
std::vector<NamedCheck> alphabeta(int order = 60);
std::vector<NamedCheck> cov_identity(int order = 50);

LinDiffOpQ alpha_operator();
LinDiffOpQ beta_operator();

}  // namespace isoflow

#endif
