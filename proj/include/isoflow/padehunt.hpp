#ifndef ISOFLOW_PADEHUNT_HPP
#define ISOFLOW_PADEHUNT_HPP

// Exact Pade approximation, rational reconstruction of flow series, and the
// numeric singularity analysis of the parametrization series.

#include <optional>
#include <utility>
#include <vector>

#include "isoflow/bigfloat.hpp"
#include "isoflow/ratfun.hpp"
#include "isoflow/rotabaxter.hpp"

namespace isoflow {

struct InsufficientOrder : std::runtime_error {
    InsufficientOrder() : std::runtime_error("series order too small for the requested Pade") {}
};

struct PadeApproximant {
    int m = 0;
    int n = 0;
    RatFunQ value;
    int defect = 0;  // degree deficiency min(m - deg num, n - deg den)
};

// exact (m, n) Pade of an ordinary series via the extended Euclidean scheme;
// denominator normalized so its lowest nonzero coefficient is 1
PadeApproximant pade(const TruncatedSeries<Rat>& f, int m, int n);

// Pade-based rational reconstruction: accepted only when the candidate
// matches the series to its full order (no functional-equation gate)
std::optional<RatFunQ> series_hunt(const TruncatedSeries<Rat>& f, int maxdeg);

// reconstruction of a flow member: candidate must match the full series and
// pass the functional equation exactly
std::optional<RatFunQ> rational_hunt(const CovariantSystem<Rat>& sys, const Rat& a1,
                                     int maxdeg, int order);

struct LatticePoint {
    long m1 = 0, m2 = 0;
    BigInt x, y;
    bool is_pole = false;  // poles for odd m1 + m2, zeros for even
};

LatticePoint lattice_predict(long m1, long m2);
// membership in the genus-zero curve indexed by M = m^4
bool lattice_curve_member(const LatticePoint& pt, const BigInt& M);

struct SingularityEstimate {
    CBigFloat location;
    BigFloat modulus;
    int cluster_size = 0;
    std::optional<std::pair<long, long>> lattice_match;  // (m1, m2) of a pole point
};

// numeric roots of high-order Pade denominators, clustered and kept only
// when stable across three (m, n) windows
std::vector<SingularityEstimate> singularity_scan(const TruncatedSeries<Rat>& f,
                                                  unsigned digits);

struct ZsResult {
    BigFloat value;             // the Gamma route
    BigFloat route_gamma;       // -(1/16) pi^6 / Gamma(3/4)^8
    BigFloat route_quadrature;  // -4 (2F1([1/4,1/2],[5/4];1) by quadrature)^4
};
ZsResult zs_constant(unsigned digits);

// crude radius estimate from the tail coefficients (diagnostics only)
BigFloat radius_estimate(const TruncatedSeries<Rat>& f, unsigned digits);

// Durand-Kerner roots of an exact rational polynomial (monic internally)
std::vector<CBigFloat> poly_roots(const UniPolyQ& p, unsigned digits);

}  // namespace isoflow

#endif
