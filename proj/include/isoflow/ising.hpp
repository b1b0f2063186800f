#ifndef ISOFLOW_ISING_HPP
#define ISOFLOW_ISING_HPP

// 1-D Ising decimation maps in the Boltzmann variables (x, z) = (e^{4K}, e^{2H}),
// their commutation and zero-field reduction, the partition-function product
// identities, and the susceptibility curve reduction.

#include <string>
#include <vector>

#include "isoflow/catalog.hpp"
#include "isoflow/multipoly.hpp"
#include "isoflow/ratfun.hpp"

namespace isoflow {

// bivariate rational function in (x, z); reduction strips per-variable
// content and runs a primitive Euclid in x over Q(z)
struct BiRat {
    MultiPolyQ num;
    MultiPolyQ den;

    BiRat() : den(MultiPolyQ::constant(Rat(1))) {}
    BiRat(MultiPolyQ n, MultiPolyQ d, bool reduce_now = true);

    friend BiRat operator+(const BiRat& a, const BiRat& b) {
        return BiRat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend BiRat operator*(const BiRat& a, const BiRat& b) {
        return BiRat(a.num * b.num, a.den * b.den);
    }
    BiRat scaled(const Rat& c) const { return BiRat(num.scaled(c), den, false); }

    static bool cross_equal(const BiRat& a, const BiRat& b) {
        return a.num * b.den == b.num * a.den;
    }
};

MultiPolyQ bipoly_gcd(const MultiPolyQ& a, const MultiPolyQ& b);

struct IsingMap {
    std::string label;
    long N = 0;
    BiRat x_comp;
    BiRat z_comp;
};

IsingMap ising_T2();
IsingMap ising_T3();
// reduce=false keeps components unreduced (for cross-multiplied equality)
IsingMap ising_compose(const IsingMap& f, const IsingMap& g, bool reduce = true);
bool ising_equal(const IsingMap& a, const IsingMap& b);

std::vector<NamedCheck> ising_maps_verify(int degree_cap = 400);
std::vector<NamedCheck> product_identities(int order = 64);
std::vector<NamedCheck> chi2_reduction();

}  // namespace isoflow

#endif
