#include "isoflow/padehunt.hpp"

#include <algorithm>

#include "isoflow/hypergeom.hpp"

namespace isoflow {

PadeApproximant pade(const TruncatedSeries<Rat>& f, int m, int n) {
    if (f.valuation() < 0 || f.order() < m + n + 1) throw InsufficientOrder();
    // extended Euclid on (z^{m+n+1}, truncated f); stop once the remainder
    // degree drops to m: remainder/cofactor is the Pade pair
    std::vector<Rat> fc;
    fc.reserve(static_cast<size_t>(m + n + 1));
    for (int k = 0; k <= m + n; ++k) fc.push_back(f.at(k));
    UniPolyQ r_prev = UniPolyQ::monomial(Rat(1), m + n + 1);
    UniPolyQ r_cur(std::move(fc));
    UniPolyQ v_prev;  // cofactors of the second argument
    UniPolyQ v_cur = UniPolyQ::constant(Rat(1));
    while (!r_cur.is_zero() && r_cur.degree() > m) {
        auto [q, rem] = r_prev.divmod(r_cur);
        UniPolyQ v_next = v_prev - q * v_cur;
        r_prev = std::move(r_cur);
        r_cur = std::move(rem);
        v_prev = std::move(v_cur);
        v_cur = std::move(v_next);
        if (!r_cur.is_zero()) {  // keep coefficient growth in check
            Rat lead = r_cur.leading();
            r_cur = r_cur.scaled(Rat(1) / lead);
            v_cur = v_cur.scaled(Rat(1) / lead);
        }
    }
    if (v_cur.is_zero()) throw InsufficientOrder();
    PadeApproximant out;
    out.m = m;
    out.n = n;
    out.value = RatFunQ(r_cur, v_cur);
    out.defect = std::min(m - out.value.num().degree(), n - out.value.den().degree());
    return out;
}

std::optional<RatFunQ> series_hunt(const TruncatedSeries<Rat>& f, int maxdeg) {
    int order = f.order();
    for (int d = 0; d <= maxdeg; ++d) {
        for (int n = std::max(0, d - 1); n <= d; ++n) {
            int m = d;
            if (m + n + 1 > order) continue;
            PadeApproximant p;
            try {
                p = pade(f, m, n);
            } catch (const InsufficientOrder&) {
                continue;
            }
            if (p.value.den().coeff(0) == 0 && f.valuation() >= 0 && f.at(0) != 0) continue;
            if (TruncatedSeries<Rat>::agree(p.value.series(order), f, order))
                return p.value;
        }
    }
    return std::nullopt;
}

std::optional<RatFunQ> rational_hunt(const CovariantSystem<Rat>& sys, const Rat& a1,
                                     int maxdeg, int order) {
    if (order < 2 * maxdeg + 8) order = 2 * maxdeg + 8;
    FlowSeries<Rat> flow = flow_solve(sys, a1, order);
    for (int d = 1; d <= maxdeg; ++d) {
        // flow members have numerator degree one above the denominator's
        for (int n : {d - 1, d}) {
            int m = d;
            if (n < 0 || m + n + 1 > order) continue;
            PadeApproximant p;
            try {
                p = pade(flow.series, m, n);
            } catch (const InsufficientOrder&) {
                continue;
            }
            const RatFunQ& cand = p.value;
            if (cand.is_zero()) continue;
            if (!TruncatedSeries<Rat>::agree(cand.series(order), flow.series, order)) continue;
            if (!mad_check(sys.A, cand)) continue;  // sound: never accept on series alone
            return cand;
        }
    }
    return std::nullopt;
}

LatticePoint lattice_predict(long m1, long m2) {
    LatticePoint p;
    p.m1 = m1;
    p.m2 = m2;
    BigInt a(m1), b(m2);
    p.x = (a * a - 2 * a * b - b * b) * (a * a + 2 * a * b - b * b);
    p.y = 4 * a * b * (b - a) * (b + a);
    p.is_pole = ((m1 + m2) % 2 + 2) % 2 == 1;
    return p;
}

bool lattice_curve_member(const LatticePoint& pt, const BigInt& M) {
    const BigInt &x = pt.x, &y = pt.y;
    BigInt m2 = M * M;
    BigInt lhs = BigInt(4096) * m2 * m2 - BigInt(2048) * x * M * m2 -
                 BigInt(128) * (17 * y * y + 14 * x * x) * m2 -
                 BigInt(32) * x * (8 * x * x + 7 * y * y) * M + y * y * y * y;
    return lhs == 0;
}

std::vector<CBigFloat> poly_roots(const UniPolyQ& p, unsigned digits) {
    PrecisionGuard g(digits + kGuardDigits);
    int low = 0;
    while (low <= p.degree() && p.coeff(low) == 0) ++low;  // roots at the origin
    int d = p.degree() - low;
    std::vector<CBigFloat> out(static_cast<size_t>(low), CBigFloat{BigFloat(0), BigFloat(0)});
    if (d <= 0) return out;
    // Durand-Kerner on the raw (non-monic) coefficients; the exact Pade
    // denominators are badly scaled, so never normalize by the leading term
    std::vector<CBigFloat> c(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k)
        c[static_cast<size_t>(k)] = {bf_from_rat(p.coeff(low + k), digits + kGuardDigits),
                                     BigFloat(0)};
    // start circle at the geometric mean of the root moduli
    BigFloat r0 = pow(cabs(c.front()) / cabs(c.back()), BigFloat(1) / d);
    if (r0 <= 0 || isnan(r0)) r0 = 1;
    std::vector<CBigFloat> r(static_cast<size_t>(d));
    CBigFloat seed{BigFloat(Rat(2, 5)), BigFloat(Rat(9, 10))};
    CBigFloat acc{BigFloat(Rat(7, 8)), BigFloat(Rat(1, 5))};
    for (int i = 0; i < d; ++i) {
        acc = acc * seed;
        BigFloat m = cabs(acc);
        r[static_cast<size_t>(i)] = {acc.re * r0 / m, acc.im * r0 / m};
    }
    auto eval = [&](const CBigFloat& x) {
        CBigFloat v = c.back();
        for (int k = d - 1; k >= 0; --k) v = v * x + c[static_cast<size_t>(k)];
        return v;
    };
    const CBigFloat& lead = c.back();
    BigFloat eps = pow(BigFloat(10), -static_cast<int>(digits));
    for (int it = 0; it < 2000; ++it) {
        BigFloat worst(0);
        for (int i = 0; i < d; ++i) {
            CBigFloat denom = lead;
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                denom = denom * (r[static_cast<size_t>(i)] - r[static_cast<size_t>(j)]);
            }
            CBigFloat delta = eval(r[static_cast<size_t>(i)]) / denom;
            r[static_cast<size_t>(i)] = r[static_cast<size_t>(i)] - delta;
            BigFloat rel = cabs(delta) / (1 + cabs(r[static_cast<size_t>(i)]));
            worst = std::max(worst, rel);
        }
        if (worst < eps) break;
    }
    out.insert(out.end(), r.begin(), r.end());
    return out;
}

namespace {

struct Cluster {
    CBigFloat centroid;
    int size = 0;
};

std::vector<Cluster> cluster_roots(const std::vector<CBigFloat>& roots, const BigFloat& rel_tol) {
    std::vector<Cluster> out;
    for (const auto& r : roots) {
        bool placed = false;
        for (auto& c : out) {
            BigFloat d = cabs(CBigFloat{r.re - c.centroid.re, r.im - c.centroid.im});
            if (d < rel_tol * (1 + cabs(c.centroid))) {
                // running mean
                c.centroid.re = (c.centroid.re * c.size + r.re) / (c.size + 1);
                c.centroid.im = (c.centroid.im * c.size + r.im) / (c.size + 1);
                ++c.size;
                placed = true;
                break;
            }
        }
        if (!placed) out.push_back({r, 1});
    }
    return out;
}

}  // namespace

std::vector<SingularityEstimate> singularity_scan(const TruncatedSeries<Rat>& f,
                                                  unsigned digits) {
    if (f.order() < 80) throw InsufficientOrder();
    PrecisionGuard g(digits + kGuardDigits);
    // window size: larger windows sharpen distant rings but the exact solve
    // grows fast; 64 resolves the first ring of the parametrization series
    // to far better than the 1e-6 target
    int h = std::min((f.order() - 1) / 2, 64);
    std::vector<std::vector<Cluster>> windows;
    BigFloat group_tol(Rat(1, 50));
    for (int off : {0, 3, 6}) {
        int m = h - off, n = h - off;
        PadeApproximant p = pade(f, m, n);
        std::vector<CBigFloat> roots = poly_roots(p.value.den(), digits);
        windows.push_back(cluster_roots(roots, group_tol));
    }
    BigFloat stable_tol(Rat(1, 1000));
    std::vector<SingularityEstimate> out;
    for (const auto& c : windows[0]) {
        bool stable = true;
        for (size_t w = 1; w < windows.size(); ++w) {
            bool found = false;
            for (const auto& c2 : windows[w]) {
                BigFloat d =
                    cabs(CBigFloat{c.centroid.re - c2.centroid.re, c.centroid.im - c2.centroid.im});
                if (d < stable_tol * (1 + cabs(c.centroid))) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                stable = false;
                break;
            }
        }
        if (!stable) continue;
        SingularityEstimate e;
        e.location = c.centroid;
        e.modulus = cabs(c.centroid);
        e.cluster_size = c.size;
        out.push_back(e);
    }
    std::sort(out.begin(), out.end(),
              [](const SingularityEstimate& a, const SingularityEstimate& b) {
                  return a.modulus < b.modulus;
              });

    // associate with the pole lattice (x + i y) z_s, |(x, y)| modest
    ZsResult zs = zs_constant(std::max(30u, digits));
    BigFloat zsv = zs.value;
    BigFloat match_tol(Rat(1, 100));
    for (auto& e : out) {
        for (long m1 = -6; m1 <= 6 && !e.lattice_match; ++m1) {
            for (long m2 = -6; m2 <= 6; ++m2) {
                if (m1 == 0 && m2 == 0) continue;
                LatticePoint p = lattice_predict(m1, m2);
                if (!p.is_pole) continue;
                CBigFloat pred{BigFloat(p.x) * zsv, BigFloat(p.y) * zsv};
                BigFloat d = cabs(CBigFloat{e.location.re - pred.re, e.location.im - pred.im});
                if (d < match_tol * (1 + cabs(pred))) {
                    e.lattice_match = std::make_pair(m1, m2);
                    break;
                }
            }
        }
    }
    return out;
}

ZsResult zs_constant(unsigned digits) {
    ZsResult out;
    EllipticConstants ec = bigfloat_constants(digits);
    PrecisionGuard g(digits + kGuardDigits);
    BigFloat p6 = pow(ec.pi, 6);
    BigFloat g8 = pow(ec.gamma34, 8);
    out.route_gamma = -p6 / (16 * g8);
    BigFloat f1 = gauss_at_1_quadrature(F21Params{Rat(1, 4), Rat(1, 2), Rat(5, 4)}, digits);
    out.route_quadrature = -4 * pow(f1, 4);
    out.value = out.route_gamma;
    return out;
}

BigFloat radius_estimate(const TruncatedSeries<Rat>& f, unsigned digits) {
    PrecisionGuard g(digits + kGuardDigits);
    // geometric mean of |c_n|^{-1/n} over the last few coefficients
    BigFloat acc(0);
    int used = 0;
    for (int k = f.order() - 1; k >= f.valuation() && used < 8; --k) {
        if (f.at(k) == 0) continue;
        BigFloat c = abs(bf_from_rat(f.at(k), digits));
        acc += -log(c) / k;
        ++used;
    }
    if (used == 0) return BigFloat(0);
    return exp(acc / used);
}

}  // namespace isoflow
