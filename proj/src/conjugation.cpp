#include "isoflow/conjugation.hpp"

#include "isoflow/diffop.hpp"
#include "isoflow/hypergeom.hpp"

namespace isoflow {

namespace {

const F21Params kVid{Rat(1, 2), Rat(1, 4), Rat(5, 4)};

TruncatedSeries<Rat> q_series(int order) {
    TruncatedSeries<Rat> h = f21_series(kVid, order);
    TruncatedSeries<Rat> h2 = h * h;
    return (h2 * h2).shifted(1).truncated(order);
}

TruncatedSeries<Rat> f_closed(int order) {
    TruncatedSeries<Rat> h = f21_series(kVid, order);
    TruncatedSeries<Rat> root =
        TruncatedSeries<Rat>(0, {Rat(1), Rat(-1)}, order).pow_frac(Rat(1, 2));
    return (h * root).shifted(1).truncated(order);
}

// substitute z -> z^k into a series (coefficient spreading)
TruncatedSeries<Rat> spread(const TruncatedSeries<Rat>& s, int k) {
    std::vector<Rat> c(static_cast<size_t>(std::max(0, (s.order() - 1) * k + 1)));
    for (int i = s.valuation(); i < s.order(); ++i) c[static_cast<size_t>(i * k)] = s.at(i);
    return TruncatedSeries<Rat>(0, std::move(c), s.order() * k - k + 1);
}

}  // namespace

ConjugacyTriple build_triple(int order) {
    ConjugacyTriple t;
    t.order = order;
    t.Q = q_series(order);
    t.P = t.Q.reverse();
    t.F = f_closed(order);
    return t;
}

TruncatedSeries<Rat> p_series(int order) {
    // moderate orders reverse Q directly (the defining contract); high orders
    // collapse the elliptic-sinus series, whose agreement with the reversion
    // route is pinned by the closed-form checks at order 40+
    if (order <= 80) return q_series(order).reverse();
    TruncatedSeries<Rat> S = sn_series(4 * order + 2);
    TruncatedSeries<Rat> s2 = (S * S).truncated(4 * order);
    TruncatedSeries<Rat> s4 = (s2 * s2).truncated(4 * order);
    std::vector<Rat> c;
    c.reserve(static_cast<size_t>(order));
    for (int k = 4; k < 4 * order; k += 4) c.push_back(s4.at(k));
    return TruncatedSeries<Rat>(1, std::move(c), order);
}

bool flow_conjugacy_check(const Rat& a1, int order) {
    ConjugacyTriple t = build_triple(order + 1);
    std::vector<Rat> scaled;
    Rat pw(1);
    for (int k = 1; k < t.P.order(); ++k) {
        pw *= a1;
        scaled.push_back(t.P.at(k) * pw);
    }
    TruncatedSeries<Rat> lhs(1, std::move(scaled), t.P.order());
    FlowSeries<Rat> flow = flow_solve(system_by_name("main"), a1, order + 1);
    TruncatedSeries<Rat> rhs = flow.series.compose(t.P);
    return TruncatedSeries<Rat>::agree(lhs, rhs, order);
}

bool flow_conjugacy_check_gaussian(const GaussRat& a1, int order) {
    TruncatedSeries<GaussRat> P = promote_series<GaussRat>(p_series(order + 1));
    std::vector<GaussRat> scaled;
    GaussRat pw(1);
    for (int k = 1; k < P.order(); ++k) {
        pw *= a1;
        scaled.push_back(P.at(k) * pw);
    }
    TruncatedSeries<GaussRat> lhs(1, std::move(scaled), P.order());
    CovariantSystem<GaussRat> sys{"main", promote<GaussRat>(system_by_name("main").A),
                                  std::nullopt};
    FlowSeries<GaussRat> flow = flow_solve(sys, a1, order + 1);
    TruncatedSeries<GaussRat> rhs = flow.series.compose(P);
    return TruncatedSeries<GaussRat>::agree(lhs, rhs, order);
}

bool inverse_branch_conjugacy_check(int order) {
    ConjugacyTriple t = build_triple(order + 1);
    TruncatedSeries<Rat> s1 = inverse_branch(iterate_Rm4(1), order + 1);
    TruncatedSeries<Rat> lhs = s1.compose(t.P);
    std::vector<Rat> scaled;
    Rat pw(1);
    for (int k = 1; k < t.P.order(); ++k) {
        pw *= Rat(-1, 4);
        scaled.push_back(t.P.at(k) * pw);
    }
    TruncatedSeries<Rat> rhs(1, std::move(scaled), t.P.order());
    return TruncatedSeries<Rat>::agree(lhs, rhs, order);
}

std::vector<NamedCheck> generator_identities(int order) {
    std::vector<NamedCheck> out;
    ConjugacyTriple t = build_triple(order + 2);
    TruncatedSeries<Rat> zpprime = t.P.derivative().shifted(1);
    out.push_back({"triple/zP'-equals-F-of-P",
                   TruncatedSeries<Rat>::agree(zpprime, t.F.compose(t.P), order), false, ""});
    out.push_back({"triple/Q'F-equals-Q",
                   TruncatedSeries<Rat>::agree(t.Q.derivative() * t.F, t.Q, order), false, ""});
    TruncatedSeries<Rat> rm4 = iterate_Rm4(1).series(order + 2);
    out.push_back({"triple/Q-covariance-Rm4",
                   TruncatedSeries<Rat>::agree(t.Q.compose(rm4), t.Q.scaled(Rat(-4)), order),
                   false, ""});
    TruncatedSeries<Rat> r81 = find_entry(main_catalog().rational, "R_81")->R.series(order + 2);
    out.push_back({"triple/Q-covariance-R81",
                   TruncatedSeries<Rat>::agree(t.Q.compose(r81), t.Q.scaled(Rat(81)), order),
                   false, ""});
    return out;
}

std::vector<NamedCheck> nonlinear_residuals(int order) {
    std::vector<NamedCheck> out;
    ConjugacyTriple t = build_triple(order + 4);
    const TruncatedSeries<Rat>& P = t.P;
    TruncatedSeries<Rat> P1 = P.derivative();
    TruncatedSeries<Rat> P2 = P1.derivative();
    TruncatedSeries<Rat> P3 = P2.derivative();
    TruncatedSeries<Rat> one = TruncatedSeries<Rat>::one(P.order());
    TruncatedSeries<Rat> z = TruncatedSeries<Rat>::x(P.order());

    // z^3 (P')^4 - (1-P)^2 P^3
    TruncatedSeries<Rat> p1sq = P1 * P1;
    TruncatedSeries<Rat> quart = p1sq * p1sq;
    TruncatedSeries<Rat> psq = P * P;
    TruncatedSeries<Rat> e1 = quart.shifted(3) - (one - P) * (one - P) * psq * P;
    out.push_back({"ode/order-one-quartic", e1.truncated(order).is_zero(), false, ""});

    // 4 z P (P-1) P'' - z (5P-3) P'^2 + 3 P (P-1) P'
    TruncatedSeries<Rat> pm1 = P - one;
    TruncatedSeries<Rat> e2 = (P * pm1 * P2).scaled(Rat(4)).shifted(1) -
                              ((P.scaled(Rat(5)) - one.scaled(Rat(3))) * p1sq).shifted(1) +
                              (P * pm1 * P1).scaled(Rat(3));
    out.push_back({"ode/painleve-like-second-order", e2.truncated(order).is_zero(), false, ""});

    // third-order equation
    TruncatedSeries<Rat> five_p_3 = P.scaled(Rat(5)) - one.scaled(Rat(3));
    TruncatedSeries<Rat> t1 =
        ((psq.scaled(Rat(5)) - P.scaled(Rat(6)) + one.scaled(Rat(3))) * quart).shifted(1);
    TruncatedSeries<Rat> t2 = P * five_p_3 * pm1 * p1sq * P1;
    TruncatedSeries<Rat> t3 = (pm1 * P * five_p_3 * P2 * p1sq).shifted(1);
    TruncatedSeries<Rat> t4 =
        (psq * pm1 * pm1 * (P2 + P3.shifted(1)) * P1).scaled(Rat(4));
    TruncatedSeries<Rat> t5 = (P2 * P2 * psq * pm1 * pm1).scaled(Rat(4)).shifted(1);
    TruncatedSeries<Rat> e3 = t1 - t2 - t3 + t4 - t5;
    out.push_back({"ode/third-order", e3.truncated(order).is_zero(), false, ""});

    // invariance witness: the quartic residual composed with 1/P equals the
    // original residual divided by P^8 - checked on a generic series
    {
        std::vector<Rat> g{Rat(1), Rat(2, 3), Rat(-1, 5), Rat(7, 2), Rat(-3), Rat(1, 7), Rat(4)};
        TruncatedSeries<Rat> G(1, std::move(g), 8);
        auto quart_residual = [](const TruncatedSeries<Rat>& f) {
            TruncatedSeries<Rat> f1 = f.derivative();
            TruncatedSeries<Rat> f1sq = f1 * f1;
            TruncatedSeries<Rat> one_ = TruncatedSeries<Rat>::one(f.order());
            return (f1sq * f1sq).shifted(3) - (one_ - f) * (one_ - f) * f * f * f;
        };
        TruncatedSeries<Rat> inv = G.inverse();
        TruncatedSeries<Rat> lhs = quart_residual(inv);
        TruncatedSeries<Rat> p8 = (G * G * G * G);
        p8 = p8 * p8;
        TruncatedSeries<Rat> rhs = quart_residual(G) / p8;
        out.push_back({"ode/quartic-invariant-under-1-over-P",
                       TruncatedSeries<Rat>::agree(lhs, rhs, std::min(lhs.order(), rhs.order())),
                       false, ""});
    }

    // elliptic-sinus pair, via u with z = u^4, P = S^4:
    //   S'^2 + S^4 - 1 = 0  (square root of the order-one quartic)
    //   P'' - (3/4) P'^2/P + (3/4) P'/z + (1/2) P^{3/2}/z^{3/2} = 0
    {
        int uord = 4 * (order + 2);
        TruncatedSeries<Rat> S = sn_series(uord);
        TruncatedSeries<Rat> Sp = S.derivative();
        TruncatedSeries<Rat> s2 = S * S;
        TruncatedSeries<Rat> s4 = s2 * s2;
        TruncatedSeries<Rat> r1 = Sp * Sp + s4 - TruncatedSeries<Rat>::one(uord);
        out.push_back({"ode/sinus-first", r1.truncated(uord - 4).is_zero(), false, ""});

        // in u: p = S^4, P'(z)|_{z=u^4} = S^3 S' / u^3, P'' = d(P')/du / (4u^3)
        TruncatedSeries<Rat> p = s4;
        TruncatedSeries<Rat> pprime = (s2 * S * Sp).shifted(-3);
        TruncatedSeries<Rat> psecond = pprime.derivative().shifted(-3).scaled(Rat(1, 4));
        TruncatedSeries<Rat> s6 = s4 * s2;
        TruncatedSeries<Rat> r2 = psecond * p - (pprime * pprime).scaled(Rat(3, 4)) +
                                  (pprime * p).scaled(Rat(3, 4)).shifted(-4) +
                                  (s6 * p).scaled(Rat(1, 2)).shifted(-6);
        out.push_back({"ode/sinus-second", r2.truncated(uord - 10).is_zero(), false, ""});
    }
    return out;
}

namespace {

// residual of y'' - (3/(4y) + 1/(2(y-1))) y'^2 + (eta/z) y' cleared by
// 4 z y (y-1):   4 z y (y-1) y'' - z (5y-3) y'^2 + 4 eta y (y-1) y'
TruncatedSeries<Rat> painleve_residual(const TruncatedSeries<Rat>& y, const Rat& eta) {
    TruncatedSeries<Rat> one = TruncatedSeries<Rat>::one(y.order());
    TruncatedSeries<Rat> y1 = y.derivative();
    TruncatedSeries<Rat> y2 = y1.derivative();
    TruncatedSeries<Rat> ym1 = y - one;
    return (y * ym1 * y2).scaled(Rat(4)).shifted(1) -
           ((y.scaled(Rat(5)) - one.scaled(Rat(3))) * y1 * y1).shifted(1) +
           (y * ym1 * y1).scaled(eta * 4);
}

}  // namespace

PainleveProbe painleve_eta(const Rat& eta, int order) {
    // solve order by order with y = 1 + z + c2 z^2 + ...; the linear slope is
    // normalized to 1 (the equation is invariant under z -> lambda z)
    std::vector<Rat> c{Rat(1), Rat(1)};
    for (int n = 2; n < order; ++n) {
        TruncatedSeries<Rat> y0(0, c, n + 2);
        TruncatedSeries<Rat> e0 = painleve_residual(y0, eta);
        std::vector<Rat> cp = c;
        cp.push_back(Rat(1));
        TruncatedSeries<Rat> y1(0, cp, n + 2);
        TruncatedSeries<Rat> e1 = painleve_residual(y1, eta);
        TruncatedSeries<Rat> diff = e1 - e0;
        int m0 = -1;
        for (int k = std::min(diff.valuation(), e0.valuation()); k < n + 1; ++k) {
            if (diff.at(k) != 0) {
                m0 = k;
                break;
            }
            if (e0.at(k) != 0) throw NonSolvableOrder(n);
        }
        if (m0 < 0) throw NonSolvableOrder(n);
        c.push_back(-e0.at(m0) / diff.at(m0));
    }
    PainleveProbe probe{eta, TruncatedSeries<Rat>(0, std::move(c), order), true};
    return probe;
}

std::vector<NamedCheck> painleve_checks(int order) {
    std::vector<NamedCheck> out;
    PainleveProbe half = painleve_eta(Rat(1, 2), std::max(order, 9));
    std::vector<Rat> printed{Rat(1),        Rat(1),          Rat(1, 2),      Rat(7, 40),
                             Rat(1, 20),    Rat(121, 9600),  Rat(7, 2400),   Rat(211, 332800),
                             Rat(41, 312000)};
    bool ok = true;
    for (int k = 0; k <= 8; ++k) ok = ok && half.candidate.at(k) == printed[static_cast<size_t>(k)];
    out.push_back({"painleve/eta-half-series", ok, false, ""});

    // P(z^{4(1-eta)}) solves the eta-equation for eta in {0, 1/2, 3/4}
    for (Rat eta : {Rat(0), Rat(1, 2), Rat(3, 4)}) {
        long k = static_cast<long>(numerator(Rat(4) * (Rat(1) - eta)));
        TruncatedSeries<Rat> P = p_series(order / static_cast<int>(k) + 4);
        TruncatedSeries<Rat> sub = spread(P, static_cast<int>(k));
        TruncatedSeries<Rat> res = painleve_residual(sub, eta);
        out.push_back({"painleve/P-substitution-eta-" + eta.str(),
                       res.truncated(std::min(order, res.order() - 1)).is_zero(), false, ""});
    }
    // eta-shift law at (alpha, eta) = (2, 3/4) -> 1/2 is the k = 2 case above;
    // record it explicitly
    out.push_back({"painleve/eta-shift-2-maps-3-4-to-1-2", true, true,
                   "alpha=2 sends eta=3/4 to eta=1/2; covered by the P(z^2) substitution"});
    return out;
}

bool puiseux_scaled_numeric_check(unsigned digits) {
    // w(z) = P((mu + lambda z^{1/4})^4) with (mu, lambda) = (1/2, 1) should
    // satisfy the second-order equation; check the residual numerically at
    // a sample point using the P series inside its disk of convergence
    PrecisionGuard g(digits + kGuardDigits);
    int order = 120;
    TruncatedSeries<Rat> P = p_series(order);
    auto eval_series = [&](const TruncatedSeries<Rat>& s, const BigFloat& x) {
        // Horner down to the constant term; negative valuations divide out
        BigFloat acc(0);
        for (int k = s.order() - 1; k >= std::min(s.valuation(), 0); --k)
            acc = acc * x + bf_from_rat(s.at(k), digits + kGuardDigits);
        for (int k = 0; k > s.valuation(); --k) acc /= x;
        return acc;
    };
    TruncatedSeries<Rat> P1 = P.derivative();
    TruncatedSeries<Rat> P2 = P1.derivative();

    BigFloat z0(Rat(1, 5));
    BigFloat mu(Rat(1, 2));
    BigFloat q = pow(z0, BigFloat(Rat(1, 4)));
    BigFloat x = mu + q;           // mu + lambda z^{1/4}
    BigFloat arg = x * x * x * x;  // inside |z_s|, fine for the series
    BigFloat dargdz = x * x * x * pow(z0, BigFloat(Rat(-3, 4)));
    BigFloat d2argdz2 = 3 * x * x * pow(z0, BigFloat(Rat(-3, 2))) / 4 -
                        3 * x * x * x * pow(z0, BigFloat(Rat(-7, 4))) / 4;
    BigFloat w = eval_series(P, arg);
    BigFloat w1 = eval_series(P1, arg) * dargdz;
    BigFloat w2 = eval_series(P2, arg) * dargdz * dargdz + eval_series(P1, arg) * d2argdz2;
    // residual of w'' - (3/(4w) + 1/(2(w-1))) w'^2 + (3/4)(1/z) w'
    BigFloat res = w2 - (3 / (4 * w) + 1 / (2 * (w - 1))) * w1 * w1 + 3 * w1 / (4 * z0);
    BigFloat tol = pow(BigFloat(10), -static_cast<int>(digits - 5));
    return abs(res) < tol;
}

TruncatedSeries<Rat> sn_series(int u_order) {
    // S = sum_k w_k u^{4k+1}: (4k+1)(4k) w_k = -2 [W^3]_{k-1} with W(t) the
    // series of w_k in t = u^4. Maintaining V = W^2 incrementally keeps the
    // whole recurrence quadratic in the order.
    int kmax = (u_order - 2) / 4;
    std::vector<Rat> w{Rat(1)};
    std::vector<Rat> v{Rat(1)};  // V_m = [W^2]_m, valid for m < w.size()
    for (int k = 1; k <= kmax; ++k) {
        // V_{k-1} from the known w_0 .. w_{k-1}
        if (static_cast<int>(v.size()) < k) {
            int m = k - 1;
            Rat vm(0);
            for (int i = 0; i <= m; ++i) vm += w[static_cast<size_t>(i)] * w[static_cast<size_t>(m - i)];
            v.push_back(vm);
        }
        Rat cube(0);  // [W^3]_{k-1} = sum V_i w_j over i + j = k-1
        for (int i = 0; i < k; ++i)
            cube += v[static_cast<size_t>(i)] * w[static_cast<size_t>(k - 1 - i)];
        w.push_back(-2 * cube / (Rat(4 * k + 1) * Rat(4 * k)));
    }
    std::vector<Rat> s(static_cast<size_t>(4 * kmax + 2));
    for (int k = 0; k <= kmax; ++k) s[static_cast<size_t>(4 * k + 1)] = w[static_cast<size_t>(k)];
    return TruncatedSeries<Rat>(0, std::move(s), u_order);
}

std::vector<NamedCheck> sn_closed_form(int order) {
    std::vector<NamedCheck> out;
    int uord = 4 * order + 2;
    TruncatedSeries<Rat> S = sn_series(uord);
    out.push_back({"sn/leading-terms",
                   S.at(1) == 1 && S.at(5) == Rat(-1, 10) && S.at(2) == 0 && S.at(3) == 0,
                   false, ""});
    TruncatedSeries<Rat> s2 = S * S;
    TruncatedSeries<Rat> s4 = s2 * s2;
    TruncatedSeries<Rat> P = p_series(order + 1);
    // P(u^4) in u
    TruncatedSeries<Rat> pu = spread(P, 4);
    out.push_back({"sn/P-u4-equals-S4",
                   TruncatedSeries<Rat>::agree(pu, s4, std::min(pu.order(), s4.order())), false,
                   ""});
    // z 2F1([1/4,1/2],[5/4]; z^4) = int_0^z (1-t^4)^{-1/2} dt
    TruncatedSeries<Rat> lhs =
        spread(f21_series(F21Params{Rat(1, 4), Rat(1, 2), Rat(5, 4)}, order + 1), 4).shifted(1);
    TruncatedSeries<Rat> rhs = TruncatedSeries<Rat>(0, {Rat(1), Rat(0), Rat(0), Rat(0), Rat(-1)},
                                                    4 * order + 2)
                                   .pow_frac(Rat(-1, 2))
                                   .integral();
    out.push_back({"sn/elliptic-integral-taylor",
                   TruncatedSeries<Rat>::agree(lhs, rhs, std::min(lhs.order(), rhs.order())),
                   false, ""});
    return out;
}

}  // namespace isoflow
