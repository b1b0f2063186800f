#include "isoflow/catalog.hpp"

#include "isoflow/diffop.hpp"
#include "isoflow/hypergeom.hpp"

namespace isoflow {

namespace {

UniPoly<GaussRat> lin(GaussRat c0, GaussRat c1) {
    return UniPoly<GaussRat>(std::vector<GaussRat>{std::move(c0), std::move(c1)});
}

RatFunQi make_T(const GaussRat& c) {
    // z ((z - c)/(1 - c z))^4
    UniPoly<GaussRat> num = lin(-c, GaussRat(1));
    UniPoly<GaussRat> den = lin(GaussRat(1), -c);
    UniPoly<GaussRat> n2 = num * num, d2 = den * den;
    return RatFunQi(lin(GaussRat(0), GaussRat(1)) * n2 * n2, d2 * d2);
}



UniPolyQ pow4(const UniPolyQ& p) {
    UniPolyQ s = p * p;
    return s * s;
}

}  // namespace

RatFunQ iterate_Rm4(int n) {
    RatFunQ r = rfq({0, -4}, {1, -2, 1});
    RatFunQ acc = r;
    for (int k = 1; k < n; ++k) acc = acc.compose(r);
    return acc;
}

RatFunQi gaussian_T() { return make_T(GaussRat(Rat(1), Rat(2))); }
RatFunQi gaussian_Tstar() { return make_T(GaussRat(Rat(1), Rat(-2))); }

const Catalog& main_catalog() {
    static const Catalog cat = [] {
        Catalog c;
        CovariantSystem<Rat> main = system_by_name("main");
        auto add = [&](const std::string& name, RatFunQ R, Rat a1,
                       std::optional<UniPolyQ> d = std::nullopt, bool flow = true) {
            c.rational.push_back({name, main, std::move(R), std::move(a1), flow, std::move(d)});
        };
        add("R_-4", iterate_Rm4(1), Rat(-4));
        add("R_16", iterate_Rm4(2), Rat(16));
        add("R_-64", iterate_Rm4(3), Rat(-64));
        c.rational.push_back({"J", main, rfq({1}, {0, 1}), Rat(0), false, std::nullopt});
        add("R_81", RatFunQ(UniPolyQ{0, 1} * pow4(UniPolyQ{-3, 6, 1}), pow4(UniPolyQ{-1, -6, 3})),
            Rat(81));
        add("R_625",
            RatFunQ(UniPolyQ{0, 1} * pow4(UniPolyQ{5, -2, 1}) * pow4(UniPolyQ{1, -12, -26, 52, 1}),
                    pow4(UniPolyQ{1, -2, 5}) * pow4(UniPolyQ{1, 52, -26, -12, 1})),
            Rat(625));
        add("R_2401",
            RatFunQ(UniPolyQ{0, 1} * pow4(printed_D2401().reversed()), pow4(printed_D2401())),
            Rat(2401), printed_D2401());
        add("R_14641",
            RatFunQ(UniPolyQ{0, 1} * pow4(printed_D14641().reversed()), pow4(printed_D14641())),
            Rat(14641), printed_D14641());
        UniPolyQ d28561 = printed_D28561();
        add("R_28561", RatFunQ(UniPolyQ{0, 1} * pow4(d28561.reversed()), pow4(d28561)),
            Rat(28561), d28561);

        CovariantSystem<GaussRat> maini{
            "main", promote<GaussRat>(main.A),
            std::make_pair(promote<GaussRat>(main.witness->first), main.witness->second)};
        c.gaussian.push_back({"T", maini, gaussian_T(), GaussRat(Rat(-7), Rat(-24)), true,
                              std::nullopt});
        c.gaussian.push_back({"T*", maini, gaussian_Tstar(), GaussRat(Rat(-7), Rat(24)), true,
                              std::nullopt});
        return c;
    }();
    return cat;
}

bool magic_identity_main(const UniPolyQ& D) {
    // compose D with 1/R_{-4} = -(1-z)^2/(4z), cleared by (4z)^deg:
    // identity <=> that polynomial equals D(z) * rev(D)
    UniPolyQ num = UniPolyQ{-1, 2, -1};  // -(1-z)^2
    UniPolyQ den = UniPolyQ{0, 4};
    UniPolyQ lhs = D.compose_scaled(num, den);
    return lhs == D * D.reversed();
}

bool magic_identity_bis(const UniPolyQ& D) {
    // (1-z) P^2 = D^4 - z rev(D)^4 with P = D(R_{-4}) (1-z)^{2 deg}
    UniPolyQ P = D.compose_scaled(UniPolyQ{0, -4}, UniPolyQ{1, -2, 1});
    UniPolyQ lhs = UniPolyQ{1, -1} * P * P;
    UniPolyQ D2 = D * D;
    UniPolyQ R2 = D.reversed() * D.reversed();
    return lhs == D2 * D2 - (R2 * R2).shifted(1);
}

bool hauptconj_check(int n_iterates) {
    LinDiffOpQ h0({RatFunQ::from_poly(UniPolyQ{-1}),
                   RatFunQ::from_poly(UniPolyQ{10, -14}),
                   RatFunQ::from_poly(UniPolyQ{0, 8, -8})});
    if (n_iterates == 0) return true;  // identity map, C_0 = 1
    RatFunQ rn = iterate_Rm4(n_iterates);
    LinDiffOpQ pulled = h0.pullback(rn);
    PowerConjugator<Rat> cn{{{RatFunQ::x(), Rat(1, 4)}, {rn, Rat(-1, 4)}}};
    LinDiffOpQ conj = op_conjugate_by_power(h0, cn.inverse());  // C_N H0 C_N^{-1}
    return LinDiffOpQ::equal_up_to_left_factor(pulled, conj);
}

std::vector<NamedCheck> other_families_verify() {
    std::vector<NamedCheck> out;
    auto check = [&](const std::string& name, const RatFunQ& A, const RatFunQ& R) {
        out.push_back({name, mad_check(A, R), false, ""});
    };
    CovariantSystem<Rat> sixth = system_by_name("sixth");
    CovariantSystem<Rat> third = system_by_name("third");
    CovariantSystem<Rat> arct = system_by_name("arctanh");
    CovariantSystem<Rat> g2 = system_by_name("genus2");

    RatFunQ r_sixth = rfq({0, -27}, {1, -12, 48, -64});
    check("sixth/-27z-(1-4z)3", sixth.A, r_sixth);

    RatFunQ r_tiers = rfq({0, -8, 12, -6, 1}, {1, -6, 12, -8});
    RatFunQ t_miss(UniPolyQ{0, -27, 27} * UniPolyQ{1, -1, 1} * UniPolyQ{1, -1, 1} * UniPolyQ{1, -1, 1},
                   UniPolyQ{1, -6, 3, 1} * UniPolyQ{1, -6, 3, 1} * UniPolyQ{1, -6, 3, 1});
    check("third/z(z-2)3-(1-2z)3", third.A, r_tiers);
    check("third/deg7-extra-map", third.A, t_miss);
    out.push_back({"third/extra-commutes-with-base",
                   pairwise_commute(r_tiers, t_miss, 400), false, ""});

    check("arctanh/4z-(1+z)2", arct.A, rfq({0, 4}, {1, 2, 1}));
    check("arctanh/involution-1-over-z", arct.A, rfq({1}, {0, 1}));
    check("genus2/involution-1-over-z", g2.A, rfq({1}, {0, 1}));

    // appendix C.1 samples in the two families c = 1+a / c = 1+b
    check("c1/inverse-z-a-two-b", gauss_system_c1pb(Rat(2, 5), Rat(1, 5)).A, rfq({1}, {0, 1}));
    check("c1/one-minus-z", gauss_system_c1pb(Rat(3, 4), Rat(1, 4)).A, rfq({1, -1}, {1}));
    RatFunQ moebius3 = rfq({0, 3}, {1, 2});
    check("c1/moebius-t3", gauss_system_c1pb(Rat(6, 5), Rat(1, 5)).A, moebius3);
    {
        // R^(3) = t^3 z / (1 + (t^3-1) z) for t = 3
        RatFunQ m3 = moebius3.compose(moebius3).compose(moebius3);
        out.push_back({"c1/moebius-t3-cubed-is-t27",
                       m3 == rfq({0, 27}, {1, 26}) &&
                           mad_check(gauss_system_c1pb(Rat(6, 5), Rat(1, 5)).A, m3),
                       false, ""});
    }
    check("c1/scaling-t7", gauss_system_c1pb(Rat(0), Rat(1, 3)).A, rfq({0, 7}, {1}));
    check("c1/affine-1-minus-5(1-z)", gauss_system_c1pb(Rat(1, 2), Rat(1)).A, rfq({-4, 5}, {1}));
    RatFunQ order3 = rfq({-1, 1}, {0, 1});
    check("c1/order-three-map", gauss_system_c1pb(Rat(2, 3), Rat(1, 3)).A, order3);
    {
        RatFunQ o3sq = order3.compose(order3);
        out.push_back({"c1/order-three-closes",
                       o3sq == rfq({1}, {1, -1}) && o3sq.compose(order3) == RatFunQ::x(),
                       false, ""});
    }
    return out;
}

std::vector<NamedCheck> higher_genus_flows(int generator_order, int annihilate_order) {
    std::vector<NamedCheck> out;
    auto poly_eq = [](const UniPolyQ& p, const UniPolyQ& q) { return p == q; };

    // genus-2 printed coefficients through z^5
    {
        ParametricFlow f = flow_solve_parametric(system_by_name("genus2"), 6);
        UniPolyQ a1 = UniPolyQ::x();
        UniPolyQ base = a1 * (a1 - UniPolyQ{1});
        bool ok = poly_eq(f.coeffs[1], base.scaled(Rat(-2, 7))) &&
                  poly_eq(f.coeffs[2], base.scaled(Rat(1, 637)) * UniPolyQ{-87, 17}) &&
                  poly_eq(f.coeffs[3], base.scaled(Rat(-2, 84721)) * UniPolyQ{3438, -856, 113}) &&
                  poly_eq(f.coeffs[4],
                          base.scaled(Rat(-1, 38548055)) * UniPolyQ{2095059, -552261, 121194, 3674});
        out.push_back({"genus2/printed-coefficients", ok, false, ""});
    }
    // general first coefficient a2 = -2/(2N-5) a1 (a1-1) for N in {6,7,11}
    {
        bool ok = true;
        for (long n : {6L, 7L, 11L}) {
            CovariantSystem<Rat> sys = n == 6 ? system_by_name("genus2")
                                    : n == 7 ? system_by_name("N7")
                                             : system_by_name("N11");
            ParametricFlow f = flow_solve_parametric(sys, 3);
            UniPolyQ a1 = UniPolyQ::x();
            ok = ok && poly_eq(f.coeffs[1], (a1 * (a1 - UniPolyQ{1})).scaled(Rat(-2, 2 * n - 5)));
        }
        out.push_back({"general/a2-matches-2-over-2N-5", ok, false, ""});
    }
    // N = 7 printed coefficients
    {
        ParametricFlow f = flow_solve_parametric(system_by_name("N7"), 5);
        UniPolyQ a1 = UniPolyQ::x();
        UniPolyQ base = a1 * (a1 - UniPolyQ{1});
        bool ok = poly_eq(f.coeffs[1], base.scaled(Rat(-2, 9))) &&
                  poly_eq(f.coeffs[2], base.scaled(Rat(-1, 1296)) * UniPolyQ{127, -1}) &&
                  poly_eq(f.coeffs[3], base.scaled(Rat(-1, 134136)) * UniPolyQ{7499, 185, 254});
        out.push_back({"N7/printed-coefficients", ok, false, ""});
    }
    // N = 11 printed coefficients, generator, and its annihilator
    {
        ParametricFlow f = flow_solve_parametric(system_by_name("N11"), std::max(generator_order, 5));
        UniPolyQ a1 = UniPolyQ::x();
        UniPolyQ base = a1 * (a1 - UniPolyQ{1});
        bool ok = poly_eq(f.coeffs[1], base.scaled(Rat(-2, 17))) &&
                  poly_eq(f.coeffs[2], base.scaled(Rat(-1, 8092)) * UniPolyQ{367, 143}) &&
                  poly_eq(f.coeffs[3], base.scaled(Rat(-1, 206346)) * UniPolyQ{5011, 2473, 1186});
        out.push_back({"N11/printed-coefficients", ok, false, ""});

        TruncatedSeries<Rat> gen = f.generator(generator_order);
        // z (1-z) 2F1([1, 15/11], [17/11]; z)
        TruncatedSeries<Rat> hyper =
            f21_series(F21Params{Rat(1), Rat(15, 11), Rat(17, 11)}, generator_order);
        TruncatedSeries<Rat> closed =
            TruncatedSeries<Rat>::from_poly(UniPolyQ{0, 1, -1}, generator_order) * hyper;
        out.push_back({"N11/generator-hypergeometric",
                       TruncatedSeries<Rat>::agree(gen, closed, generator_order), false, ""});

        // annihilated by the adjoint D (D + (1/11)(7z-5)/(z(1-z)))
        ParametricFlow flong = flow_solve_parametric(system_by_name("N11"), annihilate_order + 3);
        TruncatedSeries<Rat> genl = flong.generator(annihilate_order + 2);
        LinDiffOpQ adj = omega_of(system_by_name("N11").A).adjoint();
        TruncatedSeries<Rat> res = adj.apply(genl, annihilate_order);
        out.push_back({"N11/generator-annihilated-by-adjoint",
                       res.truncated(annihilate_order - 2).is_zero(), false, ""});
    }
    return out;
}

std::vector<NamedCheck> jr_family_checks(int order) {
    std::vector<NamedCheck> out;
    CovariantSystem<Rat> main = system_by_name("main");

    // coefficient formulas of the Laurent family at sampled a1, b1 = 1/a1
    {
        bool ok = true;
        for (Rat a1 : {Rat(-4), Rat(81), Rat(5, 3)}) {
            FlowSeries<Rat> f = flow_solve(main, a1, order);
            TruncatedSeries<Rat> inv = f.series.inverse();
            Rat b1 = Rat(1) / a1;
            ok = ok && inv.at(-1) == b1;
            ok = ok && inv.at(0) == Rat(-2, 5) * (b1 - 1);
            ok = ok && inv.at(1) == Rat(-1, 15) * (b1 * b1 - 1) / b1;
            ok = ok && inv.at(2) == Rat(-2, 975) * (b1 - 1) * (4 * b1 + 1) * (4 * b1 + 3) / (b1 * b1);
            ok = ok && inv.at(3) == Rat(-1, 248625) * (b1 - 1) * (4 * b1 + 1) *
                                        (Rat(1268) * b1 * b1 + Rat(951) * b1 + 91) / (b1 * b1 * b1);
            ok = ok && inv.at(4) == Rat(-2, 2071875) * (b1 - 1) * (4 * b1 + 1) *
                                        (Rat(3688) * b1 * b1 * b1 + Rat(2766) * b1 * b1 +
                                         Rat(404) * b1 + 17) /
                                        (b1 * b1 * b1 * b1);
        }
        out.push_back({"jr/laurent-coefficient-formulas", ok, false, ""});
    }

    // additive decompositions of 1/R^(n); basis pieces f_k
    RatFunQ f1 = RatFunQ(UniPolyQ{17, -60, 102, -60, 17},
                         UniPolyQ{1, -2, 1} * pow4(UniPolyQ{1, 1}));
    RatFunQ f2 = RatFunQ(UniPolyQ{1, -2, 1} * pow4(UniPolyQ{1, 1}), pow4(UniPolyQ{1, -6, 1}));
    RatFunQ f3 = RatFunQ(UniPolyQ{1, -2, 1} * pow4(UniPolyQ{1, 1}) * pow4(UniPolyQ{1, -6, 1}),
                         pow4(UniPolyQ{1, 20, -26, 20, 1}));
    RatFunQ z = RatFunQ::x();
    RatFunQ zpinv = z + RatFunQ(UniPolyQ{1}, UniPolyQ{0, 1});  // z + 1/z
    auto p4 = [](int e) { return rat_ipow(Rat(-4), e); };

    auto decomposition = [&](int n, const Rat& c1_override, bool use_override) {
        RatFunQ acc = zpinv.scaled(p4(-n)) +
                      RatFunQ::constant(Rat(2) * (rat_ipow(Rat(4), n) - rat_ipow(Rat(-1), n)) /
                                        (Rat(5) * rat_ipow(Rat(4), n)));
        if (n == 2) acc += RatFunQ(UniPolyQ{0, 1}, UniPolyQ{1, -2, 1});
        if (n >= 3) acc += (z * f1).scaled(use_override ? c1_override : p4(2 - n));
        if (n >= 4) acc += (z * f2).scaled(p4(6 - n));
        if (n >= 5) acc += (z * f3).scaled(p4(8 - n));
        return acc;
    };

    for (int n = 1; n <= 4; ++n) {
        RatFunQ lhs = RatFunQ(iterate_Rm4(n).den(), iterate_Rm4(n).num());
        bool ok = lhs == decomposition(n, Rat(0), false);
        out.push_back({"jr/decomposition-n" + std::to_string(n), ok, false, ""});
    }
    {
        RatFunQ r5 = iterate_Rm4(5);
        RatFunQ lhs = RatFunQ(r5.den(), r5.num());
        bool printed = lhs == decomposition(5, Rat(-1, 164), true);
        bool corrected = lhs == decomposition(5, Rat(-1, 64), true);
        NamedCheck c{"jr/decomposition-n5-misprint", corrected && !printed, true, ""};
        c.note = printed ? "printed coefficient -1/164 holds (unexpected)"
                         : "printed -z/164 f1 fails; re-derived coefficient is -1/64 = (-4)^(2-5)";
        out.push_back(c);
    }
    return out;
}

}  // namespace isoflow
