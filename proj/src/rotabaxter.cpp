#include "isoflow/rotabaxter.hpp"

namespace isoflow {

namespace {

// A = (c/N) (n1 + n2 z) / (z (1 - z)) presets, with witness a(z) where known
CovariantSystem<Rat> make_system(const std::string& name, UniPolyQ num, const Rat& scale,
                                 std::optional<std::pair<RatFunQ, long>> witness) {
    CovariantSystem<Rat> s;
    s.name = name;
    s.A = RatFunQ(num.scaled(scale), UniPolyQ{0, 1, -1});
    s.witness = std::move(witness);
    return s;
}

std::optional<std::pair<RatFunQ, long>> wit(std::initializer_list<long> num_coeffs, long n) {
    return std::make_pair(RatFunQ::from_poly(UniPolyQ(num_coeffs)), n);
}

}  // namespace

CovariantSystem<Rat> gauss_system_c1pa(const Rat& a, const Rat& b) {
    CovariantSystem<Rat> s;
    s.name = "gauss(" + a.str() + "," + b.str() + ",c=1+a)";
    // A = ((1-a) + (a-b-1) z) / (z (1-z)); witness (1-z)^b z^{1-a} is not
    // rational in general, so it is omitted here
    UniPolyQ num({Rat(1) - a, a - b - 1});
    s.A = RatFunQ(num, UniPolyQ{0, 1, -1});
    return s;
}

CovariantSystem<Rat> gauss_system_c1pb(const Rat& a, const Rat& b) {
    CovariantSystem<Rat> s = gauss_system_c1pa(b, a);
    s.name = "gauss(" + a.str() + "," + b.str() + ",c=1+b)";
    return s;
}

CovariantSystem<Rat> system_by_name(const std::string& name) {
    if (name == "main")
        // A* = (1/4)(3-5z)/(z(1-z)), a(z) = z^3 (1-z)^2, N = 4
        return make_system(name, UniPolyQ{3, -5}, Rat(1, 4), wit({0, 0, 0, 1, -2, 1}, 4));
    if (name == "sixth")
        return make_system(name, UniPolyQ{5, -8}, Rat(1, 6), wit({0, 0, 0, 0, 0, 1, -3, 3, -1}, 6));
    if (name == "third")
        return make_system(name, UniPolyQ{2, -4}, Rat(1, 3), wit({0, 0, 1, -2, 1}, 3));
    if (name == "arctanh")
        return make_system(name, UniPolyQ{1, -3}, Rat(1, 2), wit({0, 1, -2, 1}, 2));
    if (name == "genus2")
        return make_system(name, UniPolyQ{5, -7}, Rat(1, 6), wit({0, 0, 0, 0, 0, 1, -2, 1}, 6));
    if (name == "N7")
        return make_system(name, UniPolyQ{5, -7}, Rat(1, 7), wit({0, 0, 0, 0, 0, 1, -2, 1}, 7));
    if (name == "N11")
        return make_system(name, UniPolyQ{5, -7}, Rat(1, 11), wit({0, 0, 0, 0, 0, 1, -2, 1}, 11));
    if (name.rfind("gauss(", 0) == 0 && name.back() == ')') {
        std::string body = name.substr(6, name.size() - 7);
        auto c1 = body.find(',');
        auto c2 = body.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw std::invalid_argument("gauss preset wants gauss(a,b,c=1+a) or gauss(a,b,c=1+b)");
        Rat a = rat_from_string(body.substr(0, c1));
        Rat b = rat_from_string(body.substr(c1 + 1, c2 - c1 - 1));
        std::string tail = body.substr(c2 + 1);
        if (tail == "c=1+a" || tail == "1+a") return gauss_system_c1pa(a, b);
        if (tail == "c=1+b" || tail == "1+b") return gauss_system_c1pb(a, b);
        throw std::invalid_argument("gauss preset tail must be c=1+a or c=1+b");
    }
    throw std::invalid_argument("unknown covariant system preset: " + name);
}

std::vector<std::string> system_preset_names() {
    return {"main", "sixth", "third", "arctanh", "genus2", "N7", "N11"};
}

TruncatedSeries<Rat> ParametricFlow::specialize(const Rat& a1, int order) const {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (const auto& p : coeffs) c.push_back(p.eval(a1));
    int n = std::min(order, static_cast<int>(coeffs.size()) + 1);
    c.resize(static_cast<size_t>(std::max(0, n - 1)));
    return TruncatedSeries<Rat>(1, std::move(c), n);
}

TruncatedSeries<Rat> ParametricFlow::generator(int order) const {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (const auto& p : coeffs) c.push_back(p.derivative().eval(Rat(1)));
    int n = std::min(order, static_cast<int>(coeffs.size()) + 1);
    c.resize(static_cast<size_t>(std::max(0, n - 1)));
    return TruncatedSeries<Rat>(1, std::move(c), n);
}

// Direct solve in the ring Q[a1]; reference path, cost grows quickly with
// the order because every series coefficient is itself a polynomial.
ParametricFlow flow_solve_parametric_direct(const CovariantSystem<Rat>& sys, int order) {
    using PK = UniPoly<Rat>;
    auto lift = [](const UniPolyQ& p) {
        std::vector<PK> c;
        c.reserve(p.coeffs().size());
        for (const auto& v : p.coeffs()) c.push_back(FieldTraits<PK>::from_rat(v));
        return UniPoly<PK>(std::move(c));
    };
    TruncatedSeries<PK> flow =
        detail::flow_loop(lift(sys.A.num()), lift(sys.A.den()), PK::x(), order);
    ParametricFlow out;
    out.system = sys.name;
    for (int n = 1; n < order; ++n) out.coeffs.push_back(flow.at(n));
    return out;
}

ParametricFlow flow_solve_parametric(const CovariantSystem<Rat>& sys, int order) {
    // a_n(a1) has degree n, so order+1 numeric flows at a1 = 2 .. order+2
    // determine every coefficient; Newton interpolation reconstructs the
    // polynomials exactly. Cross-validated against the direct ring solve
    // in the unit tests.
    int npts = order + 1;
    std::vector<Rat> nodes;
    std::vector<FlowSeries<Rat>> flows;
    nodes.reserve(static_cast<size_t>(npts));
    flows.reserve(static_cast<size_t>(npts));
    for (int i = 0; i < npts; ++i) {
        Rat x(i + 2);
        nodes.push_back(x);
        flows.push_back(flow_solve(sys, x, order));
    }
    ParametricFlow out;
    out.system = sys.name;
    for (int n = 1; n < order; ++n) {
        int m = n + 1;  // points needed for degree n
        // Newton divided differences on the first m nodes
        std::vector<Rat> dd;
        dd.reserve(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) dd.push_back(flows[static_cast<size_t>(i)].series.at(n));
        for (int level = 1; level < m; ++level)
            for (int i = m - 1; i >= level; --i)
                dd[static_cast<size_t>(i)] =
                    (dd[static_cast<size_t>(i)] - dd[static_cast<size_t>(i - 1)]) /
                    (nodes[static_cast<size_t>(i)] - nodes[static_cast<size_t>(i - level)]);
        // expand the Newton form
        UniPolyQ poly = UniPolyQ::constant(dd[static_cast<size_t>(m - 1)]);
        for (int i = m - 2; i >= 0; --i) {
            poly = poly * (UniPolyQ::x() - UniPolyQ::constant(nodes[static_cast<size_t>(i)])) +
                   UniPolyQ::constant(dd[static_cast<size_t>(i)]);
        }
        out.coeffs.push_back(std::move(poly));
    }
    return out;
}

TruncatedSeries<Rat> delta_solve(int order, bool* unique_through) {
    RatFunQ R = rfq({0, -4}, {1, -2, 1});
    TruncatedSeries<Rat> rs = R.series(order + 1);
    TruncatedSeries<Rat> pref = rfq({1, 1}, {1, -1}).series(order + 1);
    std::vector<Rat> d{Rat(1)};
    bool unique = true;
    for (int n = 1; n < order; ++n) {
        // Delta_n - [z^n] pref * Delta_partial(R) = 0 with the unknown
        // entering through pref * d_n R^n; linear coefficient 1 - (-4)^n
        TruncatedSeries<Rat> partial(0, d, n + 1);
        TruncatedSeries<Rat> rhs = pref * partial.compose(rs);
        Rat known = rhs.at(n);
        Rat lambda = Rat(1) - rat_ipow(Rat(-4), n);
        if (lambda == 0) {
            unique = false;
            break;
        }
        // d_n * 1 (lhs) - d_n (-4)^n (rhs through R^n) = known_without_dn:
        // solve d_n = (known) / lambda with known from the partial sum
        d.push_back(known / lambda);
    }
    if (unique_through) *unique_through = unique;
    return TruncatedSeries<Rat>(0, std::move(d), order);
}

}  // namespace isoflow
