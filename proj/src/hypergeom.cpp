#include "isoflow/hypergeom.hpp"

#include <fstream>

#include <json.hpp>

namespace isoflow {

TruncatedSeries<Rat> f21_series(const F21Params& p, int order) {
    p.validate();
    if (order <= 0) return TruncatedSeries<Rat>::zero(std::max(order, 0));
    std::vector<Rat> c(static_cast<size_t>(order));
    c[0] = 1;
    Rat term(1);
    for (long n = 0; n + 1 < order; ++n) {
        term *= (p.a + n) * (p.b + n);
        term /= (p.c + n) * Rat(n + 1);
        c[static_cast<size_t>(n + 1)] = term;
    }
    return TruncatedSeries<Rat>(0, std::move(c), order);
}

namespace {

using nlohmann::json;

Rat json_rat(const json& j) { return rat_from_string(j.get<std::string>()); }

template <class K>
K json_scalar(const json& j);

template <>
Rat json_scalar<Rat>(const json& j) { return json_rat(j); }

template <>
GaussRat json_scalar<GaussRat>(const json& j) {
    if (j.is_string()) return GaussRat(json_rat(j));
    return GaussRat(json_rat(j.at("re")), json_rat(j.at("im")));
}

template <class K>
UniPoly<K> json_poly(const json& j) {
    std::vector<K> c;
    c.reserve(j.size());
    for (const auto& v : j) c.push_back(json_scalar<K>(v));
    return UniPoly<K>(std::move(c));
}

template <class K>
RatFun<K> json_ratfun(const json& j) {
    return RatFun<K>(json_poly<K>(j.at("num")), json_poly<K>(j.at("den")));
}

F21Params json_params(const json& j) {
    return F21Params{json_rat(j.at("a")), json_rat(j.at("b")), json_rat(j.at("c"))};
}

template <class K>
PullbackIdentity<K> parse_identity(const json& j) {
    PullbackIdentity<K> id;
    id.name = j.at("name").get<std::string>();
    id.left = json_params(j.at("left"));
    id.u = json_ratfun<K>(j.at("left").at("pullback"));
    id.right = json_params(j.at("right"));
    id.v = json_ratfun<K>(j.at("right").at("pullback"));
    id.constant = json_scalar<K>(j.at("constant"));
    for (const auto& pf : j.at("prefactors"))
        id.prefactors.emplace_back(json_ratfun<K>(pf), json_rat(pf.at("exp")));
    return id;
}

}  // namespace

std::vector<CorpusRecord> run_identity_corpus(const std::string& path, int max_order) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open identity corpus: " + path);
    json doc = json::parse(in);
    std::vector<CorpusRecord> out;
    for (const auto& j : doc) {
        CorpusRecord rec;
        rec.name = j.at("name").get<std::string>();
        rec.field = j.at("field").get<std::string>();
        rec.order = j.value("order", 40);
        if (max_order > 0) rec.order = std::min(rec.order, max_order);
        if (rec.field == "Qi") {
            rec.pass = check_pullback_identity(parse_identity<GaussRat>(j), rec.order);
        } else {
            rec.pass = check_pullback_identity(parse_identity<Rat>(j), rec.order);
        }
        out.push_back(std::move(rec));
    }
    return out;
}

BigFloat f21_value(const F21Params& p, const BigFloat& z, unsigned digits) {
    p.validate();
    PrecisionGuard g(digits + kGuardDigits);
    if (abs(z) >= 1) throw DivergentPoint();
    BigFloat sum(1), term(1);
    BigFloat eps = pow(BigFloat(10), -static_cast<int>(digits + 8));
    BigFloat a = bf_from_rat(p.a, digits + kGuardDigits);
    BigFloat b = bf_from_rat(p.b, digits + kGuardDigits);
    BigFloat c = bf_from_rat(p.c, digits + kGuardDigits);
    for (long n = 0; n < 1000000; ++n) {
        term *= (a + n) * (b + n) * z / ((c + n) * (n + 1));
        sum += term;
        if (abs(term) < eps * (1 + abs(sum)) && n > 4) break;
    }
    return sum;
}

BigFloat gauss_at_1(const F21Params& p, unsigned digits) {
    p.validate();
    if (p.c - p.a - p.b <= 0) throw DivergentPoint();
    PrecisionGuard g(digits + kGuardDigits);
    unsigned d = digits + kGuardDigits;
    BigFloat num = tgamma(bf_from_rat(p.c, d)) * tgamma(bf_from_rat(p.c - p.a - p.b, d));
    BigFloat den = tgamma(bf_from_rat(p.c - p.a, d)) * tgamma(bf_from_rat(p.c - p.b, d));
    return num / den;
}

BigFloat gauss_at_1_quadrature(const F21Params& p, unsigned digits) {
    // 2F1(a,b;c;1) = Gamma(c)/(Gamma(b)Gamma(c-b)) * Int_0^1 t^{b-1}(1-t)^{s-1} dt,
    // s = c-a-b. Endpoint singularities are removed exactly: substitute
    // t = u^m on [0,1/2] (m = den(b)) and t = 1-v^n on [1/2,1] (n = den(s)).
    p.validate();
    Rat s = p.c - p.a - p.b;
    if (s <= 0 || p.b <= 0) throw DivergentPoint();
    unsigned d = digits + 2 * kGuardDigits;
    PrecisionGuard g(d);

    long m = static_cast<long>(denominator(p.b));
    long n = static_cast<long>(denominator(s));
    BigFloat bm = bf_from_rat(p.b * m - 1, d);  // nonnegative integer exponent
    BigFloat sn = bf_from_rat(s * n - 1, d);
    BigFloat bb = bf_from_rat(p.b, d);
    BigFloat ss = bf_from_rat(s, d);
    BigFloat half(Rat(1, 2));

    BigFloat upper_left = pow(half, BigFloat(1) / m);
    BigFloat left = BigFloat(m) * tanh_sinh(
        [&](const BigFloat& u) {
            BigFloat t = pow(u, static_cast<int>(m));
            return pow(u, bm) * pow(1 - t, ss - 1);
        },
        upper_left, d);
    BigFloat upper_right = pow(half, BigFloat(1) / n);
    BigFloat right = BigFloat(n) * tanh_sinh(
        [&](const BigFloat& v) {
            BigFloat t = pow(v, static_cast<int>(n));
            return pow(v, sn) * pow(1 - t, bb - 1);
        },
        upper_right, d);

    BigFloat pref = tgamma(bf_from_rat(p.c, d)) /
                    (tgamma(bb) * tgamma(bf_from_rat(p.c - p.b, d)));
    return pref * (left + right);
}

}  // namespace isoflow
