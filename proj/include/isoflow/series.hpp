#ifndef ISOFLOW_SERIES_HPP
#define ISOFLOW_SERIES_HPP

// Truncated formal power/Laurent series over an exact field.
//
// A series carries its own exclusive truncation order; binary operations
// propagate the attainable order so nothing ever claims precision it does
// not have. Valuations may be negative (finite principal part). Exact
// polynomial values use the sentinel order kExactOrder.

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

#include "isoflow/rational.hpp"
#include "isoflow/unipoly.hpp"

namespace isoflow {

struct DivisionByZeroSeries : std::runtime_error {
    DivisionByZeroSeries() : std::runtime_error("series division by zero-to-order divisor") {}
};
struct NonIntegrableTerm : std::runtime_error {
    NonIntegrableTerm() : std::runtime_error("series has a z^-1 term; no Laurent antiderivative") {}
};
struct InnerConstantTerm : std::runtime_error {
    InnerConstantTerm() : std::runtime_error("composition inner series must vanish at 0") {}
};
struct NotReversible : std::runtime_error {
    NotReversible() : std::runtime_error("series reversion needs valuation 1 with invertible slope") {}
};
struct NonUnitConstantTerm : std::runtime_error {
    NonUnitConstantTerm() : std::runtime_error("fractional power needs constant term exactly 1") {}
};

inline constexpr int kExactOrder = 1 << 29;

template <class K>
class TruncatedSeries {
public:
    TruncatedSeries() : val_(0), order_(kExactOrder) {}

    // coefficients from `val` upward; truncation order exclusive
    TruncatedSeries(int val, std::vector<K> coeffs, int order)
        : val_(val), order_(order), c_(std::move(coeffs)) {
        if (static_cast<long>(val_) + static_cast<long>(c_.size()) > order_)
            c_.resize(static_cast<size_t>(order_ - val_));
        normalize();
    }

    static TruncatedSeries zero(int order = kExactOrder) { return TruncatedSeries(0, {}, order); }
    static TruncatedSeries constant(const K& k, int order = kExactOrder) {
        return TruncatedSeries(0, {k}, order);
    }
    static TruncatedSeries one(int order = kExactOrder) {
        return constant(FieldTraits<K>::one(), order);
    }
    static TruncatedSeries x(int order = kExactOrder) {
        return TruncatedSeries(1, {FieldTraits<K>::one()}, order);
    }
    static TruncatedSeries from_poly(const UniPoly<K>& p, int order = kExactOrder) {
        return TruncatedSeries(0, p.coeffs(), order);
    }

    int valuation() const { return val_; }
    int order() const { return order_; }
    bool is_zero() const { return c_.empty(); }
    bool is_exact() const { return order_ >= kExactOrder; }

    K coeff(int k) const {
        if (k >= order_) throw std::out_of_range("series coefficient beyond truncation order");
        if (k < val_ || k >= val_ + static_cast<int>(c_.size())) return FieldTraits<K>::zero();
        return c_[static_cast<size_t>(k - val_)];
    }

    TruncatedSeries truncated(int new_order) const {
        if (new_order >= order_) return *this;
        std::vector<K> c = c_;
        if (val_ + static_cast<int>(c.size()) > new_order)
            c.resize(static_cast<size_t>(std::max(0, new_order - val_)));
        return TruncatedSeries(val_, std::move(c), new_order);
    }

    TruncatedSeries shifted(int k) const {  // multiply by z^k
        return TruncatedSeries(val_ + k, c_, order_ >= kExactOrder ? kExactOrder : order_ + k);
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        int order = std::min(a.order_, b.order_);
        int lo = std::min(a.val_, b.val_);
        if (lo >= order) return TruncatedSeries(0, {}, order);
        int hi = std::min(order, std::max(a.val_ + static_cast<int>(a.c_.size()),
                                          b.val_ + static_cast<int>(b.c_.size())));
        std::vector<K> c(static_cast<size_t>(std::max(0, hi - lo)), FieldTraits<K>::zero());
        for (int k = lo; k < hi; ++k)
            c[static_cast<size_t>(k - lo)] = a.at(k) + b.at(k);
        return TruncatedSeries(lo, std::move(c), order);
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a + (-b);
    }
    TruncatedSeries operator-() const {
        std::vector<K> c = c_;
        for (auto& v : c) v = -v;
        return TruncatedSeries(val_, std::move(c), order_);
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        int order;
        if (a.is_exact() && b.is_exact()) {
            order = kExactOrder;
        } else if (a.is_exact()) {
            order = sat_add(b.order_, a.val_);
        } else if (b.is_exact()) {
            order = sat_add(a.order_, b.val_);
        } else {
            order = std::min(sat_add(a.order_, b.val_), sat_add(b.order_, a.val_));
        }
        if (a.c_.empty() || b.c_.empty()) return TruncatedSeries(0, {}, order);
        int val = a.val_ + b.val_;
        int len = std::min<long>(static_cast<long>(a.c_.size()) + b.c_.size() - 1,
                                 static_cast<long>(order) - val);
        if (len <= 0) return TruncatedSeries(0, {}, order);
        std::vector<K> c(static_cast<size_t>(len), FieldTraits<K>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (k_is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (i + j >= static_cast<size_t>(len)) break;
                if (!k_is_zero(b.c_[j])) c[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return TruncatedSeries(val, std::move(c), order);
    }

    TruncatedSeries scaled(const K& k) const {
        if (k_is_zero(k)) return TruncatedSeries(0, {}, order_);
        std::vector<K> c = c_;
        for (auto& v : c) v *= k;
        return TruncatedSeries(val_, std::move(c), order_);
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) { *this = *this + o; return *this; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { *this = *this - o; return *this; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { *this = *this * o; return *this; }

    // structural equality (same valuation, order and coefficients)
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.val_ == b.val_ && a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    // equality of coefficients up to the shared attainable order (or `upto`)
    static bool agree(const TruncatedSeries& a, const TruncatedSeries& b, int upto = INT_MAX) {
        int order = std::min({a.order_, b.order_, upto});
        int lo = std::min(a.val_, b.val_);
        for (int k = lo; k < order; ++k)
            if (a.at(k) != b.at(k)) return false;
        return true;
    }

    // multiplicative inverse; divisor must be nonzero to order
    TruncatedSeries inverse() const {
        if (c_.empty()) throw DivisionByZeroSeries();
        if (is_exact() && c_.size() == 1) {  // monomial: inverse stays exact
            return TruncatedSeries(-val_, {FieldTraits<K>::one() / c_.front()}, kExactOrder);
        }
        // strip z^val: unit part u with u0 != 0; an exact polynomial input is
        // treated as known only to its own length (its inverse is infinite)
        int m = is_exact() ? static_cast<int>(c_.size()) : order_ - val_;  // relative precision
        const K& u0 = c_.front();
        std::vector<K> inv(static_cast<size_t>(m), FieldTraits<K>::zero());
        K u0inv = FieldTraits<K>::one() / u0;
        inv[0] = u0inv;
        for (int n = 1; n < m; ++n) {
            K acc = FieldTraits<K>::zero();
            for (int j = 1; j <= n; ++j) {
                size_t uj = static_cast<size_t>(j);
                if (uj < c_.size() && !k_is_zero(c_[uj]))
                    acc += c_[uj] * inv[static_cast<size_t>(n - j)];
            }
            inv[static_cast<size_t>(n)] = -(acc * u0inv);
        }
        int order = is_exact() ? (m - val_) : order_ - 2 * val_;
        return TruncatedSeries(-val_, std::move(inv), order);
    }

    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a * b.inverse();
    }

    TruncatedSeries derivative() const {
        std::vector<K> c;
        c.reserve(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) {
            int k = val_ + static_cast<int>(i);
            c.push_back(c_[i] * k_from_rat<K>(Rat(k)));
        }
        return TruncatedSeries(val_ - 1, std::move(c),
                               is_exact() ? kExactOrder : order_ - 1);
    }

    TruncatedSeries integral() const {  // antiderivative with zero constant
        std::vector<K> c;
        c.reserve(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) {
            int k = val_ + static_cast<int>(i);
            if (k == -1) {
                if (!k_is_zero(c_[i])) throw NonIntegrableTerm();
                c.push_back(FieldTraits<K>::zero());
            } else {
                c.push_back(c_[i] / k_from_rat<K>(Rat(k + 1)));
            }
        }
        return TruncatedSeries(val_ + 1, std::move(c),
                               is_exact() ? kExactOrder : order_ + 1);
    }

    // f o g with val(g) >= 1; principal parts of f go through 1/g powers
    TruncatedSeries compose(const TruncatedSeries& g) const {
        if (g.val_ < 1) throw InnerConstantTerm();
        int order;
        {
            // error in f: O(g^order_f) = O(z^{val_g * order_f});
            // error in g: O(z^{order_g}) enters through f'(g): O(z^{(val_f-1) val_g + order_g})
            long t1 = is_exact() ? kExactOrder
                                 : static_cast<long>(g.val_) * std::max(order_, 0);
            if (!is_exact() && order_ < 0) t1 = order_;  // principal-part truncations
            long t2 = g.is_exact() ? kExactOrder
                                   : static_cast<long>(std::min(val_ - 1, 0)) * g.val_ + g.order_;
            if (!g.is_exact() && val_ >= 1)
                t2 = static_cast<long>(val_ - 1) * g.val_ + g.order_;
            order = static_cast<int>(std::min({t1, t2, static_cast<long>(kExactOrder)}));
        }
        TruncatedSeries gt = g.truncated(order);
        // regular part by Horner down to the constant term (coefficients
        // below the valuation are zero, so this folds in the full g^val)
        TruncatedSeries acc = TruncatedSeries::zero(order);
        for (int k = val_ + static_cast<int>(c_.size()) - 1; k >= 0; --k)
            acc = acc * gt + TruncatedSeries::constant(at(k), order);
        // principal part via powers of 1/g
        if (val_ < 0) {
            TruncatedSeries ginv = gt.inverse();
            TruncatedSeries p = ginv;
            for (int k = -1; k >= val_; --k) {
                if (!k_is_zero(at(k))) acc += p.scaled(at(k));
                if (k > val_) p = p * ginv;
            }
        }
        return acc.truncated(order);
    }

    // compositional inverse by Lagrange inversion:
    // [z^n] f^{-1} = (1/n) [z^{n-1}] (z/f)^n
    TruncatedSeries reverse() const {
        if (val_ != 1 || c_.empty() || k_is_zero(c_.front())) throw NotReversible();
        int N = is_exact() ? val_ + static_cast<int>(c_.size()) : order_;
        int m = N - 1;  // relative coefficients available for z/f
        if (m < 1) throw NotReversible();
        TruncatedSeries u = TruncatedSeries(0, c_, m);  // f/z to relative order m
        TruncatedSeries w = u.inverse();                // (z/f), order m
        std::vector<K> out(static_cast<size_t>(m), FieldTraits<K>::zero());
        TruncatedSeries pw = w;
        for (int n = 1; n < N; ++n) {
            out[static_cast<size_t>(n - 1)] =
                pw.at(n - 1) / k_from_rat<K>(Rat(n));
            if (n + 1 < N) pw = (pw * w).truncated(m);
        }
        return TruncatedSeries(1, std::move(out), N);
    }

    // f^e for rational e; constant term must be exactly 1.
    // h = f^e satisfies h' f = e f' h, giving
    //   n h_n = sum_{j=1..n} ((e+1) j - n) f_j h_{n-j}.
    TruncatedSeries pow_frac(const Rat& e) const {
        if (val_ != 0 || c_.empty() || !(c_.front() == FieldTraits<K>::one()))
            throw NonUnitConstantTerm();
        int m = is_exact() ? static_cast<int>(c_.size()) + 1 : order_;
        if (e == 0) return TruncatedSeries::one(is_exact() ? kExactOrder : order_);
        std::vector<K> h(static_cast<size_t>(m), FieldTraits<K>::zero());
        h[0] = FieldTraits<K>::one();
        K ek = k_from_rat<K>(e);
        for (int n = 1; n < m; ++n) {
            K acc = FieldTraits<K>::zero();
            for (int j = 1; j <= n; ++j) {
                K fj = at(j);
                if (k_is_zero(fj)) continue;
                K w = ek * k_from_rat<K>(Rat(j)) + k_from_rat<K>(Rat(j - n));
                acc += w * fj * h[static_cast<size_t>(n - j)];
            }
            h[static_cast<size_t>(n)] = acc / k_from_rat<K>(Rat(n));
        }
        return TruncatedSeries(0, std::move(h), is_exact() ? m : order_);
    }

    TruncatedSeries pow(long n) const {
        if (n == 0) return TruncatedSeries::one(order_);
        if (n < 0) return inverse().pow(-n);
        TruncatedSeries r = *this;
        TruncatedSeries base = *this;
        --n;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    std::string str(int max_terms = 10) const {
        std::string out;
        int shown = 0;
        for (int k = val_; k < val_ + static_cast<int>(c_.size()) && shown < max_terms; ++k) {
            K v = at(k);
            if (k_is_zero(v)) continue;
            if (!out.empty()) out += " + ";
            out += "(" + FieldTraits<K>::str(v) + ")";
            if (k == 1) out += "*z";
            else if (k != 0) out += "*z^" + std::to_string(k);
            ++shown;
        }
        if (out.empty()) out = "0";
        if (!is_exact()) out += " + O(z^" + std::to_string(order_) + ")";
        return out;
    }

    // coefficient access without the order guard (internal + tests)
    K at(int k) const {
        if (k < val_ || k >= val_ + static_cast<int>(c_.size())) return FieldTraits<K>::zero();
        return c_[static_cast<size_t>(k - val_)];
    }

private:
    static int sat_add(int a, int b) {
        long s = static_cast<long>(a) + b;
        return static_cast<int>(std::min<long>(s, kExactOrder));
    }
    void normalize() {
        size_t lead = 0;
        while (lead < c_.size() && k_is_zero(c_[lead])) ++lead;
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            val_ += static_cast<int>(lead);
        }
        while (!c_.empty() && k_is_zero(c_.back())) c_.pop_back();
        if (c_.empty()) val_ = 0;
    }

    int val_;
    int order_;
    std::vector<K> c_;
};

using SeriesQ = TruncatedSeries<Rat>;
using SeriesQi = TruncatedSeries<GaussRat>;

}  // namespace isoflow

#endif
