#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "vancoh/numtheory.hpp"
#include "vancoh/rational.hpp"

namespace vancoh {

// Element of Q[[T]]/(T^{order+1}): exactly order+1 rational coefficients,
// all arithmetic discards degrees above the order.
class TruncSeries {
  public:
    TruncSeries(int order, std::vector<Rat> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
        if (order_ < 0) throw std::invalid_argument("TruncSeries: negative order");
        if (coeffs_.size() != static_cast<size_t>(order_) + 1)
            throw std::invalid_argument("TruncSeries: need order+1 coefficients");
    }

    static TruncSeries constant(int order, const Rat& value) {
        std::vector<Rat> c(static_cast<size_t>(order) + 1, Rat(0));
        c[0] = value;
        return TruncSeries(order, std::move(c));
    }

    static TruncSeries one(int order) { return constant(order, Rat(1)); }

    // 1 + d T
    static TruncSeries one_plus_dt(long long d, int order) {
        auto s = one(order);
        if (order >= 1) s.coeffs_[1] = Rat(d);
        return s;
    }

    // (1 + T)^p for p >= 0, directly from binomial coefficients.
    static TruncSeries binomial_power(long long p, int order) {
        std::vector<Rat> c(static_cast<size_t>(order) + 1);
        for (int k = 0; k <= order; ++k) c[k] = Rat(binomial(p, k));
        return TruncSeries(order, std::move(c));
    }

    int order() const { return order_; }
    const Rat& coefficient(int k) const { return coeffs_.at(static_cast<size_t>(k)); }
    const std::vector<Rat>& coefficients() const { return coeffs_; }

    bool operator==(const TruncSeries& other) const = default;

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        check_orders(a, b, "series add");
        std::vector<Rat> c(a.coeffs_);
        for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
        return TruncSeries(a.order_, std::move(c));
    }

    friend TruncSeries operator*(const Rat& s, const TruncSeries& a) {
        std::vector<Rat> c(a.coeffs_);
        for (auto& x : c) x *= s;
        return TruncSeries(a.order_, std::move(c));
    }

    std::string to_string() const {
        std::string out;
        for (int k = 0; k <= order_; ++k) {
            if (!out.empty()) out += " + ";
            out += rat_to_string(coeffs_[static_cast<size_t>(k)]);
            if (k > 0) out += "*T^" + std::to_string(k);
        }
        return out;
    }

  private:
    static void check_orders(const TruncSeries& a, const TruncSeries& b, const char* what) {
        if (a.order_ != b.order_)
            throw std::invalid_argument(std::string(what) + ": mismatched orders " +
                                        std::to_string(a.order_) + " vs " +
                                        std::to_string(b.order_));
    }

    friend TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

    int order_;
    std::vector<Rat> coeffs_;
};

// Cauchy product truncated at the shared order.
inline TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries::check_orders(a, b, "series_mul");
    const int n = a.order();
    std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
    for (int i = 0; i <= n; ++i) {
        if (a.coefficient(i) == 0) continue;
        for (int j = 0; i + j <= n; ++j) c[static_cast<size_t>(i + j)] += a.coefficient(i) * b.coefficient(j);
    }
    return TruncSeries(n, std::move(c));
}

// Inverse of 1 + d T in the truncated ring: sum_k (-d)^k T^k.
inline TruncSeries series_geom_inverse(long long d, int order) {
    if (d < 1) throw std::invalid_argument("series_geom_inverse: d must be >= 1");
    std::vector<Rat> c(static_cast<size_t>(order) + 1);
    BigInt pow = 1;
    for (int k = 0; k <= order; ++k) {
        c[static_cast<size_t>(k)] = Rat(pow);
        pow *= -d;
    }
    return TruncSeries(order, std::move(c));
}

}  // namespace vancoh
