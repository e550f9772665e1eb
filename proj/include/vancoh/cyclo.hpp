#pragma once

#include <map>
#include <set>
#include <string>

#include "vancoh/errors.hpp"
#include "vancoh/numtheory.hpp"

namespace vancoh {

// Formal product prod_c (1 - t^c)^{m_c} with integer exponents.  The
// factors (1 - t^c) are multiplicatively independent, so the normalized
// exponent map (zeros dropped) is a canonical form and equality of maps is
// equality of products.
class CycloProduct {
  public:
    CycloProduct() = default;

    static CycloProduct one() { return CycloProduct(); }

    static CycloProduct factor(long long c, long long exponent) {
        if (c < 1) throw std::invalid_argument("CycloProduct: c must be >= 1");
        CycloProduct p;
        if (exponent != 0) p.exps_[c] = exponent;
        return p;
    }

    // prod over k | c of (1 - t^k)^{mu(c/k) * exponent}: the factor whose
    // roots are exactly the primitive c-th roots of unity, each appearing
    // `exponent` times.
    static CycloProduct eigenvalue_class_factor(long long c, long long exponent) {
        CycloProduct p;
        if (exponent == 0) return p;
        for (long long k : divisors(c)) {
            const long long e = moebius(c / k) * exponent;
            if (e != 0) p.exps_[k] += e;
        }
        p.normalize();
        return p;
    }

    const std::map<long long, long long>& exponents() const { return exps_; }
    bool is_one() const { return exps_.empty(); }

    CycloProduct& operator*=(const CycloProduct& other) {
        for (const auto& [c, e] : other.exps_) exps_[c] += e;
        normalize();
        return *this;
    }

    friend CycloProduct operator*(CycloProduct a, const CycloProduct& b) { return a *= b; }

    CycloProduct pow(long long k) const {
        CycloProduct p;
        if (k != 0)
            for (const auto& [c, e] : exps_) p.exps_[c] = e * k;
        return p;
    }

    CycloProduct inverse() const { return pow(-1); }

    bool operator==(const CycloProduct& other) const = default;

    // Multiplicity of the eigenvalue class of order c once the product is
    // expanded into individual eigenvalues: a primitive c-th root is a root
    // of 1 - t^k exactly when c divides k.
    std::map<long long, long long> expanded_class_multiplicities() const {
        std::set<long long> classes;
        for (const auto& [k, e] : exps_)
            for (long long c : divisors(k)) classes.insert(c);
        std::map<long long, long long> mult;
        for (long long c : classes) {
            long long total = 0;
            for (const auto& [k, e] : exps_)
                if (k % c == 0) total += e;
            mult[c] = total;
        }
        return mult;
    }

    std::string to_string() const {
        if (exps_.empty()) return "1";
        std::string out;
        for (const auto& [c, e] : exps_) {
            out += "(1-t";
            if (c != 1) out += "^" + std::to_string(c);
            out += ")";
            if (e != 1) out += "^" + std::to_string(e);
        }
        return out;
    }

  private:
    void normalize() {
        for (auto it = exps_.begin(); it != exps_.end();)
            it = (it->second == 0) ? exps_.erase(it) : std::next(it);
    }

    std::map<long long, long long> exps_;
};

}  // namespace vancoh
