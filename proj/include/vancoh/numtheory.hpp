#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "vancoh/rational.hpp"

namespace vancoh {

inline long long gcd_list(const std::vector<long long>& xs) {
    long long g = 0;
    for (long long x : xs) g = std::gcd(g, x);
    return g;
}

inline long long lcm_list(const std::vector<long long>& xs) {
    long long l = 1;
    for (long long x : xs) l = std::lcm(l, x);
    return l;
}

// Ordinary binomial coefficient; zero outside the triangle.
inline long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt acc = 1;
    for (long long i = 0; i < k; ++i) {
        acc *= (n - i);
        acc /= (i + 1);
    }
    return big_to_ll(acc, "binomial");
}

// Binomial with arbitrary integer upper index:
//   gen_binomial(m, k) = m (m-1) ... (m-k+1) / k!
// so gen_binomial(-1, k) = (-1)^k and negative m follows the reflection
// gen_binomial(m, k) = (-1)^k binomial(k-m-1, k).
inline long long gen_binomial(long long m, long long k) {
    if (k < 0) throw std::invalid_argument("gen_binomial: k must be nonnegative");
    if (m >= 0) return binomial(m, k);
    const long long sign = (k % 2 == 0) ? 1 : -1;
    return sign * binomial(k - m - 1, k);
}

inline long long euler_phi(long long n) {
    if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
    long long result = n;
    long long m = n;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

inline int moebius(long long n) {
    if (n <= 0) throw std::invalid_argument("moebius: n must be positive");
    int factors = 0;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++factors;
        }
    }
    if (n > 1) ++factors;
    return (factors % 2 == 0) ? 1 : -1;
}

inline std::vector<long long> divisors(long long n) {
    if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// All k-element subsets of {0, ..., m-1} in lexicographic order.
inline std::vector<std::vector<int>> combinations(int m, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > m) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == m - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace vancoh
