#include "splitgen/witt.hpp"

#include "splitgen/conditions.hpp"

#include <numeric>
#include <stdexcept>

namespace splitgen {

int mobius(long long d) {
    if (d < 1) throw std::invalid_argument("mobius: d must be positive");
    int sign = 1;
    for (long long p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            d /= p;
            if (d % p == 0) return 0;
            sign = -sign;
        }
    }
    if (d > 1) sign = -sign;
    return sign;
}

BigInt witt_count(int r, int n) {
    if (r < 1 || n < 1) throw std::invalid_argument("witt_count: r, n must be >= 1");
    BigInt sum = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int mu = mobius(d);
        if (mu == 0) continue;
        BigInt pw = boost::multiprecision::pow(BigInt(r), static_cast<unsigned>(n / d));
        sum += mu * pw;
    }
    return sum / n;
}

BigInt witt_multi(const std::vector<int>& multidegree) {
    long long total = 0;
    int gcd = 0;
    for (int n : multidegree) {
        if (n < 0) throw std::invalid_argument("witt_multi: negative multiplicity");
        total += n;
        gcd = std::gcd(gcd, n);
    }
    if (total == 0) throw std::invalid_argument("witt_multi: all multiplicities zero");

    BigInt sum = 0;
    for (int d = 1; d <= gcd; ++d) {
        if (gcd % d != 0) continue;
        int mu = mobius(d);
        if (mu == 0) continue;
        BigInt term = factorial(static_cast<int>(total) / d);
        for (int n : multidegree) term /= factorial(n / d);
        sum += mu * term;
    }
    return sum / total;
}

BigInt s_min(const Scheme& scheme, int m) {
    BigInt total = 1;
    for (const ConditionMultiset& content : condition_multisets(scheme, m)) {
        std::vector<int> mults;
        for (const auto& [grade, mult] : content) mults.push_back(mult);
        total += witt_multi(mults);
    }
    return total;
}

namespace {

// Sum of witt_multi over all multidegrees {n_l} with sum_l weight[l]*n_l = m.
BigInt weighted_degree_sum(const std::vector<int>& weights, int m) {
    BigInt total = 0;
    std::vector<int> n(weights.size(), 0);
    // odometer over n with exact weighted total m
    auto rec = [&](auto&& self, size_t pos, int remaining) -> void {
        if (pos == weights.size()) {
            if (remaining == 0) {
                bool any = false;
                for (int v : n) any = any || v > 0;
                if (any) total += witt_multi(n);
            }
            return;
        }
        for (int v = 0; v * weights[pos] <= remaining; ++v) {
            n[pos] = v;
            self(self, pos + 1, remaining - v * weights[pos]);
        }
        n[pos] = 0;
    };
    rec(rec, 0, m);
    return total;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

}  // namespace

std::pair<BigInt, BigInt> corollary_identity(CorollaryKind kind, int m, int k) {
    if (m < 1) throw std::invalid_argument("corollary_identity: m must be >= 1");
    switch (kind) {
        case CorollaryKind::A4: {
            if (k < 1) throw std::invalid_argument("corollary A4 needs k >= 1");
            std::vector<int> weights;  // 1 + (l-1)k for l = 1, 2, ...
            for (int w = 1; w <= m; w += k) weights.push_back(w);
            BigInt lhs = weighted_degree_sum(weights, m);
            BigInt rhs = 0;
            for (int j = 1; k * j <= m; ++j) rhs += witt_multi({m - k * j, j});
            return {lhs, rhs};
        }
        case CorollaryKind::A6: {
            std::vector<int> weights;
            for (int w = 1; w <= m; ++w) weights.push_back(w);
            return {weighted_degree_sum(weights, m), witt_count(2, m)};
        }
        case CorollaryKind::A7: {
            std::vector<int> weights;
            for (int w = 1; w <= m; w += 2) weights.push_back(w);
            BigInt lhs = weighted_degree_sum(weights, m);
            BigInt rhs = 0;
            for (int j = 1; 2 * j <= m; ++j) rhs += witt_multi({m - 2 * j, j});
            return {lhs, rhs};
        }
        case CorollaryKind::A9: {
            if (!is_prime(m)) throw std::invalid_argument("corollary A9 needs prime m");
            BigInt lhs = 0;
            for (int j = 1; 2 * j <= m; ++j) lhs += witt_multi({m - 2 * j, j});
            // each term has coprime multidegree, so M is a plain multinomial
            Rational rhs = 0;
            for (int j = 1; 2 * j <= m; ++j)
                rhs += Rational(binomial(m - j, j), m - j);
            if (denominator(rhs) != 1) throw std::logic_error("corollary A9: non-integer rhs");
            return {lhs, numerator(rhs)};
        }
    }
    throw std::logic_error("corollary_identity: unreachable");
}

}  // namespace splitgen
