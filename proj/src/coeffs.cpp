#include "splitgen/coeffs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace splitgen {

namespace {

// All compositions (t_1,...,t_a) of n, a = 1..n.
std::vector<std::vector<int>> compositions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int t = 1; t <= rest; ++t) {
            cur.push_back(t);
            self(self, rest - t);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

std::vector<int> block_sums(const std::vector<int>& idx, const std::vector<int>& t) {
    std::vector<int> sums;
    sums.reserve(t.size());
    size_t pos = 0;
    for (int len : t) {
        int s = 0;
        for (int i = 0; i < len; ++i) s += idx[pos++];
        sums.push_back(s);
    }
    return sums;
}

// For each composition: coefficient 1/prod(t_b!) times the sum over
// strictly increasing stage tuples of the block-sum monomial, optionally
// signed.
ParamPoly g_impl(const std::vector<int>& idx, int r, bool tilde) {
    if (r < 1) throw std::invalid_argument("g: need r >= 1");
    if (idx.empty()) throw std::invalid_argument("g: empty index sequence");
    const int n = static_cast<int>(idx.size());
    ParamPoly result(r);

    for (const auto& t : compositions(n)) {
        const int a = static_cast<int>(t.size());
        if (a > r) continue;  // no increasing stage tuple exists
        Rational w = 1;
        for (int len : t) w /= Rational(factorial(len));
        const auto sums = block_sums(idx, t);

        // iterate k_1 < k_2 < ... < k_a over {1..r}
        std::vector<int> k(static_cast<size_t>(a));
        std::iota(k.begin(), k.end(), 1);
        while (true) {
            std::vector<int> exps(static_cast<size_t>(r), 0);
            long long sign_exp = 0;
            for (int b = 0; b < a; ++b) {
                exps[static_cast<size_t>(k[static_cast<size_t>(b)] - 1)] += sums[static_cast<size_t>(b)];
                if (tilde)
                    sign_exp += static_cast<long long>(k[static_cast<size_t>(b)] - 1) *
                                (sums[static_cast<size_t>(b)] - t[static_cast<size_t>(b)]);
            }
            Rational c = (tilde && sign_exp % 2 != 0) ? -w : w;
            result.add_term(std::move(exps), c);

            // next combination
            int i = a - 1;
            while (i >= 0 && k[static_cast<size_t>(i)] == r - (a - 1 - i)) --i;
            if (i < 0) break;
            ++k[static_cast<size_t>(i)];
            for (int j = i + 1; j < a; ++j)
                k[static_cast<size_t>(j)] = k[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return result;
}

}  // namespace

ParamPoly g_plain(const std::vector<int>& idx, int r) { return g_impl(idx, r, false); }
ParamPoly g_tilde(const std::vector<int>& idx, int r) { return g_impl(idx, r, true); }

ParamPoly f_simplified(const std::vector<int>& idx, const Scheme& scheme, int r) {
    if (scheme.is_recursive())
        throw std::invalid_argument("f_simplified: only the basic schemes are supported");
    const bool tilde = scheme.tilde();
    const bool odd_only = scheme.odd_blocks();

    std::map<std::vector<int>, ParamPoly> memo;
    std::function<const ParamPoly&(const std::vector<int>&)> f =
        [&](const std::vector<int>& seq) -> const ParamPoly& {
        auto it = memo.find(seq);
        if (it != memo.end()) return it->second;
        ParamPoly val = tilde ? g_tilde(seq, r) : g_plain(seq, r);
        const int n = static_cast<int>(seq.size());
        for (const auto& t : compositions(n)) {
            if (static_cast<int>(t.size()) == n) continue;  // trivial merge is f itself
            if (odd_only && std::any_of(t.begin(), t.end(), [](int x) { return x % 2 == 0; }))
                continue;
            Rational w = 1;
            for (int len : t) w /= Rational(factorial(len));
            val -= f(block_sums(seq, t)) * w;
        }
        return memo.emplace(seq, std::move(val)).first->second;
    };
    return f(idx);
}

ParamPoly appendix_b_form(const std::vector<int>& idx, int r, bool tilde) {
    if (r < 1 || idx.empty()) throw std::invalid_argument("appendix_b_form: bad arguments");
    const int n = static_cast<int>(idx.size());
    const int total = std::accumulate(idx.begin(), idx.end(), 0);
    ParamPoly result(r);

    // One choice per bracketed factor j: skip (the leading 1; absent for
    // j = 1) or a run starting at its own exponent, p^{i_j+...+i_{j+len-1}}
    // weighted 1/len!. A selection contributes only when the chosen runs
    // cover every exponent exactly once.
    std::vector<std::pair<int, int>> active;  // (position, run length)
    auto emit = [&](const std::vector<std::pair<int, int>>& runs) {
        const int a = static_cast<int>(runs.size());
        if (a > r) return;
        Rational w = 1;
        std::vector<int> sums;
        for (const auto& [pos, len] : runs) {
            w /= Rational(factorial(len));
            int s = 0;
            for (int i = pos; i < pos + len; ++i) s += idx[static_cast<size_t>(i)];
            sums.push_back(s);
        }
        std::vector<int> k(static_cast<size_t>(a));
        std::iota(k.begin(), k.end(), 1);
        while (true) {
            std::vector<int> exps(static_cast<size_t>(r), 0);
            long long sign_exp = tilde ? total - n : 0;  // the (-1)^{M-n} prefactor
            for (int b = 0; b < a; ++b) {
                exps[static_cast<size_t>(k[static_cast<size_t>(b)] - 1)] += sums[static_cast<size_t>(b)];
                if (tilde)
                    sign_exp += static_cast<long long>(sums[static_cast<size_t>(b)] -
                                                       runs[static_cast<size_t>(b)].second) *
                                k[static_cast<size_t>(b)];
            }
            result.add_term(std::move(exps), sign_exp % 2 != 0 ? -w : w);
            int i = a - 1;
            while (i >= 0 && k[static_cast<size_t>(i)] == r - (a - 1 - i)) --i;
            if (i < 0) break;
            ++k[static_cast<size_t>(i)];
            for (int j = i + 1; j < a; ++j)
                k[static_cast<size_t>(j)] = k[static_cast<size_t>(j - 1)] + 1;
        }
    };
    auto rec = [&](auto&& self, int j, int covered) -> void {
        if (j == n) {
            if (covered == n) emit(active);
            return;
        }
        if (j > 0) self(self, j + 1, covered);  // the leading 1
        if (covered == j) {                     // runs must tile left to right
            for (int len = 1; j + len <= n; ++len) {
                active.emplace_back(j, len);
                self(self, j + 1, covered + len);
                active.pop_back();
            }
        }
    };
    rec(rec, 0, 0);
    return result;
}

ParamPoly suzuki_a(int alpha, int k, int r) {
    if (k < 1 || k > r) throw std::invalid_argument("suzuki_a: need 1 <= k <= r");
    ParamPoly p(r);
    for (int j = 1; j < k; ++j) p += ParamPoly::monomial(r, j - 1, alpha);
    p += ParamPoly::monomial(r, k - 1, alpha, Rational(1, 2));
    return p;
}

ParamPoly suzuki_b(int beta, int k, int r) {
    if (k < 1 || k > r) throw std::invalid_argument("suzuki_b: need 1 <= k <= r");
    ParamPoly p(r);
    for (int j = k + 1; j <= r; ++j) p += ParamPoly::monomial(r, j - 1, beta);
    p += ParamPoly::monomial(r, k - 1, beta, Rational(1, 2));
    return p;
}

ParamPoly ab_two_var(char kind, int k, int alpha, int beta, int r) {
    if (k < 1 || k > r) throw std::invalid_argument("ab_two_var: need 1 <= k <= r");
    ParamPoly p(r);
    auto mono2 = [&](int i, int j) {  // p_i^alpha p_j^beta, 1-based
        std::vector<int> e(static_cast<size_t>(r), 0);
        e[static_cast<size_t>(i - 1)] += alpha;
        e[static_cast<size_t>(j - 1)] += beta;
        ParamPoly m(r);
        m.add_term(std::move(e), 1);
        return m;
    };
    if (kind == 'a') {
        for (int i = 1; i < k; ++i)
            for (int j = i + 1; j < k; ++j) p += mono2(i, j);
        for (int j = 1; j < k; ++j) p += mono2(j, k) * Rational(1, 2);
        for (int j = 1; j < k; ++j) p += ParamPoly::monomial(r, j - 1, alpha + beta, Rational(1, 2));
    } else if (kind == 'b') {
        for (int i = k + 1; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j) p += mono2(i, j);
        for (int j = k + 1; j <= r; ++j) p += mono2(k, j) * Rational(1, 2);
        for (int j = k + 1; j <= r; ++j) p += ParamPoly::monomial(r, j - 1, alpha + beta, Rational(1, 2));
    } else {
        throw std::invalid_argument("ab_two_var: kind must be 'a' or 'b'");
    }
    p += ParamPoly::monomial(r, k - 1, alpha + beta, Rational(1, 8));
    return p;
}

CosetResult coset_reduce(const ParamPoly& target, const std::vector<ParamPoly>& generators) {
    int deg = -1;
    for (const auto& [e, c] : target.terms) deg = std::accumulate(e.begin(), e.end(), 0);
    for (const auto& g : generators) {
        if (g.stages != target.stages) throw std::invalid_argument("coset_reduce: stage mismatch");
        for (const auto& [e, c] : g.terms) {
            int d = std::accumulate(e.begin(), e.end(), 0);
            if (deg == -1) deg = d;
            if (d != deg) throw std::invalid_argument("coset_reduce: degree mismatch");
        }
    }
    if (!target.is_zero() && !target.homogeneous_of_degree(deg))
        throw std::invalid_argument("coset_reduce: degree mismatch");

    // monomial basis = union of all exponent vectors
    std::map<std::vector<int>, size_t> row_of;
    auto note = [&](const ParamPoly& p) {
        for (const auto& [e, c] : p.terms) row_of.emplace(e, row_of.size());
    };
    note(target);
    for (const auto& g : generators) note(g);

    const size_t rows = row_of.size(), cols = generators.size();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1, 0));
    for (size_t j = 0; j < cols; ++j)
        for (const auto& [e, c] : generators[j].terms) m[row_of[e]][j] = c;
    for (const auto& [e, c] : target.terms) m[row_of[e]][cols] = c;

    // Gaussian elimination to reduced row echelon form
    std::vector<size_t> pivot_col_of_row;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[row], m[piv]);
        Rational inv = m[row][col];
        for (auto& x : m[row]) x /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (size_t j2 = col; j2 <= cols; ++j2) m[i][j2] -= f * m[row][j2];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    // consistency: no row 0 = nonzero
    for (size_t i = row; i < rows; ++i)
        if (m[i][cols] != 0) return {};

    CosetResult res;
    res.member = true;
    res.coords.assign(cols, 0);
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
        res.coords[pivot_col_of_row[i]] = m[i][cols];
    return res;
}

std::map<std::vector<int>, ParamPoly> ps_oracle(const ConditionMultiset& content, int r,
                                                bool tilde) {
    std::vector<int> grades;
    Rational norm = 1;
    for (const auto& [grade, mult] : content) {
        if (grade < 1 || mult < 0) throw std::invalid_argument("ps_oracle: bad content");
        for (int i = 0; i < mult; ++i) grades.push_back(grade);
        norm /= Rational(factorial(mult));
    }
    const int n = static_cast<int>(grades.size());
    if (n < 1) throw std::invalid_argument("ps_oracle: empty content");
    if (n > 6 || r > 4 || r < 1) throw std::invalid_argument("ps_oracle: cost guard exceeded");

    std::map<std::vector<int>, ParamPoly> out;
    std::vector<int> stage(static_cast<size_t>(n), 1);  // 1-based stage per factor

    while (true) {
        // monomial and sign of this assignment
        std::vector<int> exps(static_cast<size_t>(r), 0);
        long long sign_exp = 0;
        for (int i = 0; i < n; ++i) {
            exps[static_cast<size_t>(stage[static_cast<size_t>(i)] - 1)] += grades[static_cast<size_t>(i)];
            if (tilde)
                sign_exp += static_cast<long long>(stage[static_cast<size_t>(i)] - 1) *
                            (grades[static_cast<size_t>(i)] - 1);
        }
        Rational base = (tilde && sign_exp % 2 != 0) ? -norm : norm;

        // P: stable reorder of the factors by stage index
        std::vector<int> order(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return stage[static_cast<size_t>(a)] < stage[static_cast<size_t>(b)]; });

        // S: average over permutations within each equal-stage block
        std::vector<std::pair<size_t, size_t>> blocks;  // [begin, end) in order
        for (size_t b = 0; b < order.size();) {
            size_t e = b;
            while (e < order.size() &&
                   stage[static_cast<size_t>(order[e])] == stage[static_cast<size_t>(order[b])])
                ++e;
            blocks.emplace_back(b, e);
            b = e;
        }
        Rational weight = base;
        for (const auto& [b, e] : blocks) weight /= Rational(factorial(static_cast<int>(e - b)));

        std::vector<std::vector<int>> block_perms(blocks.size());
        for (size_t bi = 0; bi < blocks.size(); ++bi) {
            auto [b, e] = blocks[bi];
            block_perms[bi].assign(order.begin() + static_cast<long>(b),
                                   order.begin() + static_cast<long>(e));
            std::sort(block_perms[bi].begin(), block_perms[bi].end());
        }
        // cartesian product over per-block permutations
        auto rec = [&](auto&& self, size_t bi, std::vector<int>& word) -> void {
            if (bi == blocks.size()) {
                auto it = out.find(word);
                if (it == out.end()) it = out.emplace(word, ParamPoly(r)).first;
                it->second.add_term(exps, weight);
                return;
            }
            auto& perm = block_perms[bi];
            do {
                size_t before = word.size();
                for (int fi : perm) word.push_back(grades[static_cast<size_t>(fi)]);
                self(self, bi + 1, word);
                word.resize(before);
            } while (std::next_permutation(perm.begin(), perm.end()));
        };
        std::vector<int> word;
        rec(rec, 0, word);

        // next stage assignment
        int i = n - 1;
        while (i >= 0 && stage[static_cast<size_t>(i)] == r) {
            stage[static_cast<size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
        ++stage[static_cast<size_t>(i)];
    }

    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

}  // namespace splitgen
