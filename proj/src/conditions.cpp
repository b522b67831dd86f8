#include "splitgen/conditions.hpp"

#include "splitgen/lyndon.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitgen {

namespace {

// Grades available to the scheme at order m. The first entry is always 1;
// the rest are the "correction" grades whose multiplicities may not all
// vanish.
std::vector<int> grade_alphabet(const Scheme& scheme, int m) {
    std::vector<int> grades{1};
    switch (scheme.kind) {
        case SchemeKind::NonsymmetricComplex:
        case SchemeKind::NonsymmetricTilde:
            for (int j = 2; j <= m; ++j) grades.push_back(j);
            break;
        case SchemeKind::Symmetric:
            for (int j = 3; j <= m; j += 2) grades.push_back(j);
            break;
        case SchemeKind::Recursive:
        case SchemeKind::RecursiveTilde: {
            if (scheme.l < 1 || scheme.l > m - 1)
                throw std::invalid_argument("recursive scheme: need 1 <= l <= m-1");
            for (int j = m - scheme.l + 1; j <= m; ++j) grades.push_back(j);
            break;
        }
        case SchemeKind::RecursiveSymmetric: {
            int lo = m - 2 * scheme.l + 2;  // lowest corrected grade of the base method
            if (scheme.l < 1 || lo < 3)
                throw std::invalid_argument("recursive-symmetric scheme: need 1 <= l <= (m-1)/2");
            for (int j = lo; j <= m; j += 2) grades.push_back(j);
            break;
        }
    }
    return grades;
}

void enumerate(const std::vector<int>& grades, size_t pos, int budget, ConditionMultiset& cur,
               std::vector<ConditionMultiset>& out) {
    if (pos == grades.size()) {
        // require at least one grade > 1 present
        for (const auto& [g, n] : cur)
            if (g > 1 && n > 0) {
                out.push_back(cur);
                return;
            }
        return;
    }
    int g = grades[pos];
    for (int n = 0; n * g <= budget; ++n) {
        if (n > 0) cur[g] = n;
        enumerate(grades, pos + 1, budget - n * g, cur, out);
        if (n > 0) cur.erase(g);
    }
}

}  // namespace

std::vector<ConditionMultiset> condition_multisets(const Scheme& scheme, int m) {
    const bool symmetric = scheme.symmetric_family();
    if (symmetric) {
        if (m < 3 || m % 2 == 0)
            throw std::invalid_argument("symmetric condition set: order must be odd and >= 3");
    } else if (m < 2) {
        throw std::invalid_argument("condition set: order must be >= 2");
    }

    std::vector<int> grades = grade_alphabet(scheme, m);
    std::vector<ConditionMultiset> out;
    ConditionMultiset cur;
    enumerate(grades, 0, m, cur, out);

    if (symmetric) {
        // only odd weighted totals occur; parity of the total equals the
        // parity of the letter count, so this drops nothing valid
        std::erase_if(out, [](const ConditionMultiset& c) { return weighted_total(c) % 2 == 0; });
    }

    std::sort(out.begin(), out.end(), [](const ConditionMultiset& a, const ConditionMultiset& b) {
        int wa = weighted_total(a), wb = weighted_total(b);
        if (wa != wb) return wa < wb;
        return a < b;
    });
    return out;
}

std::vector<std::vector<int>> determining_indices(const Scheme& scheme, int m) {
    std::vector<std::vector<int>> out;
    for (const ConditionMultiset& content : condition_multisets(scheme, m)) {
        auto seqs = lyndon_index_sequences(content);
        out.insert(out.end(), seqs.begin(), seqs.end());
    }
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        int ga = 0, gb = 0;
        for (int i : a) ga += i;
        for (int i : b) gb += i;
        if (ga != gb) return ga < gb;
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace splitgen
