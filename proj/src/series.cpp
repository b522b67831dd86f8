#include "splitgen/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace splitgen {

namespace {

TruncatedSeries one(int num_ops, int max_grade) {
    TruncatedSeries s;
    s.max_grade = max_grade;
    s.num_ops = num_ops;
    s.by_grade.resize(static_cast<size_t>(max_grade) + 1);
    s.by_grade[0].add(Word{}, 1);
    return s;
}

}  // namespace

TruncatedSeries expand_product(const Ladder& ladder, int max_grade) {
    if (max_grade < 0 || max_grade > 8)
        throw std::invalid_argument("expand_product: cost guard (0 <= max_grade <= 8)");
    const int q = std::max(1, ladder_operator_count(ladder));
    TruncatedSeries acc = one(q, max_grade);

    for (const auto& factor : ladder) {
        // exp(t*L): grade k term is the single word L^k with t^k/k!
        std::vector<Rational> tk(static_cast<size_t>(max_grade) + 1);
        tk[0] = 1;
        for (int k = 1; k <= max_grade; ++k)
            tk[static_cast<size_t>(k)] = tk[static_cast<size_t>(k - 1)] * factor.t / k;

        TruncatedSeries next = one(q, max_grade);
        next.by_grade[0].terms.clear();
        for (int g = 0; g <= max_grade; ++g) {
            RationalWordPoly& dst = next.by_grade[static_cast<size_t>(g)];
            for (int k = 0; k <= g; ++k) {
                const RationalWordPoly& left = acc.by_grade[static_cast<size_t>(g - k)];
                if (left.empty()) continue;
                const Rational& c = tk[static_cast<size_t>(k)];
                for (const auto& [w, cw] : left.terms) {
                    Word word = w;
                    word.insert(word.end(), static_cast<size_t>(k), factor.op);
                    dst.add(word, cw * c);
                }
            }
        }
        acc = std::move(next);
    }
    return acc;
}

TruncatedSeries exponential_of_sum(int num_ops, int max_grade) {
    TruncatedSeries s = one(num_ops, max_grade);
    Rational inv_fact = 1;
    std::vector<Word> words{Word{}};
    for (int g = 1; g <= max_grade; ++g) {
        inv_fact /= g;
        std::vector<Word> next;
        next.reserve(words.size() * static_cast<size_t>(num_ops));
        for (const Word& w : words)
            for (int op = 0; op < num_ops; ++op) {
                Word x = w;
                x.push_back(op);
                s.by_grade[static_cast<size_t>(g)].add(x, inv_fact);
                next.push_back(std::move(x));
            }
        words = std::move(next);
    }
    return s;
}

double coeff_norm(const RationalWordPoly& p) {
    double mx = 0.0;
    for (const auto& [w, c] : p.terms) mx = std::max(mx, std::abs(to_double(c)));
    return mx;
}

ExactVerdict verify_order_exact(const Ladder& ladder, int m, double tol) {
    if (m < 1) throw std::invalid_argument("verify_order_exact: m must be >= 1");
    const int max_grade = m + 1;
    TruncatedSeries got = expand_product(ladder, max_grade);
    TruncatedSeries want = exponential_of_sum(got.num_ops, max_grade);

    ExactVerdict v;
    v.ok = true;
    for (int g = 1; g <= max_grade; ++g) {
        RationalWordPoly diff = got.grade(g) - want.grade(g);
        bool clean = tol == 0.0 ? diff.empty() : coeff_norm(diff) <= tol;
        if (!clean) {
            v.first_defect_grade = g;
            v.defect = std::move(diff);
            if (g <= m) v.ok = false;
            break;
        }
    }
    return v;
}

}  // namespace splitgen
