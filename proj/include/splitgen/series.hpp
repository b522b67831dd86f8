#pragma once

#include "splitgen/ladder.hpp"
#include "splitgen/rational.hpp"
#include "splitgen/word.hpp"

#include <vector>

namespace splitgen {

using RationalWordPoly = WordPolyT<Rational>;

/// Exact truncated expansion in the free associative algebra over the
/// ladder operators; grade = word length, grade 0 is the empty word with
/// coefficient 1.
struct TruncatedSeries {
    int max_grade = 0;
    int num_ops = 0;
    std::vector<RationalWordPoly> by_grade;  // index = grade, 0..max_grade

    const RationalWordPoly& grade(int g) const { return by_grade[static_cast<size_t>(g)]; }
};

/// Multiply out the per-factor truncated exponentials sum_k (t L)^k / k!.
/// Guarded to max_grade <= 8.
TruncatedSeries expand_product(const Ladder& ladder, int max_grade);

/// Expansion of exp(x (A_1 + ... + A_q)): every word of length k carries
/// coefficient 1/k!.
TruncatedSeries exponential_of_sum(int num_ops, int max_grade);

struct ExactVerdict {
    bool ok = false;
    int first_defect_grade = -1;  // -1: no defect up to the expanded grade
    RationalWordPoly defect;
};

/// Compare expand_product against exponential_of_sum gradewise through
/// grade m+1. ok iff grades 1..m agree within tol (max |coefficient| as a
/// double; tol = 0 is exact comparison). The first defect beyond tol is
/// reported even when ok.
ExactVerdict verify_order_exact(const Ladder& ladder, int m, double tol = 0.0);

/// Largest coefficient magnitude, as a double.
double coeff_norm(const RationalWordPoly& p);

}  // namespace splitgen
