#pragma once

#include "splitgen/conditions.hpp"
#include "splitgen/parampoly.hpp"
#include "splitgen/scheme.hpp"

#include <map>
#include <vector>

namespace splitgen {

/// Coefficient g(i_1,...,i_n) of R_{i_1}...R_{i_n} in the normalized
/// time-ordered symmetrized expansion, for stage-independent correction
/// operators: sum over compositions (t_1..t_a) of n of
/// 1/(t_1!..t_a!) * sum_{k_1<..<k_a<=r} prod_b p_{k_b}^(block sum).
ParamPoly g_plain(const std::vector<int>& idx, int r);

/// Same with the alternating-reversal sign
/// (-1)^{sum_b (k_b - 1)(block sum - t_b)} on each term (stages 1-based).
ParamPoly g_tilde(const std::vector<int>& idx, int r);

/// Simplified coefficient f(i_1,...,i_n): g minus the recursive correction
/// over scheme-admissible nontrivial block merges (all block sizes for the
/// nonsymmetric-complex scheme, odd block sizes for the tilde and symmetric
/// schemes). Supported schemes: the three basic kinds.
ParamPoly f_simplified(const std::vector<int>& idx, const Scheme& scheme, int r);

/// Normal-ordered-product route to the same coefficient: one bracketed
/// factor per position, literal selection-rule expansion. Must agree with
/// g_plain (or g_tilde when tilde is set).
ParamPoly appendix_b_form(const std::vector<int>& idx, int r, bool tilde);

/// a_{alpha k} = sum_{j<k} p_j^alpha + p_k^alpha / 2   (k is 1-based)
ParamPoly suzuki_a(int alpha, int k, int r);
/// b_{beta k} = sum_{j>k} p_j^beta + p_k^beta / 2
ParamPoly suzuki_b(int beta, int k, int r);

/// Two-variable generalizations a_k[alpha,beta] and b_k[alpha,beta];
/// kind is 'a' or 'b'.
ParamPoly ab_two_var(char kind, int k, int alpha, int beta, int r);

struct CosetResult {
    bool member = false;
    std::vector<Rational> coords;  // one per generator when member
};

/// Exact membership of target in the rational linear span of generators,
/// by Gaussian elimination over monomial coordinates. All inputs must share
/// the stage count and be homogeneous of one total degree.
CosetResult coset_reduce(const ParamPoly& target, const std::vector<ParamPoly>& generators);

/// Brute-force evaluation of the time-ordered symmetrized product for one
/// content {n_j}: enumerate stage assignments, reorder stably by stage,
/// average within equal-stage blocks, normalize by prod n_j!. Returns the
/// coefficient polynomial per resulting operator word. Guarded to n <= 6,
/// r <= 4.
std::map<std::vector<int>, ParamPoly> ps_oracle(const ConditionMultiset& content, int r,
                                                bool tilde);

}  // namespace splitgen
