#pragma once

#include "splitgen/rational.hpp"
#include "splitgen/scheme.hpp"

#include <utility>
#include <vector>

namespace splitgen {

/// Moebius function; mu(1)=1, mu squarefree with k prime factors = (-1)^k,
/// 0 on non-squarefree arguments.
int mobius(long long d);

/// First Witt formula M_r(n): number of Lyndon words of length n over r
/// letters.
BigInt witt_count(int r, int n);

/// Second Witt formula M(n_1,...,n_r): number of Lyndon words containing
/// letter k exactly n_k times. d ranges over the common divisors of the
/// nonzero entries.
BigInt witt_multi(const std::vector<int>& multidegree);

/// Minimal number of parameters/equations for an m-th order decomposition:
/// 1 plus the Witt counts of the cumulative condition set through order m.
BigInt s_min(const Scheme& scheme, int m);

enum class CorollaryKind { A4, A6, A7, A9 };

/// Evaluates both sides of the named closed-form identity independently:
/// the left by explicit enumeration of the constrained multidegree sums,
/// the right by the closed formula. A4 needs k; A9 needs prime m.
std::pair<BigInt, BigInt> corollary_identity(CorollaryKind kind, int m, int k = 0);

}  // namespace splitgen
