#pragma once

#include "splitgen/rational.hpp"
#include "splitgen/scheme.hpp"

#include <complex>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace splitgen {

/// One factor exp(t * x * Op) of a flat composition ladder. Operators are
/// 0-based letters, printed as A, B, C, ...
struct ExpFactor {
    int op = 0;
    Rational t;

    bool operator==(const ExpFactor&) const = default;
};

using Ladder = std::vector<ExpFactor>;
using NumericLadder = std::vector<std::pair<int, std::complex<double>>>;

/// Lower stage values to a flat two-operator ladder, merging adjacent
/// factors on the same operator:
///   nonsymmetric:          F1(px) = e^{pxA} e^{pxB}
///   symmetric:             S2(px) = e^{px/2 A} e^{pxB} e^{px/2 A}
///   nonsymmetric-tilde:    alternating F1 and its reversal
/// Recursive kinds have no scheme-determined base and are rejected.
Ladder ladder_from_scheme(const Scheme& scheme, std::span<const Rational> stage_values);
Ladder ladder_from_scheme(const Scheme& scheme, std::span<const double> stage_values);

NumericLadder to_numeric(const Ladder& ladder);

int ladder_operator_count(const Ladder& ladder);

/// JSON array of {"op": "A", "t": "7/24" | 0.25}; rational strings are kept
/// exact and numbers convert exactly from their binary value.
Ladder load_ladder_json(std::istream& in);
Ladder load_ladder_file(const std::string& path);
void save_ladder_json(const Ladder& ladder, std::ostream& out);

}  // namespace splitgen
