#pragma once

#include "splitgen/rational.hpp"

#include <complex>
#include <map>
#include <span>
#include <vector>

namespace splitgen {

/// Exact-rational multivariate polynomial in the stage parameters
/// p_1..p_r. Monomials are exponent vectors of length r; the map keeps
/// them canonically ordered, and zero coefficients are never stored.
struct ParamPoly {
    int stages = 0;
    std::map<std::vector<int>, Rational> terms;

    ParamPoly() = default;
    explicit ParamPoly(int r) : stages(r) {}

    static ParamPoly zero(int r) { return ParamPoly(r); }
    static ParamPoly constant(int r, const Rational& c) {
        ParamPoly p(r);
        p.add_term(std::vector<int>(static_cast<size_t>(r), 0), c);
        return p;
    }
    /// c * p_{var+1}^e  (var is 0-based)
    static ParamPoly monomial(int r, int var, int e, const Rational& c = 1) {
        ParamPoly p(r);
        std::vector<int> exps(static_cast<size_t>(r), 0);
        exps[static_cast<size_t>(var)] = e;
        p.add_term(std::move(exps), c);
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(std::vector<int> exps, const Rational& c) {
        if (c == 0) return;
        auto it = terms.find(exps);
        if (it == terms.end()) {
            terms.emplace(std::move(exps), c);
            return;
        }
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const Rational& k);
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly operator*(const Rational& k) const;
    bool operator==(const ParamPoly& o) const {
        return stages == o.stages && terms == o.terms;
    }

    ParamPoly derivative(int var) const;

    /// Substitute p_j -> p_{r+1-j} (stage mirror).
    ParamPoly mirror() const;

    template <typename T>
    T eval(std::span<const T> values) const {
        T acc{};
        for (const auto& [exps, coeff] : terms) {
            T term = static_cast<T>(to_double(coeff));
            for (size_t j = 0; j < exps.size(); ++j)
                for (int e = 0; e < exps[j]; ++e) term *= values[j];
            acc += term;
        }
        return acc;
    }

    Rational eval_exact(std::span<const Rational> values) const;

    /// True iff every monomial has total degree d.
    bool homogeneous_of_degree(int d) const;

    std::string to_string() const;
};

}  // namespace splitgen
