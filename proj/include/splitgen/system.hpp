#pragma once

#include "splitgen/coeffs.hpp"
#include "splitgen/parampoly.hpp"
#include "splitgen/scheme.hpp"

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace splitgen {

/// Labeled determining equations g(i_1,...,i_n) = 0 plus the normalization
/// sum p_j = 1. Stages may share variables (symmetry ties or a custom
/// ansatz) through var_of_stage.
struct DeterminingSystem {
    Scheme scheme;
    int order = 0;
    int stages = 0;
    bool simplified = false;
    std::vector<std::pair<std::vector<int>, ParamPoly>> equations;
    std::vector<int> var_of_stage;  // stage j (0-based) -> variable index

    int num_vars() const;
    /// Total residual count: normalization + equations.
    int num_residuals() const { return static_cast<int>(equations.size()) + 1; }

    template <typename T>
    std::vector<T> stage_values(std::span<const T> vars) const {
        std::vector<T> p(static_cast<size_t>(stages));
        for (int j = 0; j < stages; ++j)
            p[static_cast<size_t>(j)] = vars[static_cast<size_t>(var_of_stage[static_cast<size_t>(j)])];
        return p;
    }

    /// [sum p - 1, g(idx_1), g(idx_2), ...] at the given stage values.
    template <typename T>
    std::vector<T> residual(std::span<const T> p) const {
        if (static_cast<int>(p.size()) != stages)
            throw std::invalid_argument("residual: dimension mismatch");
        std::vector<T> out;
        out.reserve(static_cast<size_t>(num_residuals()));
        T norm{};
        for (const T& v : p) norm += v;
        out.push_back(norm - T(1));
        for (const auto& [label, poly] : equations) out.push_back(poly.eval(p));
        return out;
    }
};

/// Mirror ties p_{r+1-j} = p_j as a variable map.
std::vector<int> mirror_ties(int r);

/// Assemble the determining system for (scheme, m) at stage count r.
/// Polynomials come from f_simplified for the basic schemes when simplified
/// is set, otherwise from g_plain / g_tilde per the scheme's sign rule.
DeterminingSystem build_system(const Scheme& scheme, int m, int r, bool symmetric_ties,
                               bool simplified = true);

struct NewtonOptions {
    double tol = 1e-12;
    int max_iter = 100;
    int max_halvings = 30;
};

template <typename T>
struct NewtonResult {
    bool converged = false;
    int iterations = 0;
    std::vector<T> vars;
    std::vector<T> stage_values;
    double residual_norm = 0.0;
    std::string message;
};

/// Damped Newton (Gauss-Newton step via complete orthogonal decomposition,
/// so over- and underdetermined systems take minimum-norm steps) with
/// analytically differentiated polynomials. Deterministic for fixed inputs.
NewtonResult<double> solve_newton(const DeterminingSystem& sys, std::vector<double> initial_vars,
                                  const NewtonOptions& opts = {});
NewtonResult<std::complex<double>> solve_newton_complex(const DeterminingSystem& sys,
                                                        std::vector<std::complex<double>> initial_vars,
                                                        const NewtonOptions& opts = {});

}  // namespace splitgen
