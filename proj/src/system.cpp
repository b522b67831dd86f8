#include "splitgen/system.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace splitgen {

int DeterminingSystem::num_vars() const {
    int mx = -1;
    for (int v : var_of_stage) mx = std::max(mx, v);
    return mx + 1;
}

std::vector<int> mirror_ties(int r) {
    std::vector<int> map(static_cast<size_t>(r));
    for (int j = 0; j < r; ++j) map[static_cast<size_t>(j)] = std::min(j, r - 1 - j);
    return map;
}

DeterminingSystem build_system(const Scheme& scheme, int m, int r, bool symmetric_ties,
                               bool simplified) {
    DeterminingSystem sys;
    sys.scheme = scheme;
    sys.order = m;
    sys.stages = r;
    sys.simplified = simplified && !scheme.is_recursive();
    sys.var_of_stage.resize(static_cast<size_t>(r));
    if (symmetric_ties)
        sys.var_of_stage = mirror_ties(r);
    else
        for (int j = 0; j < r; ++j) sys.var_of_stage[static_cast<size_t>(j)] = j;

    for (const auto& idx : determining_indices(scheme, m)) {
        ParamPoly poly = sys.simplified ? f_simplified(idx, scheme, r)
                         : scheme.tilde() ? g_tilde(idx, r)
                                          : g_plain(idx, r);
        sys.equations.emplace_back(idx, std::move(poly));
    }
    return sys;
}

namespace {

template <typename T>
double resid_norm(const std::vector<T>& v) {
    double mx = 0.0;
    for (const T& x : v) mx = std::max(mx, std::abs(x));
    return mx;
}

template <typename T, typename Mat, typename Vec>
NewtonResult<T> newton_impl(const DeterminingSystem& sys, std::vector<T> vars,
                            const NewtonOptions& opts) {
    const int nv = sys.num_vars();
    if (static_cast<int>(vars.size()) != nv)
        throw std::invalid_argument("solve_newton: initial point has wrong dimension");
    const int nr = sys.num_residuals();

    // precompute d(poly)/d(var) via the stage->var chain rule
    std::vector<std::vector<ParamPoly>> jac_polys(sys.equations.size());
    for (size_t e = 0; e < sys.equations.size(); ++e) {
        jac_polys[e].assign(static_cast<size_t>(nv), ParamPoly(sys.stages));
        for (int j = 0; j < sys.stages; ++j) {
            int v = sys.var_of_stage[static_cast<size_t>(j)];
            jac_polys[e][static_cast<size_t>(v)] += sys.equations[e].second.derivative(j);
        }
    }

    NewtonResult<T> res;
    auto eval_res = [&](const std::vector<T>& vr) {
        auto p = sys.stage_values(std::span<const T>(vr));
        return sys.residual(std::span<const T>(p));
    };

    std::vector<T> r = eval_res(vars);
    double rn = resid_norm(r);
    int iter = 0;
    for (; iter < opts.max_iter && rn >= opts.tol; ++iter) {
        auto p = sys.stage_values(std::span<const T>(vars));
        Mat J(nr, nv);
        // normalization row: d(sum p - 1)/d v = multiplicity of v among stages
        for (int v = 0; v < nv; ++v) {
            int count = 0;
            for (int j = 0; j < sys.stages; ++j)
                if (sys.var_of_stage[static_cast<size_t>(j)] == v) ++count;
            J(0, v) = T(count);
        }
        for (size_t e = 0; e < sys.equations.size(); ++e)
            for (int v = 0; v < nv; ++v)
                J(static_cast<int>(e) + 1, v) = jac_polys[e][static_cast<size_t>(v)].eval(std::span<const T>(p));
        Vec F(nr);
        for (int i = 0; i < nr; ++i) F(i) = r[static_cast<size_t>(i)];

        Eigen::CompleteOrthogonalDecomposition<Mat> cod(J);
        if (cod.rank() == 0) {
            res.message = "singular Jacobian";
            break;
        }
        Vec step = cod.solve(F);

        // halve the step until the residual norm decreases
        double scale = 1.0;
        std::vector<T> next = vars;
        double next_rn = rn;
        bool improved = false;
        for (int h = 0; h <= opts.max_halvings; ++h) {
            for (int v = 0; v < nv; ++v)
                next[static_cast<size_t>(v)] = vars[static_cast<size_t>(v)] - T(scale) * step(v);
            auto cand = eval_res(next);
            double cn = resid_norm(cand);
            if (std::isfinite(cn) && cn < rn) {
                vars = next;
                r = std::move(cand);
                next_rn = cn;
                improved = true;
                break;
            }
            scale /= 2.0;
        }
        if (!improved) {
            res.message = "stalled: no descent after max halvings";
            break;
        }
        rn = next_rn;
    }

    res.iterations = iter;
    res.vars = vars;
    {
        auto p = sys.stage_values(std::span<const T>(vars));
        res.stage_values.assign(p.begin(), p.end());
    }
    res.residual_norm = rn;
    res.converged = rn < opts.tol;
    if (!res.converged && res.message.empty()) res.message = "max iterations reached";
    return res;
}

}  // namespace

NewtonResult<double> solve_newton(const DeterminingSystem& sys, std::vector<double> initial_vars,
                                  const NewtonOptions& opts) {
    return newton_impl<double, Eigen::MatrixXd, Eigen::VectorXd>(sys, std::move(initial_vars), opts);
}

NewtonResult<std::complex<double>> solve_newton_complex(const DeterminingSystem& sys,
                                                        std::vector<std::complex<double>> initial_vars,
                                                        const NewtonOptions& opts) {
    return newton_impl<std::complex<double>, Eigen::MatrixXcd, Eigen::VectorXcd>(
        sys, std::move(initial_vars), opts);
}

}  // namespace splitgen
