#include "splitgen/numeric_verify.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <random>
#include <stdexcept>

namespace splitgen {

double verify_order_numeric(const NumericLadder& ladder, int m, int trials, std::uint64_t seed,
                            const NumericVerifyOptions& opts) {
    if (m < 1) throw std::invalid_argument("verify_order_numeric: m must be >= 1");
    if (trials < 3) throw std::invalid_argument("verify_order_numeric: need trials >= 3");
    if (ladder.empty()) throw std::invalid_argument("verify_order_numeric: empty ladder");

    int q = 0;
    for (const auto& [op, t] : ladder) q = std::max(q, op + 1);

    double slope_sum = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        std::seed_seq sseq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                           static_cast<std::uint32_t>(trial)};
        std::mt19937_64 rng(sseq);
        std::uniform_real_distribution<double> unif(-1.0, 1.0);

        std::vector<Eigen::MatrixXcd> ops(static_cast<size_t>(q));
        Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(opts.dim, opts.dim);
        for (auto& op : ops) {
            Eigen::MatrixXd real(opts.dim, opts.dim);
            for (int i = 0; i < opts.dim; ++i)
                for (int j = 0; j < opts.dim; ++j) real(i, j) = unif(rng);
            op = real.cast<std::complex<double>>();
            sum += op;
        }

        std::vector<double> logx, logerr;
        for (double x : opts.x_ladder) {
            Eigen::MatrixXcd f = Eigen::MatrixXcd::Identity(opts.dim, opts.dim);
            for (const auto& [op, t] : ladder)
                f *= (t * x * ops[static_cast<size_t>(op)]).exp().eval();
            Eigen::MatrixXcd exact = (x * sum).exp();
            double err = (f - exact).norm();
            if (!std::isfinite(err))
                throw std::runtime_error("verify_order_numeric: non-finite matrix exponential");
            if (err < 1e-13 && logx.size() >= 3) continue;  // rounding floor
            logx.push_back(std::log(x));
            logerr.push_back(std::log(std::max(err, 1e-300)));
        }

        // least-squares slope of log err vs log x
        const double n = static_cast<double>(logx.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < logx.size(); ++i) {
            sx += logx[i];
            sy += logerr[i];
            sxx += logx[i] * logx[i];
            sxy += logx[i] * logerr[i];
        }
        slope_sum += (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    return slope_sum / trials;
}

}  // namespace splitgen
