#include "aisforge/optim.hpp"

#include <cmath>
#include <limits>

namespace aisforge {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double safe_eval(const std::function<double(const Eigen::VectorXd&)>& f,
                 const Eigen::VectorXd& x, int& evals) {
    ++evals;
    const double v = f(x);
    return std::isfinite(v) ? v : kInf;
}

Eigen::VectorXd central_gradient(const std::function<double(const Eigen::VectorXd&)>& f,
                                 const Eigen::VectorXd& x, double fd_step, int& evals) {
    Eigen::VectorXd g(x.size());
    Eigen::VectorXd xp = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double h = fd_step * std::max(1.0, std::abs(x[i]));
        const double xi = x[i];
        xp[i] = xi + h;
        const double fp = safe_eval(f, xp, evals);
        xp[i] = xi - h;
        const double fm = safe_eval(f, xp, evals);
        xp[i] = xi;
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

}  // namespace

MinimizeResult minimize_bfgs(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& x0, const MinimizeOptions& opts) {
    MinimizeResult res;
    res.x = x0;
    const Eigen::Index n = x0.size();

    double fx = safe_eval(f, res.x, res.evaluations);
    if (!std::isfinite(fx)) {
        res.fx = fx;
        return res;
    }

    Eigen::VectorXd g = central_gradient(f, res.x, opts.fd_step, res.evaluations);
    Eigen::MatrixXd h_inv = Eigen::MatrixXd::Identity(n, n);

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        res.iterations = iter + 1;
        if (!g.allFinite()) break;
        if (g.cwiseAbs().maxCoeff() < opts.gradient_tol * std::max(1.0, std::abs(fx))) {
            res.converged = true;
            break;
        }

        Eigen::VectorXd d = -(h_inv * g);
        double dir_deriv = d.dot(g);
        if (!(dir_deriv < 0.0)) {
            h_inv.setIdentity();
            d = -g;
            dir_deriv = d.dot(g);
        }

        // Armijo backtracking.
        constexpr double c1 = 1e-4;
        double step = 1.0;
        double f_new = kInf;
        Eigen::VectorXd x_new;
        bool accepted = false;
        for (int ls = 0; ls < 50; ++ls) {
            x_new = res.x + step * d;
            f_new = safe_eval(f, x_new, res.evaluations);
            if (f_new <= fx + c1 * step * dir_deriv) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            // No descent along d; declare convergence only if the gradient is small-ish.
            res.converged =
                g.cwiseAbs().maxCoeff() < 100.0 * opts.gradient_tol * std::max(1.0, std::abs(fx));
            break;
        }

        const Eigen::VectorXd s = x_new - res.x;
        if (s.cwiseAbs().maxCoeff() <
            opts.step_tol * std::max(1.0, res.x.cwiseAbs().maxCoeff())) {
            res.x = x_new;
            fx = f_new;
            res.converged = true;
            break;
        }

        const Eigen::VectorXd g_new =
            central_gradient(f, x_new, opts.fd_step, res.evaluations);
        const Eigen::VectorXd y = g_new - g;
        const double sy = s.dot(y);
        if (sy > 1e-12) {
            const double rho = 1.0 / sy;
            const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
            h_inv = (eye - rho * s * y.transpose()) * h_inv *
                        (eye - rho * y * s.transpose()) +
                    rho * s * s.transpose();
        }
        res.x = x_new;
        fx = f_new;
        g = g_new;
    }

    res.fx = fx;
    return res;
}

}  // namespace aisforge
