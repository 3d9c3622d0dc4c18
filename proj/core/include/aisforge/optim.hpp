#pragma once

#include <Eigen/Dense>
#include <functional>

namespace aisforge {

struct MinimizeOptions {
    int max_iterations = 200;
    double gradient_tol = 1e-6;  // relative to max(1, |f|)
    double step_tol = 1e-11;
    double fd_step = 1e-6;  // central-difference step, scaled per coordinate
};

struct MinimizeResult {
    Eigen::VectorXd x;
    double fx = 0.0;
    bool converged = false;
    int iterations = 0;
    int evaluations = 0;
};

// Dense BFGS with Armijo backtracking and central-difference gradients.
// Deterministic for a given objective and start point. Non-finite objective
// values are treated as +inf by the line search.
MinimizeResult minimize_bfgs(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& x0,
                             const MinimizeOptions& opts = {});

}  // namespace aisforge
