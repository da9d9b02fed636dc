#ifndef KINGS_MINIMIZE_H
#define KINGS_MINIMIZE_H

#include <cstddef>
#include <functional>
#include <vector>

namespace kings {

struct SimplexOptions {
    /// Initial simplex edge length in every coordinate.
    double initial_step = 0.1;
    /// Stop once the simplex characteristic size falls below this.
    double size_tolerance = 1e-10;
    std::size_t max_iterations = 20000;
};

struct SimplexResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

/// Derivative-free Nelder-Mead minimization (GSL nmsimplex2).
SimplexResult minimize_simplex(const std::function<double(const std::vector<double> &)> &f,
                               std::vector<double> x0, const SimplexOptions &options = {});

}  // namespace kings

#endif
