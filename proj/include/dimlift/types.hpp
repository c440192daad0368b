#pragma once

#include <Eigen/Dense>
#include <functional>

namespace dimlift {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Scalar function on R^d.
using SpatialFn = std::function<double(const Vector&)>;
/// Scalar function on R^d x (0, T).
using SpaceTimeFn = std::function<double(const Vector&, double)>;

}  // namespace dimlift
