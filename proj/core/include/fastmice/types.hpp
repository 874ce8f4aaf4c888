#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace fastmice {

// Row-major everywhere: samples are rows and all hot loops walk rows.
using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

using Labels = std::vector<int>;

}  // namespace fastmice
