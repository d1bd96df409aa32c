#pragma once

#include <Eigen/Dense>

namespace gjms {

// Ambient dimensions never exceed 8 (spheres up to S^7), so fixed-capacity
// vectors keep every hot loop allocation-free.
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, 8, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 8, 8>;

}  // namespace gjms
