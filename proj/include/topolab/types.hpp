#pragma once

#include <complex>

#include <Eigen/Dense>

namespace topolab {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec4c = Eigen::Vector4cd;
using Mat4c = Eigen::Matrix4cd;

}  // namespace topolab
