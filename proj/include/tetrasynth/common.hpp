#pragma once

#include <complex>

#include <Eigen/Dense>

namespace tetrasynth {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;
using Vector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline bool all_finite(const Matrix& m) {
    return m.allFinite();
}

}  // namespace tetrasynth
