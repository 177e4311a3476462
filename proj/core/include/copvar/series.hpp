#pragma once

#include <functional>
#include <vector>

#include "copvar/numeric.hpp"

namespace copvar {

using ComplexMap = std::function<Complex(Complex)>;

inline constexpr int kDefaultNodes = 512;

// Positively oriented circle |z - center| = radius, discretised by `nodes`
// equispaced points for trapezoid quadrature. `nodes` must be even and >= 16.
struct ContourSpec {
    Complex center{0.0, 0.0};
    double radius = 0.0;
    int nodes = kDefaultNodes;
};

void validate(const ContourSpec& contour);

// Half the distance from p to the nearer of 0 and the unit circle. Circles
// of this radius around p stay strictly inside the annulus of analyticity of
// the candidate functions.
double default_expansion_radius(double p);

// n-th Laurent coefficient of f at contour.center,
//     a_n = (1/2 pi i) \oint f(z) (z - center)^{-(n+1)} dz,  n >= -1,
// by the trapezoid rule. Converges geometrically in the node count for f
// analytic on an annulus containing the contour.
Complex contour_coefficient(const ComplexMap& f, const ContourSpec& contour, int n);

// Taylor coefficients c_0..c_{max_order} of f at contour.center, all computed
// from one pass of samples over the contour. Requires f analytic on the
// closed disc bounded by the contour.
std::vector<Complex> taylor_coefficients(const ComplexMap& f, const ContourSpec& contour,
                                         int max_order);

// f'(point), extracted as the order-1 Taylor coefficient on a circle of the
// given radius.
Complex derivative_at(const ComplexMap& f, Complex point, double radius,
                      int nodes = kDefaultNodes);

}  // namespace copvar
