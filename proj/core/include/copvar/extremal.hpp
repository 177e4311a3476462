#pragma once

#include <optional>
#include <vector>

#include "copvar/regions.hpp"
#include "copvar/schwarz.hpp"

namespace copvar {

// kappa: the bare kernel
//   kappa_p(z) = 1/((1-p^4)(z-p)) + (2p-p^3)/((1+p^2)(z-p)^2)
//              + (p^2-p^4)/((1+p^2)(z-p)^3).
// reflected: K_p, same singular part at p, each term completed by its
// reflection across the unit circle so that z K_p(z) is real and (for small
// p) nonnegative on |z| = 1.
enum class KernelVariant { kappa, reflected };

Complex kernel_eval(double p, Complex z, KernelVariant variant);

// Q_p(x) = 4p^4(-2+p^2) x^2 + 4p^3(3-p^2) x + 1 - 8p^2 + 5p^4 - 2p^6;
// equals e^{i theta} K_p(e^{i theta}) (1+p^2) |1-p e^{i theta}|^6 at
// x = cos theta.
double q_poly(double p, double x);

// |e^{i theta} K_p(e^{i theta}) (1+p^2)|1-p e^{i theta}|^6 - Q_p(cos theta)|,
// both sides evaluated independently.
double kernel_identity_residual(double p, double theta);

// S(p) = Q_p(-1) = 1 - 8p^2 - 12p^3 - 3p^4 + 4p^5 + 2p^6, decreasing on
// (0,1]; its root in (0,1) is 1 - sqrt(2)/2.
double s_poly(double p);

// Root of S by bisection on [0.25, 0.35] to 1e-12.
double s_root();

// Circle samples of the kernel: values are e^{i theta} K_p(e^{i theta}).
// For p <= 1-sqrt(2)/2 the values are real and nonnegative up to roundoff;
// the mean equals the residue of K_p at p, 1/(1-p^4), to quadrature accuracy.
struct KernelReport {
    double p = 0.0;
    std::vector<double> theta_grid;
    std::vector<Complex> values;
    std::vector<double> identity_residuals;
    double min_real = 0.0;
    double max_abs_imag = 0.0;
    double max_identity_residual = 0.0;
    Complex mean{0.0, 0.0};
};

KernelReport kernel_positivity(double p, int grid);

enum class PhiMode { coefficients, contour };

// The a1 coefficient functional
//   Phi_p(omega) = c0/(1-p^4) + (2p-p^3)/(1+p^2) c1 + (p^2-p^4)/(1+p^2) c2
// in coefficient mode, or (1/2 pi i) \oint kernel(z) omega(z) dz over a circle
// of radius (1+p)/2 in contour mode. |Phi_p| <= 1/(1-p^4) for
// p <= 1-sqrt(2)/2, with equality for omega == 1.
Complex phi_functional(double p, const SchwarzSpec& omega, PhiMode mode,
                       int nodes = kDefaultNodes,
                       KernelVariant variant = KernelVariant::kappa);

struct GMax {
    double value = 0.0;
    double argmax = 0.0;
};

// Maximum over [0,1] of g(x) = (2-p^2) x + p(1-x^2): g(1) = 2-p^2 when the
// vertex x_M = (2-p^2)/(2p) is >= 1 (p <= sqrt(3)-1), g(x_M) at the vertex
// otherwise.
GMax gmax(double p);

enum class CoeffTag { a0, a1 };

const char* coeff_name(CoeffTag tag);

// Closed-form coefficient of the candidate (p, omega_x):
//   a0 = -p/(1-p^2)^2 (1 + (1-x)p^2/(1+p^2) (p(1+x) - (2-p^2)))
//   a1 = -p^2/(1-p^2)^3 (1 + (1-x)/(1+p^2) (-1 + (1+x)(2p - p^2 x)))
double counterexample_coeff(double p, double x, CoeffTag which);

// A candidate of the representation family that leaves the region permitted
// to the closed convex hull of the concave class.
struct CounterexampleFinding {
    double p = 0.0;
    double x = 0.0;
    CoeffTag coefficient = CoeffTag::a0;
    double value = 0.0;
    double bound = 0.0;
    double margin = 0.0;  // bound exceedance, > 0
};

// Scans x in [0,1] on a uniform grid plus one refinement pass around the best
// point and returns the maximal-margin exceedance, if any. Findings exist
// exactly for p > sqrt(3)-1 (a0) resp. p > 1-sqrt(2)/2 (a1).
std::optional<CounterexampleFinding> counterexample_search(double p, CoeffTag which,
                                                           int grid = 1024);

}  // namespace copvar
