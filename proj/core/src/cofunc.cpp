#include "copvar/cofunc.hpp"

#include <cmath>
#include <stdexcept>

namespace copvar {

CoCandidate::CoCandidate(double p, SchwarzSpec omega)
    : p_(p), omega_(std::move(omega)), certified_(omega_.is_constant()) {
    if (!is_finite(p) || !(p > 0.0) || !(p < 1.0)) {
        throw std::invalid_argument("candidate: p must lie in (0,1)");
    }
}

Complex evaluate_f(const CoCandidate& cand, Complex z, double pole_guard) {
    if (!(std::abs(z) < 1.0)) {
        throw std::invalid_argument("evaluate_f: |z| must be < 1");
    }
    const double p = cand.p();
    if (!(std::abs(z - p) > pole_guard)) {
        throw std::invalid_argument("evaluate_f: z too close to the pole");
    }
    const Complex w = cand.omega_at(z);
    const Complex numerator = z - (p / (1.0 + p * p)) * (1.0 + w) * z * z;
    const Complex denominator = (1.0 - z / p) * (1.0 - z * p);
    const Complex v = numerator / denominator;
    require_finite(v, "evaluate_f");
    return v;
}

namespace {

void check_p(double p, const char* what) {
    if (!is_finite(p) || !(p > 0.0) || !(p < 1.0)) {
        throw std::invalid_argument(std::string(what) + ": p must lie in (0,1)");
    }
}

}  // namespace

Complex residue_from_c0(double p, Complex c0) {
    check_p(p, "residue_from_c0");
    const double d = 1.0 - p * p * p * p;
    return -p * p / d + (p * p * p * p / d) * c0;
}

Complex a0_from_c(double p, Complex c0, Complex c1) {
    check_p(p, "a0_from_c");
    const double p2 = p * p;
    const double d = 1.0 - p2 * p2;
    const Complex rhs = ((2.0 * p2 - p2 * p2) / d) * c0 + (p2 * p / (1.0 + p2)) * c1;
    return (p / (1.0 - p2)) * (rhs - (1.0 - p2 + p2 * p2) / d);
}

Complex a1_from_c(double p, Complex c0, Complex c1, Complex c2) {
    check_p(p, "a1_from_c");
    const double p2 = p * p;
    const double d = 1.0 - p2 * p2;
    const Complex rhs = c0 / d + ((2.0 * p - p2 * p) / (1.0 + p2)) * c1 +
                        ((p2 - p2 * p2) / (1.0 + p2)) * c2;
    const double scale = p / (1.0 - p2);
    return scale * scale * (rhs - p2 / d);
}

LaurentTriple laurent_closed(const CoCandidate& cand, int nodes) {
    const SchwarzCoefficients sc = coefficients_at(cand.omega(), cand.p(), 2, nodes);
    return LaurentTriple{residue_from_c0(cand.p(), sc.c[0]),
                         a0_from_c(cand.p(), sc.c[0], sc.c[1]),
                         a1_from_c(cand.p(), sc.c[0], sc.c[1], sc.c[2])};
}

LaurentTriple laurent_oracle(const CoCandidate& cand, const ContourSpec& contour) {
    validate(contour);
    const double p = cand.p();
    if (std::abs(contour.center - p) > 1e-12 * (1.0 + p)) {
        throw std::invalid_argument("laurent_oracle: contour must be centered at the pole");
    }
    if (!(contour.radius < std::min(p, 1.0 - p))) {
        throw std::invalid_argument("laurent_oracle: contour radius must be < min(p, 1-p)");
    }
    const ComplexMap f = [&](Complex z) { return evaluate_f(cand, z); };
    return LaurentTriple{contour_coefficient(f, contour, -1), contour_coefficient(f, contour, 0),
                         contour_coefficient(f, contour, 1)};
}

LaurentTriple laurent_oracle(const CoCandidate& cand, int nodes) {
    const double p = cand.p();
    return laurent_oracle(cand, ContourSpec{Complex{p, 0.0}, default_expansion_radius(p), nodes});
}

std::pair<Complex, Complex> normalization_check(const CoCandidate& cand, int nodes) {
    const Complex f0 = evaluate_f(cand, Complex{0.0, 0.0});
    // contour around 0 must stay clear of the pole at p
    const Complex fprime0 = derivative_at([&](Complex z) { return evaluate_f(cand, z); },
                                          Complex{0.0, 0.0}, cand.p() / 2.0, nodes);
    return {f0, fprime0};
}

}  // namespace copvar
