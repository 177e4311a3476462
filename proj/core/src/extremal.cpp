#include "copvar/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace copvar {

namespace {

void check_p(double p, const char* what) {
    if (!is_finite(p) || !(p > 0.0) || !(p < 1.0)) {
        throw std::invalid_argument(std::string(what) + ": p must lie in (0,1)");
    }
}

}  // namespace

Complex kernel_eval(double p, Complex z, KernelVariant variant) {
    check_p(p, "kernel_eval");
    const Complex d = z - p;
    if (d == Complex{0.0, 0.0}) {
        throw std::invalid_argument("kernel_eval: z must differ from the pole");
    }
    const double p2 = p * p;
    const double c1 = 1.0 / (1.0 - p2 * p2);
    const double c2 = (2.0 * p - p2 * p) / (1.0 + p2);
    const double c3 = (p2 - p2 * p2) / (1.0 + p2);
    Complex v = c1 / d + c2 / (d * d) + c3 / (d * d * d);
    if (variant == KernelVariant::reflected) {
        const Complex r = 1.0 - p * z;
        if (r == Complex{0.0, 0.0}) {
            throw std::invalid_argument("kernel_eval: z must differ from 1/p");
        }
        v += c1 * p / r + c2 / (r * r) + c3 * z / (r * r * r);
    }
    require_finite(v, "kernel_eval");
    return v;
}

double q_poly(double p, double x) {
    const double p2 = p * p;
    const double p3 = p2 * p;
    const double p4 = p2 * p2;
    const double a = 4.0 * p4 * (-2.0 + p2);
    const double b = 4.0 * p3 * (3.0 - p2);
    const double c = 1.0 - 8.0 * p2 + 5.0 * p4 - 2.0 * p4 * p2;
    return (a * x + b) * x + c;
}

double kernel_identity_residual(double p, double theta) {
    check_p(p, "kernel_identity_residual");
    const Complex z = std::polar(1.0, theta);
    const Complex k = kernel_eval(p, z, KernelVariant::reflected);
    const double m2 = std::norm(1.0 - p * z);  // |1 - p e^{i theta}|^2
    const Complex lhs = z * k * (1.0 + p * p) * (m2 * m2 * m2);
    return std::abs(lhs - q_poly(p, std::cos(theta)));
}

double s_poly(double p) {
    return 1.0 + p * p * (-8.0 + p * (-12.0 + p * (-3.0 + p * (4.0 + 2.0 * p))));
}

double s_root() {
    double lo = 0.25;
    double hi = 0.35;
    // S(0.25) > 0 > S(0.35); bisection keeps the sign change bracketed
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (s_poly(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

KernelReport kernel_positivity(double p, int grid) {
    check_p(p, "kernel_positivity");
    if (grid < 256) {
        throw std::invalid_argument("kernel_positivity: grid must be >= 256");
    }
    KernelReport report;
    report.p = p;
    report.theta_grid.reserve(static_cast<std::size_t>(grid));
    report.values.reserve(static_cast<std::size_t>(grid));
    report.identity_residuals.reserve(static_cast<std::size_t>(grid));
    report.min_real = std::numeric_limits<double>::infinity();

    Complex sum{0.0, 0.0};
    Complex comp{0.0, 0.0};  // Kahan correction; mean is checked to 1e-12
    for (int k = 0; k < grid; ++k) {
        const double theta = 2.0 * kPi * k / grid;
        const Complex z = std::polar(1.0, theta);
        const Complex v = z * kernel_eval(p, z, KernelVariant::reflected);
        report.theta_grid.push_back(theta);
        report.values.push_back(v);
        const double resid = kernel_identity_residual(p, theta);
        report.identity_residuals.push_back(resid);
        report.min_real = std::min(report.min_real, v.real());
        report.max_abs_imag = std::max(report.max_abs_imag, std::abs(v.imag()));
        report.max_identity_residual = std::max(report.max_identity_residual, resid);
        const Complex y = v - comp;
        const Complex t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    report.mean = sum / static_cast<double>(grid);
    return report;
}

Complex phi_functional(double p, const SchwarzSpec& omega, PhiMode mode, int nodes,
                       KernelVariant variant) {
    check_p(p, "phi_functional");
    if (mode == PhiMode::coefficients) {
        const SchwarzCoefficients sc = coefficients_at(omega, p, 2, nodes);
        const double p2 = p * p;
        return sc.c[0] / (1.0 - p2 * p2) + ((2.0 * p - p2 * p) / (1.0 + p2)) * sc.c[1] +
               ((p2 - p2 * p2) / (1.0 + p2)) * sc.c[2];
    }
    // (1/2 pi i) \oint kernel(z) omega(z) dz on |z| = (1+p)/2: the circle
    // encloses the pole p and stays inside the disc where omega is defined
    if (nodes < 16 || nodes % 2 != 0) {
        throw std::invalid_argument("phi_functional: node count must be even and >= 16");
    }
    const double radius = 0.5 * (1.0 + p);
    Complex sum{0.0, 0.0};
    for (int j = 0; j < nodes; ++j) {
        const Complex z = std::polar(radius, 2.0 * kPi * j / nodes);
        sum += kernel_eval(p, z, variant) * evaluate(omega, z, p) * z;
    }
    const Complex phi = sum / static_cast<double>(nodes);
    require_finite(phi, "phi_functional");
    return phi;
}

GMax gmax(double p) {
    check_p(p, "gmax");
    const double p2 = p * p;
    const double vertex = (2.0 - p2) / (2.0 * p);
    if (vertex >= 1.0) {
        return GMax{2.0 - p2, 1.0};
    }
    return GMax{(2.0 - p2) * vertex + p * (1.0 - vertex * vertex), vertex};
}

const char* coeff_name(CoeffTag tag) { return tag == CoeffTag::a0 ? "a0" : "a1"; }

double counterexample_coeff(double p, double x, CoeffTag which) {
    check_p(p, "counterexample_coeff");
    if (!(x >= 0.0) || !(x <= 1.0)) {
        throw std::invalid_argument("counterexample_coeff: x must lie in [0,1]");
    }
    const double q = 1.0 - p * p;
    const double p2 = p * p;
    if (which == CoeffTag::a0) {
        return -p / (q * q) *
               (1.0 + (1.0 - x) * p2 / (1.0 + p2) * (p * (1.0 + x) - (2.0 - p2)));
    }
    return -p2 / (q * q * q) *
           (1.0 + (1.0 - x) / (1.0 + p2) * (-1.0 + (1.0 + x) * (2.0 * p - p2 * x)));
}

namespace {

// Bound exceedance of the candidate (p, omega_x) in product form, free of the
// cancellation that bound - value would suffer near the threshold.
double exceedance_margin(double p, double x, CoeffTag which) {
    const double q = 1.0 - p * p;
    const double p2 = p * p;
    if (which == CoeffTag::a0) {
        return p / (q * q) * ((1.0 - x) * p2 / (1.0 + p2)) * (p * (1.0 + x) - (2.0 - p2));
    }
    const double r = -1.0 + 2.0 * p + x * (2.0 * p - p2) - p2 * x * x;
    return p2 / (q * q * q) * (1.0 - x) * r / (1.0 + p2);
}

}  // namespace

std::optional<CounterexampleFinding> counterexample_search(double p, CoeffTag which, int grid) {
    check_p(p, "counterexample_search");
    if (grid < 16) {
        throw std::invalid_argument("counterexample_search: grid must be >= 16");
    }
    const auto scan = [&](double lo, double hi) {
        double best_margin = -std::numeric_limits<double>::infinity();
        double best_x = lo;
        for (int i = 0; i < grid; ++i) {
            const double x = lo + (hi - lo) * i / (grid - 1);
            const double margin = exceedance_margin(p, x, which);
            if (margin > best_margin) {
                best_margin = margin;
                best_x = x;
            }
        }
        return std::pair<double, double>{best_margin, best_x};
    };

    auto [margin, x] = scan(0.0, 1.0);
    const double h = 1.0 / (grid - 1);
    const auto refined = scan(std::max(0.0, x - h), std::min(1.0, x + h));
    if (refined.first > margin) {
        margin = refined.first;
        x = refined.second;
    }
    if (!(margin > 0.0)) {
        return std::nullopt;
    }
    CounterexampleFinding finding;
    finding.p = p;
    finding.x = x;
    finding.coefficient = which;
    finding.value = counterexample_coeff(p, x, which);
    finding.bound = which == CoeffTag::a0 ? re_a0_lower_bound(p) : a1_modulus_bound(p);
    finding.margin = margin;
    return finding;
}

}  // namespace copvar
