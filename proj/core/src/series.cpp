#include "copvar/series.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace copvar {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) {
        throw numeric_error("format_double: conversion failed");
    }
    return std::string(buf, ptr);
}

std::string format_complex(Complex v) {
    if (v.imag() == 0.0) {
        return format_double(v.real());
    }
    std::string out = format_double(v.real());
    if (!(v.imag() < 0.0)) {
        out += '+';
    }
    out += format_double(v.imag());
    out += 'i';
    return out;
}

void validate(const ContourSpec& contour) {
    if (!(contour.radius > 0.0) || !is_finite(contour.center) || !is_finite(contour.radius)) {
        throw std::invalid_argument("contour: radius must be positive and finite");
    }
    if (contour.nodes < 16 || contour.nodes % 2 != 0) {
        throw std::invalid_argument("contour: node count must be even and >= 16");
    }
}

double default_expansion_radius(double p) {
    if (!(p > 0.0) || !(p < 1.0)) {
        throw std::invalid_argument("default_expansion_radius: p must lie in (0,1)");
    }
    return 0.5 * std::min(p, 1.0 - p);
}

namespace {

std::vector<Complex> sample_contour(const ComplexMap& f, const ContourSpec& contour) {
    const int m = contour.nodes;
    std::vector<Complex> values(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const double theta = 2.0 * kPi * j / m;
        const Complex z = contour.center + std::polar(contour.radius, theta);
        values[static_cast<std::size_t>(j)] = f(z);
        require_finite(values[static_cast<std::size_t>(j)], "contour integrand");
    }
    return values;
}

// (1/M) sum_j f_j e^{-i n theta_j} / r^n
Complex fourier_mode(const std::vector<Complex>& values, double radius, int n) {
    const int m = static_cast<int>(values.size());
    Complex sum{0.0, 0.0};
    for (int j = 0; j < m; ++j) {
        const double theta = 2.0 * kPi * j / m;
        sum += values[static_cast<std::size_t>(j)] * std::polar(1.0, -n * theta);
    }
    const Complex coeff = sum / (static_cast<double>(m) * std::pow(radius, n));
    require_finite(coeff, "contour coefficient");
    return coeff;
}

}  // namespace

Complex contour_coefficient(const ComplexMap& f, const ContourSpec& contour, int n) {
    validate(contour);
    if (n < -1) {
        throw std::invalid_argument("contour_coefficient: order must be >= -1");
    }
    return fourier_mode(sample_contour(f, contour), contour.radius, n);
}

std::vector<Complex> taylor_coefficients(const ComplexMap& f, const ContourSpec& contour,
                                         int max_order) {
    validate(contour);
    if (max_order < 0) {
        throw std::invalid_argument("taylor_coefficients: max_order must be >= 0");
    }
    const std::vector<Complex> values = sample_contour(f, contour);
    std::vector<Complex> coeffs(static_cast<std::size_t>(max_order) + 1);
    for (int n = 0; n <= max_order; ++n) {
        coeffs[static_cast<std::size_t>(n)] = fourier_mode(values, contour.radius, n);
    }
    return coeffs;
}

Complex derivative_at(const ComplexMap& f, Complex point, double radius, int nodes) {
    return contour_coefficient(f, ContourSpec{point, radius, nodes}, 1);
}

}  // namespace copvar
