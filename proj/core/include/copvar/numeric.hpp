#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace copvar {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// A computation produced a non-finite intermediate value. Raised instead of
// letting NaN/Inf propagate into verification results.
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A variability region was requested outside the p-window in which it is
// established.
class window_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline bool is_finite(double v) noexcept { return std::isfinite(v); }

inline bool is_finite(Complex v) noexcept {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

inline void require_finite(Complex v, const char* what) {
    if (!is_finite(v)) {
        throw numeric_error(std::string(what) + ": non-finite value");
    }
}

// Shortest round-trip decimal text; stable across runs of the same binary.
std::string format_double(double v);

// Canonical textual form: "a", "a+bi" or "a-bi".
std::string format_complex(Complex v);

}  // namespace copvar
