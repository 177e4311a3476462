#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "copvar/numeric.hpp"
#include "copvar/series.hpp"

namespace copvar {

class SchwarzSpec;

// omega(z) = c with |c| <= 1.
struct Constant {
    Complex value{0.0, 0.0};
};

// omega(z) = e^{i theta}.
struct Rotation {
    double theta = 0.0;
};

// omega(z) = -(phi(z) + x) / (1 + x phi(z)) with phi(z) = (z - pole)/(1 - pole z)
// and x in [0, 1). The pole is supplied by the evaluation context (the pole of
// the enclosing candidate). x = 1 degenerates to the constant -1.
struct MoebiusX {
    double x = 0.0;
};

// omega(z) = rotation * prod_k (z - a_k) / (1 - conj(a_k) z), |a_k| < 1,
// |rotation| = 1.
struct Blaschke {
    Complex rotation{1.0, 0.0};
    std::vector<Complex> zeros;
};

// omega(z) = sum_k w_k omega_k(z) with w_k >= 0, sum w_k = 1.
struct ConvexMix {
    std::vector<double> weights;
    std::vector<SchwarzSpec> parts;
};

// A holomorphic self-map of the unit disc into its closure. Every variant
// satisfies sup_{|z|<1} |omega(z)| <= 1 by construction; constructors reject
// parameters that would break that.
class SchwarzSpec {
public:
    using Node = std::variant<Constant, Rotation, MoebiusX, Blaschke, ConvexMix>;

    SchwarzSpec(Constant c);   // requires |c| <= 1
    SchwarzSpec(Rotation r);   // wraps theta into [0, 2 pi)
    SchwarzSpec(MoebiusX m);   // x in [0, 1]; x == 1 stored as Constant(-1)
    SchwarzSpec(Blaschke b);   // renormalises rotation onto the circle, requires |zeros| < 1
    SchwarzSpec(ConvexMix m);  // requires nonnegative weights; renormalises to unit sum

    const Node& node() const { return node_; }

    // True for constant omega (Constant and Rotation variants); only those
    // candidates are certified members of the concave class.
    bool is_constant() const;

private:
    Node node_;
};

// omega(z) for |z| < 1. `pole` parametrises the MoebiusX variant; the other
// variants ignore it.
Complex evaluate(const SchwarzSpec& spec, Complex z, double pole);

// Taylor data c_0..c_K of omega at a point p in (0,1).
struct SchwarzCoefficients {
    double p = 0.0;
    std::vector<Complex> c;
};

// (1 - |c0|^2)/(1 - p^2) - |c1|; nonnegative up to roundoff for genuine
// self-maps (Schwarz-Pick).
double schwarz_pick_slack(const SchwarzCoefficients& sc);

// Closed forms where available (Constant, Rotation, MoebiusX orders 0..2,
// ConvexMix by linearity), contour extraction otherwise.
SchwarzCoefficients coefficients_at(const SchwarzSpec& spec, double p, int max_order,
                                    int nodes = kDefaultNodes);

// Max |omega| over a polar grid of `radial_levels` radii up to 0.999 and
// `angular_nodes` angles. Callers assert <= 1 + 1e-9.
double validate(const SchwarzSpec& spec, int radial_levels, int angular_nodes, double pole);

// Deterministic pseudo-random spec: uniformly chosen variant, Blaschke zeros
// area-uniform in the disc of radius 0.95, rotations uniform on the circle,
// mixes of at most 3 non-mix parts.
SchwarzSpec sample(std::uint64_t seed, int max_degree);

// Canonical textual forms, e.g. `const:0.5+0.1i`, `rot:1.5708`, `moebius:0.9`,
// `blaschke:1;0.3+0.1i,0.2-0.4i`, `mix:0.5,0.5|rot:0|const:-1`.
std::string format_spec(const SchwarzSpec& spec);
SchwarzSpec parse_spec(std::string_view text);

}  // namespace copvar
