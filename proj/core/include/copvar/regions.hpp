#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "copvar/cofunc.hpp"

namespace copvar {

// Membership tolerance is absolute plus this fraction of the disc radius.
inline constexpr double kDiscRelTol = 1e-12;

// A closed disc in the complex plane; the shape of every variability region.
struct Disc {
    Complex center{0.0, 0.0};
    double radius = 0.0;

    // |point - center| - radius; negative strictly inside.
    double boundary_excess(Complex point) const;

    bool contains(Complex point, double tol) const {
        return boundary_excess(point) <= tol + kDiscRelTol * radius;
    }
};

enum class RegionTag { residue, a0, a1 };

const char* region_name(RegionTag region);

// Upper end of the p-interval on which the corresponding disc is known to be
// the exact variability domain: 1 for the residue, sqrt(3)-1 for a0,
// 1 - sqrt(2)/2 for a1 (the latter two are the roots of p^2+2p-2 and of
// S(p) = 1-8p^2-12p^3-3p^4+4p^5+2p^6 in (0,1)).
struct ValidityWindow {
    RegionTag region;
    double p_max;
};

ValidityWindow validity_window(RegionTag region);
bool in_window(RegionTag region, double p);

// |a_{-1} + p^2/(1-p^4)| <= p^4/(1-p^4), all p in (0,1).
Disc residue_disc(double p);

// a0 disc in a0-coordinates: center -p(1-p^2+p^4)/((1-p^2)(1-p^4)),
// radius p^3(2-p^2)/((1-p^2)(1-p^4)). Established for p <= sqrt(3)-1 only;
// throws window_error beyond (the naive extension is refuted, not merely
// unproven as sharp).
Disc a0_disc(double p);

// a1 disc in a1-coordinates: center -p^4/((1-p^2)^2(1-p^4)),
// radius p^2/((1-p^2)^2(1-p^4)). Established for p <= 1-sqrt(2)/2 only.
Disc a1_disc(double p);

// Re a_0 >= -p/(1-p^2)^2 over the concave class, all p.
double re_a0_lower_bound(double p);

// |a_1| <= p^2/(1-p^2)^3 over the concave class, all p.
double a1_modulus_bound(double p);

// Slack (1+p^2)/p - |p + a_0 (1-p^2)/a_{-1}|; nonnegative for members of the
// concave class.
double livingston_a0_check(double p, Complex a_minus1, Complex a0);

// Coefficient of the extremal rotation family: center + radius e^{i theta} of
// the requested disc (constant omega = e^{i theta}, so c0 enters linearly and
// theta acts as a rotation about the center).
Complex boundary_point(double p, RegionTag which, double theta);

struct MinSearchResult {
    double min_re_a0 = 0.0;
    double phi = 0.0;        // angle of the argmin tau = e^{i phi}
    Complex residue;         // argmin a_{-1}
    Complex a0;
};

// Grid minimisation of Re a_0 over the parametrisation
//   a_0 = a_{-1}/(1-p^2) (-p + tau (1+p^2)/p),  tau = e^{i phi},
// with a_{-1} on the residue disc. Re a_0 is linear in a_{-1}, so the search
// walks the disc boundary. Converges to -p/(1-p^2)^2 at tau = 1,
// a_{-1} = -p^2/(1-p^2) as the grids refine.
MinSearchResult min_re_a0_search(double p, int grid_phi, int grid_disc);

// An uncertified-member exceedance of a certified-only bound (the expected
// behaviour above the validity thresholds), reported, never a violation.
struct FindingSummary {
    std::string kind;  // "re_a0_bound" | "a1_modulus_bound"
    long count = 0;
    double max_margin = 0.0;
    long example_index = -1;
    std::string example_spec;
    double example_value = 0.0;
    double example_bound = 0.0;
};

struct VerificationReport {
    double p = 0.0;
    long samples = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    int max_degree = 0;
    int nodes = 0;
    int threads = 0;
    bool a0_window = false;  // p <= sqrt(3)-1: disc membership asserted for all samples
    bool a1_window = false;  // p <= 1-sqrt(2)/2

    long residue_checked = 0;
    long residue_violations = 0;
    long residue_identity_checked = 0;
    long residue_identity_violations = 0;
    long a0_disc_checked = 0;
    long a0_disc_violations = 0;
    long a1_disc_checked = 0;
    long a1_disc_violations = 0;
    long re_a0_checked = 0;        // certified members only
    long re_a0_violations = 0;
    long a1_bound_checked = 0;     // certified members only
    long a1_bound_violations = 0;
    long rotation_boundary_checked = 0;   // rotations saturate all applicable discs
    long rotation_boundary_violations = 0;

    double max_boundary_excess = 0.0;  // over asserted disc checks
    long worst_index = -1;
    std::string worst_spec;

    std::vector<FindingSummary> findings;

    long total_violations() const;
};

// Samples n Schwarz specs (per-index seeds derived from `seed`), builds the
// candidate at p for each, and checks every bound that is asserted at this p:
// residue disc and the residue identity |a_{-1} + p^2/(1-p^4)| =
// p^4/(1-p^4) |c0| always; the a0/a1 discs for every sample inside their
// windows; the Re a0 and |a1| bounds for certified members only, with
// uncertified exceedances recorded as findings. threads <= 0 means one worker
// per hardware thread.
VerificationReport verify_samples(double p, long n_samples, std::uint64_t seed, double tol,
                                  int threads = 0, int max_degree = 3,
                                  int nodes = kDefaultNodes);

}  // namespace copvar
