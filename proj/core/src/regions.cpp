#include "copvar/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "copvar/rng.hpp"

namespace copvar {

namespace {

void check_p(double p, const char* what) {
    if (!is_finite(p) || !(p > 0.0) || !(p < 1.0)) {
        throw std::invalid_argument(std::string(what) + ": p must lie in (0,1)");
    }
}

// closed-interval windows with a roundoff cushion
constexpr double kWindowSlack = 1e-12;

}  // namespace

double Disc::boundary_excess(Complex point) const { return std::abs(point - center) - radius; }

const char* region_name(RegionTag region) {
    switch (region) {
        case RegionTag::residue:
            return "residue";
        case RegionTag::a0:
            return "a0";
        default:
            return "a1";
    }
}

ValidityWindow validity_window(RegionTag region) {
    switch (region) {
        case RegionTag::residue:
            return ValidityWindow{region, 1.0};
        case RegionTag::a0:
            return ValidityWindow{region, std::sqrt(3.0) - 1.0};
        default:
            return ValidityWindow{region, 1.0 - std::sqrt(2.0) / 2.0};
    }
}

bool in_window(RegionTag region, double p) {
    return p <= validity_window(region).p_max + kWindowSlack;
}

Disc residue_disc(double p) {
    check_p(p, "residue_disc");
    const double d = 1.0 - p * p * p * p;
    return Disc{Complex{-p * p / d, 0.0}, p * p * p * p / d};
}

Disc a0_disc(double p) {
    check_p(p, "a0_disc");
    if (!in_window(RegionTag::a0, p)) {
        throw window_error("a0 disc: established only for p <= sqrt(3)-1");
    }
    const double p2 = p * p;
    const double den = (1.0 - p2) * (1.0 - p2 * p2);
    return Disc{Complex{-p * (1.0 - p2 + p2 * p2) / den, 0.0}, p * p2 * (2.0 - p2) / den};
}

Disc a1_disc(double p) {
    check_p(p, "a1_disc");
    if (!in_window(RegionTag::a1, p)) {
        throw window_error("a1 disc: established only for p <= 1-sqrt(2)/2");
    }
    const double p2 = p * p;
    const double den = (1.0 - p2) * (1.0 - p2) * (1.0 - p2 * p2);
    return Disc{Complex{-p2 * p2 / den, 0.0}, p2 / den};
}

double re_a0_lower_bound(double p) {
    check_p(p, "re_a0_lower_bound");
    const double q = 1.0 - p * p;
    return -p / (q * q);
}

double a1_modulus_bound(double p) {
    check_p(p, "a1_modulus_bound");
    const double q = 1.0 - p * p;
    return p * p / (q * q * q);
}

double livingston_a0_check(double p, Complex a_minus1, Complex a0) {
    check_p(p, "livingston_a0_check");
    if (a_minus1 == Complex{0.0, 0.0}) {
        throw std::invalid_argument("livingston_a0_check: residue must be nonzero");
    }
    return (1.0 + p * p) / p - std::abs(p + a0 * (1.0 - p * p) / a_minus1);
}

Complex boundary_point(double p, RegionTag which, double theta) {
    Disc disc;
    switch (which) {
        case RegionTag::residue:
            disc = residue_disc(p);
            break;
        case RegionTag::a0:
            disc = a0_disc(p);
            break;
        default:
            disc = a1_disc(p);
            break;
    }
    return disc.center + std::polar(disc.radius, theta);
}

MinSearchResult min_re_a0_search(double p, int grid_phi, int grid_disc) {
    check_p(p, "min_re_a0_search");
    if (grid_phi < 64 || grid_disc < 64) {
        throw std::invalid_argument("min_re_a0_search: grids must be >= 64");
    }
    const Disc rd = residue_disc(p);
    const double q = 1.0 - p * p;
    MinSearchResult best;
    best.min_re_a0 = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_phi; ++i) {
        const double phi = 2.0 * kPi * i / grid_phi;
        const Complex tau = std::polar(1.0, phi);
        const Complex slope = (-p + tau * (1.0 + p * p) / p) / q;
        for (int j = 0; j < grid_disc; ++j) {
            // Re a_0 is linear in a_{-1}; extremes sit on the boundary circle
            const Complex residue = rd.center + std::polar(rd.radius, 2.0 * kPi * j / grid_disc);
            const Complex a0 = residue * slope;
            if (a0.real() < best.min_re_a0) {
                best = MinSearchResult{a0.real(), phi, residue, a0};
            }
        }
    }
    return best;
}

long VerificationReport::total_violations() const {
    return residue_violations + residue_identity_violations + a0_disc_violations +
           a1_disc_violations + re_a0_violations + a1_bound_violations +
           rotation_boundary_violations;
}

namespace {

struct FindingAccum {
    long count = 0;
    double max_margin = 0.0;
    long example_index = -1;
    std::string example_spec;
    double example_value = 0.0;
    double example_bound = 0.0;

    void add(long index, const SchwarzSpec& spec, double value, double bound, double margin) {
        ++count;
        if (example_index < 0 || margin > max_margin) {
            max_margin = margin;
            example_index = index;
            example_spec = format_spec(spec);
            example_value = value;
            example_bound = bound;
        }
    }

    void merge(const FindingAccum& other) {
        count += other.count;
        if (other.example_index >= 0 && (example_index < 0 || other.max_margin > max_margin)) {
            max_margin = other.max_margin;
            example_index = other.example_index;
            example_spec = other.example_spec;
            example_value = other.example_value;
            example_bound = other.example_bound;
        }
    }

    FindingSummary summary(const char* kind) const {
        return FindingSummary{kind,          count,         max_margin,
                              example_index, example_spec,  example_value,
                              example_bound};
    }
};

struct Partial {
    VerificationReport counts{};  // only the counter fields are used
    double max_excess = -std::numeric_limits<double>::infinity();
    long worst_index = -1;
    std::string worst_spec;
    FindingAccum re_a0_findings;
    FindingAccum a1_findings;

    void track_excess(double excess, long index, const SchwarzSpec& spec) {
        if (excess > max_excess) {
            max_excess = excess;
            worst_index = index;
            worst_spec = format_spec(spec);
        }
    }
};

}  // namespace

VerificationReport verify_samples(double p, long n_samples, std::uint64_t seed, double tol,
                                  int threads, int max_degree, int nodes) {
    check_p(p, "verify_samples");
    if (n_samples < 1) {
        throw std::invalid_argument("verify_samples: need at least one sample");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("verify_samples: tolerance must be positive");
    }

    const bool a0_window = in_window(RegionTag::a0, p);
    const bool a1_window = in_window(RegionTag::a1, p);
    const Disc rd = residue_disc(p);
    const Disc d0 = a0_window ? a0_disc(p) : Disc{};
    const Disc d1 = a1_window ? a1_disc(p) : Disc{};
    const double re_bound = re_a0_lower_bound(p);
    const double a1_bound = a1_modulus_bound(p);
    const double p4 = p * p * p * p;
    const double residue_center = p * p / (1.0 - p4);
    const double residue_scale = p4 / (1.0 - p4);

    const auto run_chunk = [&](long lo, long hi, Partial& out) {
        for (long i = lo; i < hi; ++i) {
            const SchwarzSpec spec = sample(derive_seed(seed, static_cast<std::uint64_t>(i)),
                                            max_degree);
            const SchwarzCoefficients sc = coefficients_at(spec, p, 2, nodes);
            const Complex am1 = residue_from_c0(p, sc.c[0]);
            const Complex a0 = a0_from_c(p, sc.c[0], sc.c[1]);
            const Complex a1 = a1_from_c(p, sc.c[0], sc.c[1], sc.c[2]);
            const bool certified = spec.is_constant();
            auto& counts = out.counts;

            ++counts.residue_checked;
            const double res_excess = rd.boundary_excess(am1);
            out.track_excess(res_excess, i, spec);
            if (!rd.contains(am1, tol)) {
                ++counts.residue_violations;
            }

            // |a_{-1} + p^2/(1-p^4)| = p^4/(1-p^4) |c0| must hold as an identity
            ++counts.residue_identity_checked;
            if (std::abs(std::abs(am1 + residue_center) - residue_scale * std::abs(sc.c[0])) >
                tol) {
                ++counts.residue_identity_violations;
            }

            if (a0_window) {
                ++counts.a0_disc_checked;
                out.track_excess(d0.boundary_excess(a0), i, spec);
                if (!d0.contains(a0, tol)) {
                    ++counts.a0_disc_violations;
                }
            }
            if (a1_window) {
                ++counts.a1_disc_checked;
                out.track_excess(d1.boundary_excess(a1), i, spec);
                if (!d1.contains(a1, tol)) {
                    ++counts.a1_disc_violations;
                }
            }

            if (certified) {
                ++counts.re_a0_checked;
                if (a0.real() < re_bound - tol) {
                    ++counts.re_a0_violations;
                }
                ++counts.a1_bound_checked;
                if (std::abs(a1) > a1_bound + tol) {
                    ++counts.a1_bound_violations;
                }
            } else {
                if (a0.real() < re_bound - tol) {
                    out.re_a0_findings.add(i, spec, a0.real(), re_bound, re_bound - a0.real());
                }
                if (std::abs(a1) > a1_bound + tol) {
                    out.a1_findings.add(i, spec, std::abs(a1), a1_bound,
                                        std::abs(a1) - a1_bound);
                }
            }

            if (std::holds_alternative<Rotation>(spec.node())) {
                ++counts.rotation_boundary_checked;
                bool on_boundaries = std::abs(res_excess) <= 1e-12;
                if (a0_window) {
                    on_boundaries = on_boundaries && std::abs(d0.boundary_excess(a0)) <= 1e-12;
                }
                if (a1_window) {
                    on_boundaries = on_boundaries && std::abs(d1.boundary_excess(a1)) <= 1e-12;
                }
                if (!on_boundaries) {
                    ++counts.rotation_boundary_violations;
                }
            }
        }
    };

    int workers = threads > 0 ? threads
                              : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::clamp<long>(workers, 1, n_samples);

    std::vector<Partial> partials(static_cast<std::size_t>(workers));
    if (workers == 1) {
        run_chunk(0, n_samples, partials[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        const long chunk = (n_samples + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const long lo = w * chunk;
            const long hi = std::min(n_samples, lo + chunk);
            pool.emplace_back([&, lo, hi, w] { run_chunk(lo, hi, partials[static_cast<std::size_t>(w)]); });
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }

    VerificationReport report;
    report.p = p;
    report.samples = n_samples;
    report.seed = seed;
    report.tol = tol;
    report.max_degree = max_degree;
    report.nodes = nodes;
    report.threads = workers;
    report.a0_window = a0_window;
    report.a1_window = a1_window;

    Partial merged;
    // chunk order, not completion order, so reports do not depend on scheduling
    for (const Partial& part : partials) {
        const auto& c = part.counts;
        report.residue_checked += c.residue_checked;
        report.residue_violations += c.residue_violations;
        report.residue_identity_checked += c.residue_identity_checked;
        report.residue_identity_violations += c.residue_identity_violations;
        report.a0_disc_checked += c.a0_disc_checked;
        report.a0_disc_violations += c.a0_disc_violations;
        report.a1_disc_checked += c.a1_disc_checked;
        report.a1_disc_violations += c.a1_disc_violations;
        report.re_a0_checked += c.re_a0_checked;
        report.re_a0_violations += c.re_a0_violations;
        report.a1_bound_checked += c.a1_bound_checked;
        report.a1_bound_violations += c.a1_bound_violations;
        report.rotation_boundary_checked += c.rotation_boundary_checked;
        report.rotation_boundary_violations += c.rotation_boundary_violations;
        if (part.worst_index >= 0 && part.max_excess > merged.max_excess) {
            merged.max_excess = part.max_excess;
            merged.worst_index = part.worst_index;
            merged.worst_spec = part.worst_spec;
        }
        merged.re_a0_findings.merge(part.re_a0_findings);
        merged.a1_findings.merge(part.a1_findings);
    }
    report.max_boundary_excess = merged.max_excess;
    report.worst_index = merged.worst_index;
    report.worst_spec = merged.worst_spec;
    if (merged.re_a0_findings.count > 0) {
        report.findings.push_back(merged.re_a0_findings.summary("re_a0_bound"));
    }
    if (merged.a1_findings.count > 0) {
        report.findings.push_back(merged.a1_findings.summary("a1_modulus_bound"));
    }
    return report;
}

}  // namespace copvar
