#include "copvar/schwarz.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "copvar/rng.hpp"

namespace copvar {

namespace {

double wrap_angle(double theta) {
    double t = std::fmod(theta, 2.0 * kPi);
    if (t < 0.0) {
        t += 2.0 * kPi;
    }
    return t;
}

}  // namespace

SchwarzSpec::SchwarzSpec(Constant c) : node_(c) {
    require_finite(c.value, "constant omega");
    if (std::abs(c.value) > 1.0 + 1e-12) {
        throw std::invalid_argument("constant omega: |c| must be <= 1");
    }
}

SchwarzSpec::SchwarzSpec(Rotation r) : node_(Rotation{wrap_angle(r.theta)}) {
    if (!is_finite(r.theta)) {
        throw std::invalid_argument("rotation omega: theta must be finite");
    }
}

SchwarzSpec::SchwarzSpec(MoebiusX m) : node_(m) {
    if (!is_finite(m.x) || m.x < 0.0 || m.x > 1.0) {
        throw std::invalid_argument("moebius omega: x must lie in [0,1]");
    }
    if (m.x == 1.0) {
        node_ = Constant{Complex{-1.0, 0.0}};  // the x -> 1 limit is omega == -1
    }
}

SchwarzSpec::SchwarzSpec(Blaschke b) : node_(Constant{}) {
    require_finite(b.rotation, "blaschke rotation");
    const double mod = std::abs(b.rotation);
    if (std::abs(mod - 1.0) > 1e-9) {
        throw std::invalid_argument("blaschke omega: rotation must be unimodular");
    }
    b.rotation /= mod;
    for (const Complex& zero : b.zeros) {
        require_finite(zero, "blaschke zero");
        if (!(std::abs(zero) < 1.0)) {
            throw std::invalid_argument("blaschke omega: zeros must lie inside the unit disc");
        }
    }
    node_ = std::move(b);
}

SchwarzSpec::SchwarzSpec(ConvexMix m) : node_(Constant{}) {
    if (m.parts.empty() || m.parts.size() != m.weights.size()) {
        throw std::invalid_argument("mix omega: weights and parts must be non-empty and match");
    }
    double sum = 0.0;
    for (double w : m.weights) {
        if (!is_finite(w) || w < 0.0) {
            throw std::invalid_argument("mix omega: weights must be nonnegative");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("mix omega: weights must sum to 1");
    }
    for (double& w : m.weights) {
        w /= sum;
    }
    for (const SchwarzSpec& part : m.parts) {
        if (std::holds_alternative<ConvexMix>(part.node())) {
            throw std::invalid_argument("mix omega: parts must not themselves be mixes");
        }
    }
    node_ = std::move(m);
}

bool SchwarzSpec::is_constant() const {
    return std::holds_alternative<Constant>(node_) || std::holds_alternative<Rotation>(node_);
}

namespace {

struct EvalVisitor {
    Complex z;
    double pole;

    Complex operator()(const Constant& c) const { return c.value; }

    Complex operator()(const Rotation& r) const { return std::polar(1.0, r.theta); }

    Complex operator()(const MoebiusX& m) const {
        if (!(pole > 0.0) || !(pole < 1.0)) {
            throw std::invalid_argument("moebius omega: pole must lie in (0,1)");
        }
        const Complex t = (z - pole) / (1.0 - pole * z);
        return (-t - m.x) / (1.0 + m.x * t);
    }

    Complex operator()(const Blaschke& b) const {
        Complex v = b.rotation;
        for (const Complex& a : b.zeros) {
            v *= (z - a) / (1.0 - std::conj(a) * z);
        }
        return v;
    }

    Complex operator()(const ConvexMix& m) const {
        Complex v{0.0, 0.0};
        for (std::size_t k = 0; k < m.parts.size(); ++k) {
            v += m.weights[k] * std::visit(*this, m.parts[k].node());
        }
        return v;
    }
};

}  // namespace

Complex evaluate(const SchwarzSpec& spec, Complex z, double pole) {
    if (!(std::abs(z) < 1.0)) {
        throw std::invalid_argument("evaluate: |z| must be < 1");
    }
    const Complex v = std::visit(EvalVisitor{z, pole}, spec.node());
    require_finite(v, "omega evaluation");
    return v;
}

double schwarz_pick_slack(const SchwarzCoefficients& sc) {
    if (sc.c.size() < 2) {
        throw std::invalid_argument("schwarz_pick_slack: needs c0 and c1");
    }
    const double c0 = std::abs(sc.c[0]);
    return (1.0 - c0 * c0) / (1.0 - sc.p * sc.p) - std::abs(sc.c[1]);
}

SchwarzCoefficients coefficients_at(const SchwarzSpec& spec, double p, int max_order,
                                    int nodes) {
    if (!(p > 0.0) || !(p < 1.0)) {
        throw std::invalid_argument("coefficients_at: p must lie in (0,1)");
    }
    if (max_order < 0) {
        throw std::invalid_argument("coefficients_at: max_order must be >= 0");
    }

    const auto oracle = [&]() {
        const ContourSpec contour{Complex{p, 0.0}, default_expansion_radius(p), nodes};
        return taylor_coefficients([&](Complex z) { return evaluate(spec, z, p); }, contour,
                                   max_order);
    };

    std::vector<Complex> c(static_cast<std::size_t>(max_order) + 1, Complex{0.0, 0.0});
    const double q = 1.0 - p * p;

    if (const auto* con = std::get_if<Constant>(&spec.node())) {
        c[0] = con->value;
    } else if (const auto* rot = std::get_if<Rotation>(&spec.node())) {
        c[0] = std::polar(1.0, rot->theta);
    } else if (const auto* moe = std::get_if<MoebiusX>(&spec.node())) {
        // c0 = -x, c1 = -(1-x^2)/(1-p^2), c2 = -(1-x^2)(p-x)/(1-p^2)^2
        const double x = moe->x;
        if (max_order > 2) {
            c = oracle();
        }
        c[0] = Complex{-x, 0.0};
        if (max_order >= 1) {
            c[1] = Complex{-(1.0 - x * x) / q, 0.0};
        }
        if (max_order >= 2) {
            c[2] = Complex{-(1.0 - x * x) * (p - x) / (q * q), 0.0};
        }
    } else if (std::holds_alternative<Blaschke>(spec.node())) {
        c = oracle();
    } else {
        // linearity: coefficients of a mix are the mixed coefficients
        const auto& mix = std::get<ConvexMix>(spec.node());
        for (std::size_t k = 0; k < mix.parts.size(); ++k) {
            const SchwarzCoefficients part = coefficients_at(mix.parts[k], p, max_order, nodes);
            for (std::size_t n = 0; n < c.size(); ++n) {
                c[n] += mix.weights[k] * part.c[n];
            }
        }
    }
    return SchwarzCoefficients{p, std::move(c)};
}

double validate(const SchwarzSpec& spec, int radial_levels, int angular_nodes, double pole) {
    if (radial_levels <= 0 || angular_nodes <= 0) {
        throw std::invalid_argument("validate: grid parameters must be positive");
    }
    double worst = 0.0;
    for (int i = 1; i <= radial_levels; ++i) {
        const double r = 0.999 * i / radial_levels;
        for (int j = 0; j < angular_nodes; ++j) {
            const double theta = 2.0 * kPi * j / angular_nodes;
            worst = std::max(worst, std::abs(evaluate(spec, std::polar(r, theta), pole)));
        }
    }
    return worst;
}

namespace {

SchwarzSpec sample_part(Rng& rng, int max_degree, bool allow_mix);

SchwarzSpec sample_blaschke(Rng& rng, int max_degree) {
    Blaschke b;
    b.rotation = std::polar(1.0, rng.angle());
    const int degree = max_degree <= 1 ? 1 : rng.uniform_int(1, max_degree);
    b.zeros.reserve(static_cast<std::size_t>(degree));
    for (int k = 0; k < degree; ++k) {
        b.zeros.push_back(rng.unit_disc(0.95));
    }
    return SchwarzSpec(std::move(b));
}

SchwarzSpec sample_mix(Rng& rng, int max_degree) {
    ConvexMix mix;
    const int parts = rng.uniform_int(2, 3);
    double sum = 0.0;
    for (int k = 0; k < parts; ++k) {
        const double w = -std::log(1.0 - rng.uniform());
        mix.weights.push_back(w);
        sum += w;
    }
    for (double& w : mix.weights) {
        w /= sum;
    }
    for (int k = 0; k < parts; ++k) {
        mix.parts.push_back(sample_part(rng, max_degree, /*allow_mix=*/false));
    }
    return SchwarzSpec(std::move(mix));
}

SchwarzSpec sample_part(Rng& rng, int max_degree, bool allow_mix) {
    switch (rng.uniform_int(0, allow_mix ? 4 : 3)) {
        case 0:
            return SchwarzSpec(Constant{rng.unit_disc(1.0)});
        case 1:
            return SchwarzSpec(Rotation{rng.angle()});
        case 2:
            // x bounded away from 1 for the same reason Blaschke zeros are
            // bounded away from the boundary
            return SchwarzSpec(MoebiusX{rng.uniform(0.0, 0.95)});
        case 3:
            if (max_degree < 1) {
                return SchwarzSpec(Rotation{rng.angle()});
            }
            return sample_blaschke(rng, max_degree);
        default:
            return sample_mix(rng, max_degree);
    }
}

}  // namespace

SchwarzSpec sample(std::uint64_t seed, int max_degree) {
    if (max_degree < 0) {
        throw std::invalid_argument("sample: max_degree must be >= 0");
    }
    Rng rng(splitmix64(seed));
    return sample_part(rng, max_degree, /*allow_mix=*/true);
}

namespace {

double parse_real(std::string_view s, const char* what) {
    double v{};
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
        throw std::invalid_argument(std::string(what) + ": cannot parse real '" +
                                    std::string(s) + "'");
    }
    return v;
}

Complex parse_complex(std::string_view s) {
    if (s.empty()) {
        throw std::invalid_argument("cannot parse empty complex literal");
    }
    if (s.back() != 'i') {
        return Complex{parse_real(s, "complex"), 0.0};
    }
    const std::string_view body = s.substr(0, s.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        const char ch = body[k];
        if ((ch == '+' || ch == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) {
        if (body.empty() || body == "+") {
            return Complex{0.0, 1.0};
        }
        if (body == "-") {
            return Complex{0.0, -1.0};
        }
        return Complex{0.0, parse_real(body, "complex")};
    }
    const double re = parse_real(body.substr(0, split), "complex");
    const std::string_view im = body.substr(split);
    if (im == "+") {
        return Complex{re, 1.0};
    }
    if (im == "-") {
        return Complex{re, -1.0};
    }
    return Complex{re, parse_real(im, "complex")};
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        const std::size_t pos = s.find(sep);
        if (pos == std::string_view::npos) {
            out.push_back(s);
            return out;
        }
        out.push_back(s.substr(0, pos));
        s = s.substr(pos + 1);
    }
}

}  // namespace

std::string format_spec(const SchwarzSpec& spec) {
    if (const auto* con = std::get_if<Constant>(&spec.node())) {
        return "const:" + format_complex(con->value);
    }
    if (const auto* rot = std::get_if<Rotation>(&spec.node())) {
        return "rot:" + format_double(rot->theta);
    }
    if (const auto* moe = std::get_if<MoebiusX>(&spec.node())) {
        return "moebius:" + format_double(moe->x);
    }
    if (const auto* bla = std::get_if<Blaschke>(&spec.node())) {
        std::string out = "blaschke:" + format_complex(bla->rotation);
        for (std::size_t k = 0; k < bla->zeros.size(); ++k) {
            out += k == 0 ? ';' : ',';
            out += format_complex(bla->zeros[k]);
        }
        return out;
    }
    const auto& mix = std::get<ConvexMix>(spec.node());
    std::string out = "mix:";
    for (std::size_t k = 0; k < mix.weights.size(); ++k) {
        if (k > 0) {
            out += ',';
        }
        out += format_double(mix.weights[k]);
    }
    for (const SchwarzSpec& part : mix.parts) {
        out += '|';
        out += format_spec(part);
    }
    return out;
}

SchwarzSpec parse_spec(std::string_view text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("omega spec: expected '<kind>:<params>', got '" +
                                    std::string(text) + "'");
    }
    const std::string_view kind = text.substr(0, colon);
    const std::string_view body = text.substr(colon + 1);

    if (kind == "const") {
        return SchwarzSpec(Constant{parse_complex(body)});
    }
    if (kind == "rot") {
        return SchwarzSpec(Rotation{parse_real(body, "rot")});
    }
    if (kind == "moebius") {
        return SchwarzSpec(MoebiusX{parse_real(body, "moebius")});
    }
    if (kind == "blaschke") {
        Blaschke b;
        const std::size_t semi = body.find(';');
        b.rotation = parse_complex(body.substr(0, semi));
        if (semi != std::string_view::npos) {
            for (std::string_view z : split(body.substr(semi + 1), ',')) {
                b.zeros.push_back(parse_complex(z));
            }
        }
        return SchwarzSpec(std::move(b));
    }
    if (kind == "mix") {
        const std::vector<std::string_view> fields = split(body, '|');
        if (fields.size() < 2) {
            throw std::invalid_argument("mix omega: expected 'mix:<weights>|<part>|...'");
        }
        ConvexMix mix;
        for (std::string_view w : split(fields[0], ',')) {
            mix.weights.push_back(parse_real(w, "mix weight"));
        }
        for (std::size_t k = 1; k < fields.size(); ++k) {
            mix.parts.push_back(parse_spec(fields[k]));
        }
        return SchwarzSpec(std::move(mix));
    }
    throw std::invalid_argument("omega spec: unknown kind '" + std::string(kind) + "'");
}

}  // namespace copvar
