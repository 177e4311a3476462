#pragma once

#include <utility>

#include "copvar/schwarz.hpp"

namespace copvar {

// Evaluation guard around the pole: |z - p| must exceed this.
inline constexpr double kPoleGuard = 1e-8;

// Laurent data (a_{-1}, a_0, a_1) of a candidate at its pole.
struct LaurentTriple {
    Complex a_minus1{0.0, 0.0};
    Complex a0{0.0, 0.0};
    Complex a1{0.0, 0.0};
};

// A function of the representation family
//     f(z) = (z - p/(1+p^2) (1 + omega(z)) z^2) / ((1 - z/p)(1 - z p))
// determined by a pole p in (0,1) and a Schwarz function omega. Normalised:
// f(0) = 0, f'(0) = 1, simple pole at p. Membership in the concave class is
// certified only for constant omega; the family is a superset otherwise.
class CoCandidate {
public:
    CoCandidate(double p, SchwarzSpec omega);

    double p() const { return p_; }
    const SchwarzSpec& omega() const { return omega_; }
    bool certified_member() const { return certified_; }

    Complex omega_at(Complex z) const { return evaluate(omega_, z, p_); }

private:
    double p_;
    SchwarzSpec omega_;
    bool certified_;
};

// The closed-form coefficient maps amplify roundoff like 1/(1-p^2)^3 for p
// near 1; results remain valid but reports should carry a warning.
inline bool conditioning_warning(double p) { return p > 0.95; }

// Value of the representation formula; requires |z| < 1 and |z - p| > guard.
Complex evaluate_f(const CoCandidate& cand, Complex z, double pole_guard = kPoleGuard);

// a_{-1} = -p^2/(1-p^4) + p^4/(1-p^4) c0
Complex residue_from_c0(double p, Complex c0);

// a_0 solved from
//   (1-p^2)/p a_0 + (1-p^2+p^4)/(1-p^4) = (2p^2-p^4)/(1-p^4) c0 + p^3/(1+p^2) c1
Complex a0_from_c(double p, Complex c0, Complex c1);

// a_1 solved from
//   a_1 ((1-p^2)/p)^2 + p^2/(1-p^4)
//     = c0/(1-p^4) + (2p-p^3)/(1+p^2) c1 + (p^2-p^4)/(1+p^2) c2
Complex a1_from_c(double p, Complex c0, Complex c1, Complex c2);

// Triple via the closed-form maps applied to the Taylor data of omega at p.
LaurentTriple laurent_closed(const CoCandidate& cand, int nodes = kDefaultNodes);

// Triple via contour integration of f around the pole. The contour must be
// centered at p with radius < min(p, 1-p). Independent of laurent_closed;
// the two agree within quadrature accuracy.
LaurentTriple laurent_oracle(const CoCandidate& cand, const ContourSpec& contour);

LaurentTriple laurent_oracle(const CoCandidate& cand, int nodes = kDefaultNodes);

// (f(0), f'(0)); callers assert |f(0)| ~ 0 and |f'(0) - 1| ~ 0.
std::pair<Complex, Complex> normalization_check(const CoCandidate& cand,
                                                int nodes = kDefaultNodes);

}  // namespace copvar
