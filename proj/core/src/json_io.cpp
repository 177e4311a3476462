#include "copvar/json_io.hpp"

namespace copvar {

using nlohmann::json;

void to_json(json& j, const Disc& disc) {
    j = json{{"center", disc.center}, {"radius", disc.radius}};
}

void to_json(json& j, const LaurentTriple& triple) {
    j = json{{"a_minus1", triple.a_minus1}, {"a0", triple.a0}, {"a1", triple.a1}};
}

void to_json(json& j, const SchwarzCoefficients& sc) {
    j = json{{"p", sc.p}, {"c", sc.c}};
}

void to_json(json& j, const MinSearchResult& result) {
    j = json{{"min_re_a0", result.min_re_a0},
             {"phi", result.phi},
             {"residue", result.residue},
             {"a0", result.a0}};
}

void to_json(json& j, const FindingSummary& finding) {
    j = json{{"kind", finding.kind},
             {"count", finding.count},
             {"max_margin", finding.max_margin},
             {"example_index", finding.example_index},
             {"example_spec", finding.example_spec},
             {"example_value", finding.example_value},
             {"example_bound", finding.example_bound}};
}

void to_json(json& j, const VerificationReport& report) {
    j = json{{"p", report.p},
             {"samples", report.samples},
             {"seed", report.seed},
             {"tol", report.tol},
             {"max_degree", report.max_degree},
             {"nodes", report.nodes},
             {"threads", report.threads},
             {"a0_window", report.a0_window},
             {"a1_window", report.a1_window},
             {"checks",
              json{{"residue", json{{"checked", report.residue_checked},
                                    {"violations", report.residue_violations}}},
                   {"residue_identity", json{{"checked", report.residue_identity_checked},
                                             {"violations", report.residue_identity_violations}}},
                   {"a0_disc", json{{"checked", report.a0_disc_checked},
                                    {"violations", report.a0_disc_violations}}},
                   {"a1_disc", json{{"checked", report.a1_disc_checked},
                                    {"violations", report.a1_disc_violations}}},
                   {"re_a0_bound", json{{"checked", report.re_a0_checked},
                                        {"violations", report.re_a0_violations}}},
                   {"a1_modulus_bound", json{{"checked", report.a1_bound_checked},
                                             {"violations", report.a1_bound_violations}}},
                   {"rotation_boundary", json{{"checked", report.rotation_boundary_checked},
                                              {"violations", report.rotation_boundary_violations}}}}},
             {"max_boundary_excess", report.max_boundary_excess},
             {"worst_index", report.worst_index},
             {"worst_spec", report.worst_spec},
             {"findings", report.findings},
             {"total_violations", report.total_violations()}};
}

void to_json(json& j, const KernelReport& report) {
    j = json{{"p", report.p},
             {"grid", report.theta_grid.size()},
             {"theta_grid", report.theta_grid},
             {"values", report.values},
             {"identity_residuals", report.identity_residuals},
             {"min_real", report.min_real},
             {"max_abs_imag", report.max_abs_imag},
             {"max_identity_residual", report.max_identity_residual},
             {"mean", report.mean}};
}

void to_json(json& j, const CounterexampleFinding& finding) {
    j = json{{"p", finding.p},
             {"x", finding.x},
             {"coefficient", coeff_name(finding.coefficient)},
             {"value", finding.value},
             {"bound", finding.bound},
             {"margin", finding.margin}};
}

}  // namespace copvar
