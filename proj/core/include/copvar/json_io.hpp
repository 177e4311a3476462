#pragma once

#include <nlohmann/json.hpp>

#include "copvar/extremal.hpp"
#include "copvar/regions.hpp"

namespace nlohmann {

template <>
struct adl_serializer<std::complex<double>> {
    static void to_json(json& j, const std::complex<double>& v) {
        j = json{{"re", v.real()}, {"im", v.imag()}};
    }
    static void from_json(const json& j, std::complex<double>& v) {
        v = {j.at("re").get<double>(), j.at("im").get<double>()};
    }
};

}  // namespace nlohmann

namespace copvar {

void to_json(nlohmann::json& j, const Disc& disc);
void to_json(nlohmann::json& j, const LaurentTriple& triple);
void to_json(nlohmann::json& j, const SchwarzCoefficients& sc);
void to_json(nlohmann::json& j, const MinSearchResult& result);
void to_json(nlohmann::json& j, const FindingSummary& finding);
void to_json(nlohmann::json& j, const VerificationReport& report);
void to_json(nlohmann::json& j, const KernelReport& report);
void to_json(nlohmann::json& j, const CounterexampleFinding& finding);

}  // namespace copvar
