#pragma once

#include <string>

#include <json.hpp>

#include "qeur/bounds.hpp"

namespace qeur {

inline constexpr const char* kReportSchema = "qeur.report.v1";

nlohmann::ordered_json report_to_json(const EurReport& rep,
                                      const std::string& scenario);
nlohmann::ordered_json report_to_json(const GeurReport& rep);
nlohmann::ordered_json report_to_json(const KeyRateReport& rep);
nlohmann::ordered_json report_to_json(const CertifySummary& summary);

/// Fixed-layout plain-text rendering of a certification summary;
/// byte-identical for identical inputs.
std::string certify_text(const CertifySummary& summary);

}  // namespace qeur
