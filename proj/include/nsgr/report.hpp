#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nsgr/graded.hpp"
#include "nsgr/threegen.hpp"

namespace nsgr {

struct ThreeGenSummary {
    int k = 0;
    bool defect_unique = false;
    bool defect_is_k_g3 = false;
    friend bool operator==(const ThreeGenSummary&, const ThreeGenSummary&) = default;
};

/// Serialized form of an analysis. Bump kSchemaVersion on any field change.
struct ReportDocument {
    static constexpr int kSchemaVersion = 1;

    int schema_version = kSchemaVersion;
    std::vector<int> generators;
    int multiplicity = 0;
    int frobenius = -1;
    bool symmetric = false;
    int reduction_number = 1;
    int nilpotency_index = 0;
    std::vector<AperyRecord> apery;
    std::vector<int> max_ap_m;
    bool m_pure = false;
    bool cm = false;
    bool buchsbaum = false;
    bool g_gorenstein = false;
    SocleBasis socle_basis;
    int lambda = 0;
    std::optional<ThreeGenSummary> threegen;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

ReportDocument make_document(const AnalysisReport& rep, const std::optional<ThreeGenReport>& three);

void to_json(nlohmann::json& j, const ReportDocument& doc);
void from_json(const nlohmann::json& j, ReportDocument& doc);

void render_text(std::ostream& os, const ReportDocument& doc);

}  // namespace nsgr
