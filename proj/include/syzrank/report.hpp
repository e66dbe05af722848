#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace syzrank {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

struct OracleRecord {
    std::size_t rk_j = 0;
    std::size_t rk_jprime = 0;
    bool agrees = false;
};

struct PointRecord {
    std::string point;
    std::string status;
    std::optional<std::size_t> rk_Mprime;
    std::optional<std::size_t> rk_M;
    std::optional<bool> seh;
    std::optional<std::size_t> defect;
    std::optional<bool> quasi_homogeneous;
    std::optional<std::string> mu, tau;
    std::optional<std::string> refinement_note;
    std::optional<OracleRecord> oracle;
};

struct FindSingularRecord {
    std::vector<std::string> points;
    bool complete = false;
    bool positive_dimensional = false;
};

struct RunReport {
    std::string ambient;
    std::string field;
    std::string poly;
    std::vector<std::string> vars;
    std::optional<bool> reduced_ok;
    std::optional<std::size_t> singular_locus_dimension;
    std::optional<bool> completeness_warning;
    std::optional<std::size_t> picard_rank;
    std::vector<PointRecord> points;
    std::optional<bool> oracles_agree;
    std::optional<bool> global_seh;
    std::optional<FindSingularRecord> find_singular;
    double timing_ms = 0.0;
};

std::string render_text(const RunReport& rep);
std::string render_machine(const RunReport& rep);

}  // namespace syzrank
