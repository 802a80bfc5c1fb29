#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "deskfair/exact.hpp"
#include "deskfair/instance.hpp"
#include "deskfair/metrics.hpp"
#include "deskfair/oracle.hpp"
#include "deskfair/policies.hpp"

namespace deskfair {

using Json = nlohmann::ordered_json;

// Instance interchange format:
//   {"x": int, "authors": [string...], "papers": [{"id": string, "authors": [string...]}...]}
// Array order is submission order. Structural problems throw ParseError;
// semantic ones surface from validate_instance.
RawInstance parse_raw_instance(const Json& doc);
Instance parse_instance(const std::string& text);
Instance read_instance(const std::filesystem::path& path);
Json instance_to_json(const Instance& inst);

Json report_to_json(const Instance& inst, const FairnessReport& report);
// Reads back the exact fields written by report_to_json.
FairnessReport parse_report(const Json& doc);

Json solve_result_to_json(const Instance& inst, const SolveResult& result);
Json policy_outcome_to_json(const Instance& inst, const PolicyOutcome& outcome);
Json oracle_result_to_json(const Instance& inst, const OracleResult& result);
Json audit_to_json(const IntegralityAudit& audit);

// {"universe_size": n, "sets": [[1, 2], ...], "budget": K}; elements 1-based.
SetCoverInstance parse_set_cover(const Json& doc);
Json set_cover_to_json(const SetCoverInstance& sc);

struct ComparisonRow {
  std::string policy;
  std::string status;  // "ok" or "infeasible"
  std::optional<KeepVector> keep;
  std::optional<FairnessReport> report;
  double runtime_ms = 0.0;
  std::size_t node_count = 0;
  std::size_t lp_calls = 0;
  std::string note;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
};

inline constexpr const char* kComparisonCsvHeader =
    "policy,status,kept_count,rejected_papers,zeta_ind,zeta_ind_decimal,zeta_group,"
    "zeta_group_decimal,ideal,runtime_ms,node_count,lp_calls,note";

Json comparison_to_json(const Instance& inst, const ComparisonTable& table);
// LF line endings, header row first, '.' decimal separator.
std::string comparison_to_csv(const Instance& inst, const ComparisonTable& table);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace deskfair
