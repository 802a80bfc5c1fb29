#include "deskfair/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "deskfair/error.hpp"

namespace deskfair {

namespace {

[[noreturn]] void parse_failure(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) parse_failure(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::vector<std::string> string_list(const Json& node, const std::string& what) {
  if (!node.is_array()) parse_failure(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : node) {
    if (!item.is_string()) parse_failure(what + " must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

double decimal(const Rational& value) { return std::stod(to_decimal_string(value)); }

std::vector<std::string> ids_of(const Instance& inst, const std::vector<std::size_t>& papers) {
  std::vector<std::string> out;
  out.reserve(papers.size());
  for (auto j : papers) out.push_back(inst.paper(j).id);
  return out;
}

void put_keep(Json& doc, const Instance& inst, const KeepVector& keep) {
  doc["kept"] = ids_of(inst, keep.kept_indices());
  doc["rejected"] = ids_of(inst, keep.rejected_indices());
  Json vec = Json::array();
  for (double v : keep.values()) vec.push_back(static_cast<int>(v));
  doc["keep_vector"] = vec;
}

Json instance_summary(const Instance& inst) {
  return Json{{"n", inst.num_authors()}, {"m", inst.num_papers()}, {"x", inst.cap()}};
}

Json rational_list(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_fraction_string(v));
  return out;
}

Rational rational_field(const Json& doc, const char* key) {
  const Json& node = require(doc, key);
  if (!node.is_string()) parse_failure(std::string("field '") + key + "' must be a \"num/den\" string");
  return parse_fraction(node.get<std::string>());
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

RawInstance parse_raw_instance(const Json& doc) {
  if (!doc.is_object()) parse_failure("instance must be a JSON object");
  RawInstance raw;
  const Json& x = require(doc, "x");
  if (!x.is_number_integer()) parse_failure("field 'x' must be an integer");
  raw.x = x.get<std::int64_t>();
  raw.authors = string_list(require(doc, "authors"), "'authors'");
  const Json& papers = require(doc, "papers");
  if (!papers.is_array()) parse_failure("field 'papers' must be an array");
  for (const auto& p : papers) {
    const Json& id = require(p, "id");
    if (!id.is_string()) parse_failure("paper 'id' must be a string");
    raw.papers.push_back({id.get<std::string>(), string_list(require(p, "authors"), "paper 'authors'")});
  }
  return raw;
}

Instance parse_instance(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_failure(std::string("invalid JSON: ") + e.what());
  }
  return validate_instance(parse_raw_instance(doc));
}

Instance read_instance(const std::filesystem::path& path) { return parse_instance(read_text_file(path)); }

Json instance_to_json(const Instance& inst) {
  Json papers = Json::array();
  for (const auto& p : inst.papers()) {
    Json authors = Json::array();
    for (auto i : p.authors) authors.push_back(inst.author_id(i));
    papers.push_back(Json{{"id", p.id}, {"authors", authors}});
  }
  return Json{{"x", inst.cap()}, {"authors", inst.author_ids()}, {"papers", papers}};
}

Json report_to_json(const Instance& inst, const FairnessReport& report) {
  Json authors = Json::array();
  for (std::size_t i = 0; i < inst.num_authors(); ++i) {
    authors.push_back(Json{{"id", inst.author_id(i)},
                           {"papers", inst.paper_count(i)},
                           {"kept", report.kept_counts[i]},
                           {"category", std::string(to_string(classify_author(inst, i)))},
                           {"cost", to_fraction_string(report.per_author_cost[i])},
                           {"cost_decimal", decimal(report.per_author_cost[i])}});
  }
  return Json{{"zeta_ind", to_fraction_string(report.zeta_ind)},
              {"zeta_ind_decimal", decimal(report.zeta_ind)},
              {"zeta_group", to_fraction_string(report.zeta_group)},
              {"zeta_group_decimal", decimal(report.zeta_group)},
              {"feasible", report.feasible},
              {"ideal", report.ideal},
              {"authors", authors}};
}

FairnessReport parse_report(const Json& doc) {
  FairnessReport report;
  report.zeta_ind = rational_field(doc, "zeta_ind");
  report.zeta_group = rational_field(doc, "zeta_group");
  report.feasible = require(doc, "feasible").get<bool>();
  report.ideal = require(doc, "ideal").get<bool>();
  for (const auto& author : require(doc, "authors")) {
    report.per_author_cost.push_back(rational_field(author, "cost"));
    report.kept_counts.push_back(require(author, "kept").get<std::int64_t>());
  }
  return report;
}

Json solve_result_to_json(const Instance& inst, const SolveResult& result) {
  Json doc{{"policy", result.policy}, {"status", "ok"}, {"instance", instance_summary(inst)}};
  put_keep(doc, inst, result.keep);
  doc["report"] = report_to_json(inst, result.report);
  const auto& d = result.diagnostics;
  Json diag{{"method", d.method},
            {"node_count", d.node_count},
            {"lp_calls", d.lp_calls},
            {"lp_iterations", d.lp_iterations},
            {"wall_time_ms", d.wall_time_ms}};
  if (d.root_lp_objective) diag["root_lp_objective"] = *d.root_lp_objective;
  if (d.root_lp_integral) diag["root_lp_integral"] = *d.root_lp_integral;
  diag["fallback"] = d.fallback;
  diag["incumbent_trace"] = rational_list(d.incumbent_trace);
  doc["diagnostics"] = diag;
  return doc;
}

Json policy_outcome_to_json(const Instance& inst, const PolicyOutcome& outcome) {
  Json doc{{"policy", outcome.policy}, {"status", "ok"}, {"instance", instance_summary(inst)}};
  put_keep(doc, inst, outcome.keep);
  doc["report"] = report_to_json(inst, outcome.report);
  Json trace = Json::array();
  for (const auto& t : outcome.trace) {
    trace.push_back(Json{{"paper", t.paper_id},
                         {"decision", t.decision == Decision::Keep ? "keep" : "reject"},
                         {"reason", t.reason}});
  }
  doc["trace"] = trace;
  return doc;
}

Json oracle_result_to_json(const Instance& inst, const OracleResult& result) {
  const auto optimum = [&](const OracleOptimum& o) {
    Json doc{{"value", to_fraction_string(o.value)}, {"value_decimal", decimal(o.value)}};
    put_keep(doc, inst, o.witness);
    return doc;
  };
  Json doc{{"instance", instance_summary(inst)},
           {"best_group", optimum(result.best_group)},
           {"best_individual", optimum(result.best_individual)},
           {"ideal_exists", result.ideal_exists},
           {"feasible_count", result.feasible_count}};
  if (result.ideal_witness) doc["ideal_witness"] = ids_of(inst, result.ideal_witness->kept_indices());
  return doc;
}

Json audit_to_json(const IntegralityAudit& audit) {
  return Json{{"lp_objective", audit.lp_objective},
              {"ilp_objective", to_fraction_string(audit.ilp_objective)},
              {"ilp_objective_decimal", decimal(audit.ilp_objective)},
              {"gap", audit.gap},
              {"lp_integral", audit.lp_integral},
              {"counterexample", audit.counterexample},
              {"lp_solution", audit.lp_solution}};
}

SetCoverInstance parse_set_cover(const Json& doc) {
  SetCoverInstance sc;
  try {
    sc.universe_size = require(doc, "universe_size").get<std::size_t>();
    sc.budget = require(doc, "budget").get<std::size_t>();
    for (const auto& set : require(doc, "sets")) sc.sets.push_back(set.get<std::vector<std::size_t>>());
  } catch (const nlohmann::json::exception& e) {
    parse_failure(std::string("malformed set cover instance: ") + e.what());
  }
  sc.validate();
  return sc;
}

Json set_cover_to_json(const SetCoverInstance& sc) {
  return Json{{"universe_size", sc.universe_size}, {"sets", sc.sets}, {"budget", sc.budget}};
}

Json comparison_to_json(const Instance& inst, const ComparisonTable& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json doc{{"policy", row.policy}, {"status", row.status}};
    if (row.keep) put_keep(doc, inst, *row.keep);
    if (row.report) doc["report"] = report_to_json(inst, *row.report);
    doc["runtime_ms"] = row.runtime_ms;
    doc["node_count"] = row.node_count;
    doc["lp_calls"] = row.lp_calls;
    doc["note"] = row.note;
    rows.push_back(doc);
  }
  return Json{{"instance", instance_summary(inst)}, {"rows", rows}};
}

std::string comparison_to_csv(const Instance& inst, const ComparisonTable& table) {
  std::ostringstream out;
  out << kComparisonCsvHeader << '\n';
  for (const auto& row : table.rows) {
    std::string kept_count, rejected, zi, zid, zg, zgd, ideal;
    if (row.keep && row.report) {
      kept_count = std::to_string(row.keep->kept_indices().size());
      for (const auto& id : ids_of(inst, row.keep->rejected_indices())) {
        rejected += (rejected.empty() ? "" : ";") + id;
      }
      zi = to_fraction_string(row.report->zeta_ind);
      zid = to_decimal_string(row.report->zeta_ind);
      zg = to_fraction_string(row.report->zeta_group);
      zgd = to_decimal_string(row.report->zeta_group);
      ideal = row.report->ideal ? "true" : "false";
    }
    out << csv_field(row.policy) << ',' << row.status << ',' << kept_count << ',' << csv_field(rejected) << ','
        << zi << ',' << zid << ',' << zg << ',' << zgd << ',' << ideal << ',' << fixed3(row.runtime_ms) << ','
        << row.node_count << ',' << row.lp_calls << ',' << csv_field(row.note) << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path.string() + "'");
}

}  // namespace deskfair
