// Report records, findings and parameter-family scans.
//
// One record per instance: parameters, the K[P] and/or K[Q] reports and the
// findings derived from them. `classify` prints a single record, `scan`
// writes one record per line in canonical order.

#pragma once

#include "cyclotoric/semigroup_kp.hpp"
#include "cyclotoric/vertex_semigroup_kq.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cyclo {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class FindingKind {
  theorem_oracle_discrepancy,
  witness_verification_failure,
  conjecture45_unknown_instance,
  conjecture48_ci_instance,
};
const char* kind_name(FindingKind k);

struct Finding {
  FindingKind kind;
  CycloParams params;
  std::string details;
  Json evidence;
};

struct RingSelection {
  bool kp = true;
  bool kq = true;
};

/// Parses "kp", "kq" or "both".
RingSelection parse_rings(const std::string& text);

struct ClassifyOptions {
  RingSelection rings;
  bool oracle = false;
  std::optional<int> max_degree;
  std::uint64_t budget = default_budget();
};

struct InstanceRecord {
  CycloParams params;
  bool skipped = false;
  std::string skip_reason;
  std::optional<RingReportKP> kp;
  std::optional<RingReportKQ> kq;
  std::vector<Finding> findings;
};

/// Classifies one instance. Budget exhaustion propagates as BudgetExceeded.
InstanceRecord classify_instance(const CycloParams& p, const ClassifyOptions& options);

std::vector<Finding> derive_findings(const CycloParams& p, const std::optional<RingReportKP>& kp,
                                     const std::optional<RingReportKQ>& kq);

Json int_json(const Int& z);
Json vec_json(const IntVec& v);
Json params_json(const CycloParams& p);
Json to_json(const RingReportKP& r);
Json to_json(const RingReportKQ& r);
Json to_json(const Finding& f);
Json to_json(const InstanceRecord& r);

/// Human-readable multi-line summary of a record.
void print_table(std::ostream& os, const InstanceRecord& r);

/// Bounds of the n range; each bound is absolute or an offset from d.
struct NBound {
  bool relative = false;
  int value = 0;
  int resolve(int d) const { return relative ? d + value : value; }
};

struct ScanSpec {
  int d_min = 1, d_max = 1;
  NBound n_min, n_max;
  int max_gap = 1;
  ClassifyOptions options;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// "a..b" or a single value "a".
std::pair<int, int> parse_int_range(const std::string& text);
/// "a..b" where each bound is an integer or "d+k".
std::pair<NBound, NBound> parse_n_range(const std::string& text);
void validate(const ScanSpec& spec);

/// Canonical instances of the family in output order: by d, n, then gaps.
std::vector<CycloParams> scan_instances(const ScanSpec& spec);

struct ScanSummary {
  std::size_t instances = 0;
  std::size_t skipped = 0;
  std::size_t kp_normal = 0;
  std::size_t kp_gorenstein_theorem = 0;
  std::size_t kp_oracle_gorenstein = 0;
  std::size_t kq_normal_yes = 0;
  std::size_t kq_normal_no = 0;
  std::size_t kq_normal_unknown = 0;
  std::size_t findings = 0;
};

/// Classifies every instance on `spec.threads` workers; records come back in
/// the order of scan_instances regardless of scheduling.
std::vector<InstanceRecord> run_scan(const ScanSpec& spec);

ScanSummary summarize(const std::vector<InstanceRecord>& records);
void write_jsonl(std::ostream& os, const std::vector<InstanceRecord>& records);
void write_findings(std::ostream& os, const std::vector<InstanceRecord>& records);
void write_csv(std::ostream& os, const std::vector<InstanceRecord>& records);
void print_summary(std::ostream& os, const ScanSummary& s);

}  // namespace cyclo
