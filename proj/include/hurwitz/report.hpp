#ifndef HURWITZ_REPORT_HPP
#define HURWITZ_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/verdict.hpp"

namespace hurwitz {

inline constexpr std::string_view kVersion = "0.1.0";

/// Serializable face of a witness.
struct WitnessText {
  std::string f;
  std::string g;
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  std::string value;

  friend bool operator==(const WitnessText&, const WitnessText&) = default;
};

/// One row of a report. `property` may be qualified as "name@ring" when a
/// report covers several rings.
struct CheckEntry {
  std::string property;
  Status status = Status::unknown;
  Bounds bounds;
  std::optional<WitnessText> witness;
  /// Text output only.
  std::string note;

  friend bool operator==(const CheckEntry&, const CheckEntry&) = default;
};

/// Builds a row from a verdict. A failing verdict must carry a witness that
/// re-validates; otherwise InternalError is thrown.
CheckEntry make_entry(std::string property, const Verdict& v);

struct Report {
  std::optional<std::string> scenario;
  std::string ring;
  std::vector<CheckEntry> checks;
  /// Text output only.
  std::vector<std::string> narrative;
  std::uint64_t timing_ms = 0;
  std::uint64_t seed = 0;
  std::string version = std::string(kVersion);

  void add(std::string property, const Verdict& v) { checks.push_back(make_entry(std::move(property), v)); }
};

/// Fails > Unknown > Holds over all checks; Holds for an empty report.
Status overall_status(const Report& r);
/// 0 holds, 1 fails, 2 unknown.
int exit_code(Status s);

enum class Format { json, text };

/// JSON follows the fixed schema and field order; text is for people.
std::string emit_report(const Report& r, Format format);
/// Inverse of the JSON form. Notes and narrative are not part of the JSON.
/// Throws DomainError on schema violations.
Report parse_report_json(std::string_view text);
/// Empty when `json` conforms to the report schema, else the first problem.
std::string schema_problem(std::string_view json);

}  // namespace hurwitz

#endif  // HURWITZ_REPORT_HPP
