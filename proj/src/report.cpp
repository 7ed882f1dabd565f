#include "hurwitz/report.hpp"

#include <json.hpp>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

using json = nlohmann::ordered_json;

CheckEntry make_entry(std::string property, const Verdict& v) {
  CheckEntry e;
  e.property = std::move(property);
  e.status = v.status;
  e.bounds = v.bounds;
  e.note = v.note;
  if (v.degenerate && e.note.find("zero ring") == std::string::npos) e.note = e.note.empty() ? "zero ring" : "zero ring; " + e.note;
  if (v.status == Status::fails) {
    if (!v.witness || !revalidate(*v.witness))
      throw InternalError("failing verdict for " + e.property + " has no re-validated witness");
  }
  if (v.witness) {
    const auto& w = *v.witness;
    e.witness = WitnessText{w.f_text, w.g_text, w.i, w.j, w.value};
  }
  return e;
}

Status overall_status(const Report& r) {
  Status s = Status::holds;
  for (const auto& c : r.checks) {
    if (c.status == Status::fails) return Status::fails;
    if (c.status == Status::unknown) s = Status::unknown;
  }
  return s;
}

int exit_code(Status s) {
  switch (s) {
    case Status::holds: return 0;
    case Status::fails: return 1;
    case Status::unknown: return 2;
  }
  return 2;
}

namespace {

json to_json(const Report& r) {
  json j;
  j["scenario"] = r.scenario ? json(*r.scenario) : json(nullptr);
  j["ring"] = r.ring;
  json checks = json::array();
  for (const auto& c : r.checks) {
    json row;
    row["property"] = c.property;
    row["status"] = to_string(c.status);
    row["bounds"] = {{"degree", c.bounds.degree},
                     {"trunc", c.bounds.trunc},
                     {"mode", to_string(c.bounds.mode)},
                     {"samples", c.bounds.samples},
                     {"seed", c.bounds.seed}};
    if (c.witness)
      row["witness"] = {{"f", c.witness->f},
                        {"g", c.witness->g},
                        {"i", c.witness->i},
                        {"j", c.witness->j},
                        {"value", c.witness->value}};
    else
      row["witness"] = nullptr;
    checks.push_back(std::move(row));
  }
  j["checks"] = std::move(checks);
  j["timing_ms"] = r.timing_ms;
  j["version"] = r.version;
  return j;
}

std::string text_of(const Report& r) {
  std::ostringstream out;
  if (r.scenario) out << "scenario " << *r.scenario << "\n";
  out << "ring " << r.ring << "\n";
  for (const auto& c : r.checks) {
    out << "  " << c.property << ": " << to_string(c.status) << "  [degree " << c.bounds.degree;
    if (c.bounds.trunc) out << ", trunc " << c.bounds.trunc;
    out << ", " << to_string(c.bounds.mode);
    if (c.bounds.mode == Mode::random) out << ", " << c.bounds.samples << " samples, seed " << c.bounds.seed;
    out << "]\n";
    if (c.witness) {
      out << "    witness f=" << c.witness->f;
      if (!c.witness->g.empty()) out << " g=" << c.witness->g;
      out << " i=" << c.witness->i << " j=" << c.witness->j << " value=" << c.witness->value << "\n";
    }
    if (!c.note.empty()) out << "    note: " << c.note << "\n";
  }
  for (const auto& line : r.narrative) out << "  - " << line << "\n";
  out << "status " << to_string(overall_status(r)) << ", " << r.timing_ms << " ms, version " << r.version << "\n";
  return out.str();
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw DomainError("report schema: " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  expect(obj.is_object(), where + " is not an object");
  auto it = obj.find(key);
  expect(it != obj.end(), where + " lacks \"" + key + "\"");
  return *it;
}

void expect_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  expect(obj.is_object() && obj.size() == keys.size(), where + " must have exactly " + std::to_string(keys.size()) +
                                                           " fields");
  std::size_t k = 0;
  for (auto it = obj.begin(); it != obj.end(); ++it, ++k)
    expect(it.key() == *(keys.begin() + k), where + " field " + std::to_string(k) + " should be \"" +
                                                *(keys.begin() + k) + "\"");
}

std::string str_of(const json& v, const std::string& where) {
  expect(v.is_string(), where + " must be a string");
  return v.get<std::string>();
}

std::uint64_t uint_of(const json& v, const std::string& where) {
  expect(v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0),
         where + " must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

Report from_json(const json& j) {
  expect_keys(j, {"scenario", "ring", "checks", "timing_ms", "version"}, "report");
  Report r;
  const auto& sc = j["scenario"];
  expect(sc.is_null() || sc.is_string(), "scenario must be a string or null");
  if (sc.is_string()) r.scenario = sc.get<std::string>();
  r.ring = str_of(j["ring"], "ring");
  expect(j["checks"].is_array(), "checks must be an array");
  std::size_t k = 0;
  for (const auto& row : j["checks"]) {
    std::string where = "checks[" + std::to_string(k++) + "]";
    expect_keys(row, {"property", "status", "bounds", "witness"}, where);
    CheckEntry c;
    c.property = str_of(row["property"], where + ".property");
    auto st = str_of(row["status"], where + ".status");
    expect(st == "holds" || st == "fails" || st == "unknown", where + ".status must be holds|fails|unknown");
    c.status = parse_status(st);
    const auto& b = field(row, "bounds", where);
    expect_keys(b, {"degree", "trunc", "mode", "samples", "seed"}, where + ".bounds");
    expect(b["degree"].is_number_integer(), where + ".bounds.degree must be an integer");
    expect(b["trunc"].is_number_integer(), where + ".bounds.trunc must be an integer");
    c.bounds.degree = b["degree"].get<long>();
    c.bounds.trunc = b["trunc"].get<long>();
    auto mode = str_of(b["mode"], where + ".bounds.mode");
    expect(mode == "exhaustive" || mode == "random" || mode == "directed", where + ".bounds.mode is invalid");
    c.bounds.mode = parse_mode(mode);
    c.bounds.samples = uint_of(b["samples"], where + ".bounds.samples");
    c.bounds.seed = uint_of(b["seed"], where + ".bounds.seed");
    const auto& w = row["witness"];
    if (!w.is_null()) {
      expect_keys(w, {"f", "g", "i", "j", "value"}, where + ".witness");
      c.witness = WitnessText{str_of(w["f"], where + ".witness.f"), str_of(w["g"], where + ".witness.g"),
                              uint_of(w["i"], where + ".witness.i"), uint_of(w["j"], where + ".witness.j"),
                              str_of(w["value"], where + ".witness.value")};
    }
    r.checks.push_back(std::move(c));
  }
  r.timing_ms = uint_of(j["timing_ms"], "timing_ms");
  r.version = str_of(j["version"], "version");
  return r;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("report is not valid JSON: ") + e.what());
  }
}

}  // namespace

std::string emit_report(const Report& r, Format format) {
  if (format == Format::text) return text_of(r);
  return to_json(r).dump(2) + "\n";
}

Report parse_report_json(std::string_view text) { return from_json(parse_json(text)); }

std::string schema_problem(std::string_view text) {
  try {
    from_json(parse_json(text));
    return {};
  } catch (const DomainError& e) {
    return e.what();
  }
}

}  // namespace hurwitz
