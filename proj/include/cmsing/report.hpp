#pragma once

#include <algorithm>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "scan.hpp"

namespace cmsing {

using Json = nlohmann::ordered_json;

// Integers go out as JSON numbers when they fit, as strings otherwise.
inline Json json_integer(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

inline Integer integer_from_json(const Json& j) {
  return j.is_string() ? Integer(j.get<std::string>()) : Integer(j.get<long long>());
}

inline Json to_json(const DivisibilityVerdict& v) {
  Json j;
  j["label"] = v.label;
  if (!v.orbit.empty()) j["orbit"] = v.orbit;
  j["dim"] = json_integer(v.dim);
  j["b"] = v.b;
  j["f"] = render(v.f);
  j["verdict"] = v.divisible ? "divisible" : "fails";
  if (v.divisible)
    j["quotient"] = render(v.quotient);
  else
    j["remainder"] = render(v.remainder);
  return j;
}

inline DivisibilityVerdict verdict_from_json(const Json& j) {
  DivisibilityVerdict v;
  v.label = j.at("label").get<std::string>();
  v.orbit = j.value("orbit", "");
  v.dim = integer_from_json(j.at("dim"));
  v.b = j.at("b").get<int>();
  v.f = parse_laurent(j.at("f").get<std::string>());
  const std::string verdict = j.at("verdict").get<std::string>();
  if (verdict != "divisible" && verdict != "fails") throw ParseError("unknown verdict '" + verdict + "'");
  v.divisible = verdict == "divisible";
  if (v.divisible)
    v.quotient = parse_laurent<Rational>(j.at("quotient").get<std::string>());
  else
    v.remainder = parse_laurent<Rational>(j.at("remainder").get<std::string>());
  return v;
}

inline Json to_json(const ScanReport& r) {
  Json j;
  j["group"] = r.group;
  j["labels"] = r.labels;
  j["failures"] = r.failures;
  j["summary"] = r.summary();
  j["flags"] = r.flags;
  j["notes"] = r.notes;
  j["verdicts"] = Json::array();
  for (const auto& v : r.verdicts) j["verdicts"].push_back(to_json(v));
  return j;
}

inline ScanReport scan_report_from_json(const Json& j) {
  ScanReport r;
  r.group = j.at("group").get<std::string>();
  r.labels = j.at("labels").get<int>();
  r.failures = j.at("failures").get<int>();
  r.flags = j.at("flags").get<std::vector<std::string>>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  for (const auto& v : j.at("verdicts")) r.verdicts.push_back(verdict_from_json(v));
  return r;
}

// Left-aligned columns separated by two spaces; the last column is not padded.
inline std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      s += cells[c];
      if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out += s + "\n";
  };
  line(header);
  for (const auto& row : rows) line(row);
  return out;
}

inline std::string render_text(const ScanReport& r) {
  std::string out = "group " + r.group + "\n";
  out += "labels " + std::to_string(r.labels) + ", failures " + std::to_string(r.failures) + ": " + r.summary() + "\n";
  for (const auto& f : r.flags) out += "flag: " + f + "\n";
  for (const auto& n : r.notes) out += "note: " + n + "\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& v : r.verdicts)
    rows.push_back({v.label, v.dim.str(), std::to_string(v.b), render(v.f), v.divisible ? "divisible" : "fails",
                    v.divisible ? "quotient " + render(v.quotient) : "remainder " + render(v.remainder)});
  out += "\n" + render_table({"label", "dim", "b", "f", "verdict", "detail"}, rows);
  return out;
}

}  // namespace cmsing
