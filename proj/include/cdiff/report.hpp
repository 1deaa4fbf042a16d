// Copyright 2026 The cdifflab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON and CSV renderings of analyzer, verifier and table results. Keys keep
// insertion order so output is byte-stable.
#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "cdiff/instance.hpp"
#include "cdiff/table.hpp"

namespace cdiff {

using Json = nlohmann::ordered_json;

inline Json field_json(const Field& f) {
  Json modulus = Json::array();
  for (auto c : f.modulus()) modulus.push_back(c);
  return Json{{"p", f.p()}, {"m", f.m()}, {"modulus", modulus}, {"primitive", f.primitive()}};
}

inline Json report_json(const Field& f, const CDiffReport& r) {
  return Json{{"c", format_element(f, r.c)},
              {"delta", r.delta},
              {"witness", {format_element(f, r.witness_a), format_element(f, r.witness_b)}},
              {"class", std::string(to_string(r.classification))}};
}

inline Json spectrum_json(const Field& f, const std::string& function, const SpectrumReport& s) {
  Json results = Json::array();
  for (const auto& r : s.results) results.push_back(report_json(f, r));
  return Json{{"field", field_json(f)}, {"function", function}, {"results", results}};
}

inline void write_spectrum_csv(const Field& f, const SpectrumReport& s, std::ostream& os) {
  os << "c,delta,class,witness_a,witness_b\n";
  for (const auto& r : s.results)
    os << format_element(f, r.c) << ',' << r.delta << ',' << to_string(r.classification) << ','
       << format_element(f, r.witness_a) << ',' << format_element(f, r.witness_b) << '\n';
}

inline Json diagnostics_json(const Instance& inst) {
  Json d = Json::object();
  for (const auto& [k, v] : inst.diagnostics) d[k] = v;
  return d;
}

inline Json instance_json(const Instance& inst) {
  const Field& f = *inst.field;
  Json valid = Json::array();
  for (std::size_t i = 0; i < inst.valid.members.size(); ++i)
    valid.push_back(Json{{"c", format_element(f, inst.valid.members[i].c)},
                         {"branch", inst.valid.members[i].branch},
                         {"claim", inst.claims[i].str()}});
  return Json{{"family", inst.family},
              {"field", field_json(f)},
              {"function", inst.description},
              {"diagnostics", diagnostics_json(inst)},
              {"valid_c", valid}};
}

inline Json verify_json(const Instance& inst, const VerifyReport& v) {
  const Field& f = *inst.field;
  Json rows = Json::array();
  for (const auto& r : v.rows) {
    Json row = report_json(f, r.report);
    row["branch"] = r.c.branch;
    row["claim"] = r.claim.str();
    row["verdict"] = r.pass ? "pass" : "fail";
    rows.push_back(std::move(row));
  }
  return Json{{"family", inst.family},
              {"field", field_json(f)},
              {"function", inst.description},
              {"diagnostics", diagnostics_json(inst)},
              {"results", rows},
              {"verdict", v.pass ? "pass" : "fail"}};
}

inline void write_verify_csv(const Instance& inst, const VerifyReport& v, std::ostream& os) {
  const Field& f = *inst.field;
  os << "c,delta,class,witness_a,witness_b,claim,verdict\n";
  for (const auto& r : v.rows)
    os << format_element(f, r.report.c) << ',' << r.report.delta << ',' << to_string(r.report.classification) << ','
       << format_element(f, r.report.witness_a) << ',' << format_element(f, r.report.witness_b) << ','
       << r.claim.str() << ',' << (r.pass ? "pass" : "fail") << '\n';
}

inline Json table_json(const std::vector<TableRowResult>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j{{"id", r.row.id},      {"p", r.row.p},         {"function", r.row.function},
           {"claimed", r.row.claim}, {"observed", r.observed()}, {"status", r.row.status}};
    if (r.row.status == "run") {
      j["instance"] = r.instance;
      j["c_count"] = r.c_count;
      j["verdict"] = r.pass ? "pass" : "fail";
      if (!r.error.empty()) j["error"] = r.error;
    }
    out.push_back(std::move(j));
  }
  return Json{{"rows", out}};
}

inline void write_table_text(const std::vector<TableRowResult>& rows, std::ostream& os) {
  for (const auto& r : rows) {
    os << (r.row.status != "run" ? "SKIP" : r.pass ? "PASS" : "FAIL") << "  " << r.row.id << "  p=" << r.row.p
       << "  claimed=" << r.row.claim << "  observed=" << r.observed();
    if (r.row.status == "run") os << "  (" << r.c_count << " c, " << r.instance << ")";
    else os << "  " << r.row.status;
    if (!r.error.empty()) os << "  error: " << r.error;
    os << '\n';
  }
}

}  // namespace cdiff
