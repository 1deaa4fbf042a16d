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

// Regeneration of the summary table of known PcN / APcN functions from a
// pinned manifest (data/table1.json). Each runnable row names a family and
// its desk-scale parameters; the runner measures every selected c and
// compares against the row's claimed uniformity.
#pragma once

#include <chrono>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdiff/instance.hpp"

namespace cdiff {

struct TableRow {
  std::string id;
  std::string p;
  std::string function;
  std::string claim;
  /// "run" or "skipped(prior-work)".
  std::string status;
  std::string family;
  Params params;
};

struct TableRowResult {
  TableRow row;
  std::string instance;
  std::size_t c_count = 0;
  std::uint32_t min_delta = 0, max_delta = 0;
  bool pass = true;
  std::string error;
  double seconds = 0;

  /// "2" when every c agrees, "1..2" otherwise, "-" when skipped.
  std::string observed() const {
    if (row.status != "run" || c_count == 0) return "-";
    if (min_delta == max_delta) return std::to_string(max_delta);
    return std::to_string(min_delta) + ".." + std::to_string(max_delta);
  }
};

inline std::vector<TableRow> parse_manifest(const nlohmann::json& j) {
  std::vector<TableRow> rows;
  try {
    for (const auto& r : j.at("rows")) {
      TableRow row;
      row.id = r.at("id").get<std::string>();
      row.p = r.value("p", "any");
      row.function = r.at("function").get<std::string>();
      row.claim = r.at("claim").get<std::string>();
      row.status = r.value("status", "run");
      if (row.status == "run") {
        row.family = r.at("family").get<std::string>();
        for (const auto& [k, v] : r.at("params").items()) row.params[k] = v.get<std::string>();
      }
      rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad manifest: ") + e.what());
  }
  return rows;
}

inline std::vector<TableRow> load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open manifest " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad manifest: ") + e.what());
  }
  return parse_manifest(j);
}

inline TableRowResult run_table_row(const TableRow& row, const SweepOptions& opts = {}) {
  TableRowResult res{row, "", 0, 0, 0, true, "", 0};
  if (row.status != "run") return res;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Instance inst = build_instance(row.family, row.params);
    res.instance = inst.description + " over GF(" + std::to_string(inst.field->p()) + "^" +
                   std::to_string(inst.field->m()) + ")";
    const Claim claim = Claim::parse(row.claim);
    const auto cs = inst.valid.cs();
    const auto spec = spectrum(*inst.field, inst.table, cs, opts);
    res.c_count = spec.results.size();
    res.min_delta = spec.results.empty() ? 0 : spec.results.front().delta;
    for (const auto& r : spec.results) {
      res.min_delta = std::min(res.min_delta, r.delta);
      res.max_delta = std::max(res.max_delta, r.delta);
      if (!claim.holds(r.delta)) res.pass = false;
    }
    if (res.c_count == 0) {
      res.pass = false;
      res.error = "empty c set";
    }
  } catch (const Error& e) {
    res.pass = false;
    res.error = e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

inline std::vector<TableRowResult> run_table(const std::vector<TableRow>& rows, const SweepOptions& opts = {}) {
  std::vector<TableRowResult> out;
  for (const auto& r : rows) out.push_back(run_table_row(r, opts));
  return out;
}

}  // namespace cdiff
