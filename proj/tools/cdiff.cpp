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

// cdiff: command-line front end.
//
//   cdiff field    --field 3,4
//   cdiff analyze  --field 5,1 --fn "x^2" --c all
//   cdiff construct --family T5 --m 9 --k 2 --gamma w^7 [--out table.csv]
//   cdiff verify   --family T6 --q 32 --a0 w^3 --a1 w^7
//   cdiff criteria agw --field 2,6 --q 4 --psi "x^4 - x" --phi x --h 1 --g "x^3"
//   cdiff table    [--manifest data/table1.json]
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parameter
// error, 3 field construction error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "cdiff/criteria.hpp"
#include "cdiff/report.hpp"

#ifndef CDIFF_DATA_DIR
#define CDIFF_DATA_DIR "data"
#endif

namespace {

using namespace cdiff;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitField = 3;

// Names accepted as --<key> VALUE and forwarded to build_instance.
const std::vector<std::string> kParamKeys{"field", "q", "m",  "n", "l",  "u", "k", "d",       "i",     "a0",
                                          "a1",    "a2", "a3", "gamma", "t", "phi", "g", "L", "e", "f",
                                          "f_table", "claim", "c"};

struct FamilyArgs {
  std::string family;
  std::string config;
  std::map<std::string, std::string> values;
  std::vector<std::string> extra;  // key=value

  void attach(CLI::App* cmd, const std::vector<std::string>& skip = {}) {
    cmd->add_option("--family", family, "Family id (T1, T2, P1, C1, T4-T11, C2, MONO)");
    cmd->add_option("--config", config, "JSON file {\"family\": .., \"params\": {..}}");
    for (const auto& k : kParamKeys)
      if (std::find(skip.begin(), skip.end(), k) == skip.end())
        cmd->add_option("--" + k, values[k], "family parameter " + k);
    cmd->add_option("--param", extra, "Additional family parameter key=value");
  }

  /// Config file first, then flags on top.
  std::pair<std::string, Params> resolve() const {
    Params p;
    std::string fam = family;
    if (!config.empty()) {
      std::ifstream in(config);
      if (!in) throw Error(Errc::BadParameters, "cannot open config " + config);
      try {
        const auto j = nlohmann::json::parse(in);
        if (fam.empty()) fam = j.at("family").get<std::string>();
        if (j.contains("params"))
          for (const auto& [k, v] : j.at("params").items()) p[k] = v.is_string() ? v.get<std::string>() : v.dump();
      } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("bad config: ") + e.what());
      }
    }
    for (const auto& [k, v] : values)
      if (!v.empty()) p[k] = v;
    for (const auto& kv : extra) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw Error(Errc::BadParameters, "--param needs key=value");
      p[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    if (fam.empty()) throw Error(Errc::BadParameters, "no family given");
    return {fam, p};
  }
};

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::NonPrime:
    case Errc::FieldTooLarge: return kExitField;
    default: return kExitUsage;
  }
}

Field parse_field(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) return make_field_of_order(std::stoull(s));
    return make_field(static_cast<std::uint32_t>(std::stoul(s.substr(0, comma))),
                      static_cast<std::uint32_t>(std::stoul(s.substr(comma + 1))));
  } catch (const std::logic_error&) {
    throw Error(Errc::BadParameters, "field must be written p,m or as an order");
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(Errc::BadParameters, "cannot write " + path);
  out << text;
}

SweepOptions sweep_options(unsigned threads, bool progress) {
  SweepOptions o;
  o.threads = threads == 0 ? default_thread_count() : threads;
  if (progress)
    o.on_progress = [](const CDiffReport& r, std::size_t done, std::size_t total) {
      std::cerr << "[" << done << "/" << total << "] c index " << r.c << " delta " << r.delta << "\n";
    };
  return o;
}

// ---------------------------------------------------------------------------

int cmd_field(const std::string& field_arg) {
  const Field f = parse_field(field_arg);
  Json j = field_json(f);
  j["q"] = f.q();
  j["primitive_digits"] = f.digits(f.primitive());
  std::cout << j.dump(2) << "\n";
  return 0;
}

struct AnalyzeArgs {
  std::string field, fn, table, c = "all", format = "json", out;
  FamilyArgs fam;
  unsigned threads = 0;
  bool classical = false, progress = false;
};

int cmd_analyze(const AnalyzeArgs& a) {
  const int sources = !a.fn.empty() + !a.table.empty() + (!a.fam.family.empty() || !a.fam.config.empty());
  if (sources != 1) throw Error(Errc::BadParameters, "give exactly one of --fn, --table, --family/--config");

  std::shared_ptr<const Field> field;
  FuncTable table;
  std::string label;
  std::optional<Instance> inst;
  if (!a.fn.empty() || !a.table.empty()) {
    if (a.field.empty()) throw Error(Errc::BadParameters, "--field is required with --fn or --table");
    field = std::make_shared<const Field>(parse_field(a.field));
    if (!a.fn.empty()) {
      table = to_table(*field, parse_poly(*field, a.fn));
      label = a.fn;
    } else {
      std::ifstream in(a.table);
      if (!in) throw Error(Errc::BadParameters, "cannot open " + a.table);
      table = read_table_csv(*field, in);
      label = "table:" + a.table;
    }
  } else {
    auto [family, params] = a.fam.resolve();
    params.erase("c");
    inst = build_instance(family, params);
    field = inst->field;
    table = inst->table;
    label = family + ": " + inst->description;
  }
  const Field& f = *field;
  const SweepOptions opts = sweep_options(a.threads, a.progress);

  if (a.classical) {
    const auto r = classical_uniformity(f, table, opts);
    Json j{{"field", field_json(f)},
           {"function", label},
           {"classical", {{"delta", r.delta},
                          {"witness", {format_element(f, r.witness_a), format_element(f, r.witness_b)}}}}};
    emit(a.out, j.dump(2) + "\n");
    return 0;
  }

  std::vector<Index> cs;
  if (a.c == "all")
    cs = all_c(f);
  else if (a.c == "valid") {
    if (!inst) throw Error(Errc::BadParameters, "--c valid needs a --family source");
    cs = inst->valid.cs();
  } else
    cs = parse_element_list(f, a.c);
  const auto spec = spectrum(f, table, cs, opts);

  if (a.format == "csv") {
    std::ostringstream os;
    write_spectrum_csv(f, spec, os);
    emit(a.out, os.str());
  } else if (a.format == "json") {
    emit(a.out, spectrum_json(f, label, spec).dump(2) + "\n");
  } else {
    throw Error(Errc::BadParameters, "--format must be json or csv");
  }
  return 0;
}

int cmd_construct(const FamilyArgs& fam, const std::string& out_table) {
  auto [family, params] = fam.resolve();
  const Instance inst = build_instance(family, params);
  std::cout << instance_json(inst).dump(2) << "\n";
  if (!out_table.empty()) {
    std::ostringstream os;
    write_table_csv(*inst.field, inst.table, os);
    emit(out_table, os.str());
  }
  return 0;
}

int cmd_verify(const FamilyArgs& fam, const std::string& format, unsigned threads, bool progress) {
  auto [family, params] = fam.resolve();
  const Instance inst = build_instance(family, params);
  const auto rep = verify_instance(inst, sweep_options(threads, progress));
  if (format == "csv")
    write_verify_csv(inst, rep, std::cout);
  else
    std::cout << verify_json(inst, rep).dump(2) << "\n";
  return rep.pass ? 0 : kExitFail;
}

struct CriteriaArgs {
  std::string field, phi = "x", psi = "x", g = "0", h = "1", alpha, a, b;
  std::uint64_t q = 0;
};

AgwInstance agw_from(const Field& f, const CriteriaArgs& c) {
  AgwInstance inst;
  inst.phi = linearized_from_sparse(f, parse_poly(f, c.phi), f.p());
  inst.psi = linearized_from_sparse(f, parse_poly(f, c.psi), f.p());
  inst.g = parse_poly(f, c.g);
  inst.h = parse_poly(f, c.h);
  inst.q_sub = c.q == 0 ? f.p() : c.q;
  return inst;
}

int cmd_criteria(const std::string& which, const CriteriaArgs& c) {
  if (c.field.empty()) throw Error(Errc::BadParameters, "--field is required");
  const Field f = parse_field(c.field);
  Json j;
  if (which == "quad") {
    if (c.a.empty() || c.b.empty()) throw Error(Errc::BadParameters, "quad needs --a and --b");
    const auto r = quad_root_count(f, parse_element(f, c.a), parse_element(f, c.b));
    j = Json{{"count", r.count}, {"trace", r.trace}, {"contract", (r.count == 2) == (r.trace == 0)}};
  } else if (which == "agw") {
    const auto r = agw_permutation_check(f, agw_from(f, c));
    j = Json{{"condition1", r.condition1},
             {"condition2", r.condition2},
             {"direct", r.direct},
             {"contract", (r.condition1 && r.condition2) == r.direct}};
  } else {
    if (c.alpha.empty()) throw Error(Errc::BadParameters, "agw2to1 needs --alpha");
    const auto r = agw_2to1_check(f, agw_from(f, c), parse_element(f, c.alpha));
    j = Json{{"hypotheses", r.hypotheses}, {"direct_2to1", r.direct_2to1}, {"contract", !r.hypotheses || r.direct_2to1}};
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_table(const std::string& manifest, const std::string& format, const std::vector<std::string>& only,
              unsigned threads) {
  auto rows = load_manifest(manifest);
  if (!only.empty()) {
    std::erase_if(rows, [&](const TableRow& r) { return std::find(only.begin(), only.end(), r.id) == only.end(); });
    if (rows.empty()) throw Error(Errc::BadParameters, "no manifest row matches --row");
  }
  const auto results = run_table(rows, sweep_options(threads, false));
  if (format == "json")
    std::cout << table_json(results).dump(2) << "\n";
  else
    write_table_text(results, std::cout);
  const bool ok = std::all_of(results.begin(), results.end(), [](const TableRowResult& r) { return r.pass; });
  return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact c-differential uniformity over finite fields"};
  app.require_subcommand(1);

  std::string field_arg;
  auto* field_cmd = app.add_subcommand("field", "Print the canonical field GF(p^m)");
  field_cmd->add_option("--field", field_arg, "p,m or the order q")->required();

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "c-differential spectrum of one function");
  analyze->add_option("--field", an.field, "p,m or the order q");
  analyze->add_option("--fn", an.fn, "Polynomial, e.g. \"w^3 x^17 + x\"");
  analyze->add_option("--table", an.table, "CSV lookup table with header x,Fx");
  an.fam.attach(analyze, {"field", "c"});
  analyze->add_option("--c", an.c, "all | valid | comma-separated element list");
  analyze->add_option("--format", an.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  analyze->add_option("--out", an.out, "Write the report here instead of stdout");
  analyze->add_option("--threads", an.threads, "Worker threads (default: CDIFF_THREADS or all cores)");
  analyze->add_flag("--classical", an.classical, "Ordinary differential uniformity (c = 1, a != 0)");
  analyze->add_flag("--progress", an.progress, "Report each finished c on stderr");

  FamilyArgs cons;
  std::string cons_out;
  auto* construct = app.add_subcommand("construct", "Build a family instance and list its valid c");
  cons.attach(construct);
  construct->add_option("--out", cons_out, "Also write the lookup table as CSV");

  FamilyArgs ver;
  std::string ver_format = "json";
  unsigned ver_threads = 0;
  bool ver_progress = false;
  auto* verify = app.add_subcommand("verify", "Check a family instance against its claimed uniformity");
  ver.attach(verify);
  verify->add_option("--format", ver_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--threads", ver_threads, "Worker threads");
  verify->add_flag("--progress", ver_progress, "Report each finished c on stderr");

  CriteriaArgs crit;
  auto* criteria = app.add_subcommand("criteria", "Supporting criteria (quad, agw, agw2to1)");
  criteria->require_subcommand(1);
  std::string crit_which;
  for (const std::string name : {"quad", "agw", "agw2to1"}) {
    auto* sub = criteria->add_subcommand(name);
    sub->set_help_flag("--help", "Print this help message and exit");  // frees --h for the h polynomial
    sub->add_option("--field", crit.field, "p,m or the order q")->required();
    if (name == "quad") {
      sub->add_option("--a", crit.a)->required();
      sub->add_option("--b", crit.b)->required();
    } else {
      sub->add_option("--q", crit.q, "Order of the subfield holding h(psi(x)) (default p)");
      sub->add_option("--phi", crit.phi);
      sub->add_option("--psi", crit.psi);
      sub->add_option("--g", crit.g);
      sub->add_option("--h", crit.h);
      if (name == "agw2to1") sub->add_option("--alpha", crit.alpha)->required();
    }
    sub->callback([&crit_which, name] { crit_which = name; });
  }

  std::string manifest = std::string(CDIFF_DATA_DIR) + "/table1.json", table_format = "text";
  std::vector<std::string> table_rows;
  unsigned table_threads = 0;
  auto* table = app.add_subcommand("table", "Regenerate the summary table from the pinned manifest");
  table->add_option("--manifest", manifest, "Manifest path");
  table->add_option("--format", table_format, "text | json")->check(CLI::IsMember({"text", "json"}));
  table->add_option("--row", table_rows, "Only run rows with these ids");
  table->add_option("--threads", table_threads, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*field_cmd) return cmd_field(field_arg);
    if (*analyze) return cmd_analyze(an);
    if (*construct) return cmd_construct(cons, cons_out);
    if (*verify) return cmd_verify(ver, ver_format, ver_threads, ver_progress);
    if (*criteria) return cmd_criteria(crit_which, crit);
    if (*table) return cmd_table(manifest, table_format, table_rows, table_threads);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitField;
  }
  return kExitUsage;
}
