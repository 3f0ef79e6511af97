// Copyright 2026 The Accredia Authors
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

#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "accredia/accreditor.hpp"
#include "accredia/densim.hpp"
#include "accredia/errors.hpp"
#include "accredia/hypergraph.hpp"
#include "accredia/io.hpp"
#include "accredia/limits.hpp"

namespace accredia::cli {
namespace {

using io::Json;

struct CommonOptions {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  std::optional<std::size_t> parallelism;
  bool json = false;
  bool csv = false;
  bool no_timestamp = false;
};

void add_common(CLI::App* app, CommonOptions& o, bool config_required) {
  auto* cfg = app->add_option("--config", o.config, "JSON config file");
  if (config_required) cfg->required();
  app->add_option("--seed", o.seed, "Root seed (overrides the config)");
  app->add_option("--out", o.out_dir, "Directory for output artifacts");
  app->add_option("--parallelism", o.parallelism, "Worker threads (overrides the config)");
  app->add_flag("--json", o.json, "Emit JSON");
  app->add_flag("--csv", o.csv, "Emit CSV");
  app->add_flag("--no-timestamp", o.no_timestamp, "Omit the timestamp field for byte-stable output");
}

Json load_config(const std::string& path) {
  if (path.empty()) return Json::object();
  std::ifstream in(path);
  if (!in) throw ParameterError("config", "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParameterError("config", std::string("malformed JSON: ") + e.what());
  }
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

// A document gets the command name first and an optional timestamp.
Json envelope(std::string_view command, const CommonOptions& o) {
  Json j;
  j["command"] = std::string(command);
  if (!o.no_timestamp) j["timestamp"] = timestamp_utc();
  return j;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path.string() + "'");
  f << text;
}

// Writes the JSON document and any CSV tables, to --out or stdout.
void emit(const CommonOptions& o, std::string_view command, const Json& doc,
          const std::vector<std::pair<std::string, std::string>>& csvs, std::ostream& out) {
  const bool want_json = o.json || !o.csv;
  const bool want_csv = o.csv || (o.out_dir.size() && !o.json);
  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    const std::filesystem::path dir(o.out_dir);
    if (want_json) write_file(dir / (std::string(command) + ".json"), doc.dump(2) + "\n");
    if (want_csv) {
      for (const auto& [name, text] : csvs) write_file(dir / name, text);
    }
    return;
  }
  if (want_json) out << doc.dump(2) << "\n";
  if (want_csv) {
    for (const auto& [name, text] : csvs) out << text;
  }
}

double number_or(const Json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw ParameterError(key, "expected a number");
  return j[key].get<double>();
}

std::vector<double> numbers_of(const Json& j, const char* key) {
  std::vector<double> out;
  if (!j.contains(key)) return out;
  const Json& v = j[key];
  if (v.is_number()) return {v.get<double>()};
  if (!v.is_array()) throw ParameterError(key, "expected a number or a list of numbers");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) throw ParameterError(std::string(key) + "[" + std::to_string(i) + "]", "expected a number");
    out.push_back(v[i].get<double>());
  }
  return out;
}

std::shared_ptr<const WeightedHamiltonian> hamiltonian_of(const Json& j) {
  if (j.is_array()) return std::make_shared<const WeightedHamiltonian>(io::hamiltonian_from_json(j));
  if (!j.contains("hamiltonian")) throw ParameterError("hamiltonian", "missing");
  return std::make_shared<const WeightedHamiltonian>(io::hamiltonian_from_json(j["hamiltonian"]));
}

NoiseModel noise_of(const Json& j, std::size_t n) {
  return j.contains("noise") ? io::noise_from_json(j["noise"], n) : NoiseModel{};
}

void apply_overrides(ProtocolConfig& cfg, const CommonOptions& o) {
  if (o.seed) cfg.seed = *o.seed;
  if (o.parallelism) cfg.parallelism = *o.parallelism;
  cfg.validate();
}

Json protocol_document(std::string_view command, const CommonOptions& o, const ProtocolConfig& cfg,
                       const NoiseModel& noise, const ProtocolResult& r) {
  Json doc = envelope(command, o);
  doc["config"] = io::to_json(cfg);
  doc["noise"] = io::to_json(noise);
  doc["result"] = io::to_json(r);
  return doc;
}

int cmd_accredit(const CommonOptions& o, std::ostream& out) {
  const Json j = load_config(o.config);
  ProtocolConfig cfg = io::protocol_config_from_json(j, {"noise"});
  apply_overrides(cfg, o);
  const NoiseModel noise = noise_of(j, cfg.hamiltonian->n_qubits());
  const ProtocolResult r = run_protocol(cfg, &noise);
  emit(o, "accredit", protocol_document("accredit", o, cfg, noise, r),
       {{"summary.csv", io::summary_csv(r)}, {"executions.csv", io::executions_csv(r)}}, out);
  return kOk;
}

int cmd_advantage(const CommonOptions& o, std::ostream& out) {
  const Json j = load_config(o.config);
  io::reject_unknown(j, {"rows", "cols", "J", "h", "t", "eps", "alpha", "theta", "seed", "prep", "meas",
                         "parallelism", "target_shots", "noise"},
                     "");
  const auto rows = static_cast<std::size_t>(number_or(j, "rows", 2));
  const auto cols = static_cast<std::size_t>(number_or(j, "cols", 2));
  std::vector<double> J = numbers_of(j, "J");
  if (J.empty()) J = {1.0};
  const std::vector<double> h = numbers_of(j, "h");
  Json proto = j;
  for (const char* k : {"rows", "cols", "J", "h", "noise"}) proto.erase(k);
  proto["hamiltonian"] = io::to_json(advantage_preset(rows, cols, J, h));
  if (!proto.contains("eps")) proto["eps"] = 0.05;
  ProtocolConfig cfg = io::protocol_config_from_json(proto);
  apply_overrides(cfg, o);
  const NoiseModel noise = noise_of(j, cfg.hamiltonian->n_qubits());
  const ProtocolResult r = run_protocol(cfg, &noise);
  const AdvantageVerdict v = advantage_verdict(r);
  Json doc = protocol_document("advantage", o, cfg, noise, r);
  doc["lattice"] = Json{{"rows", rows}, {"cols", cols}, {"J", J}, {"h", h}};
  doc["verdict"] = Json{{"threshold", v.threshold}, {"epsilon_vd", v.epsilon_vd}, {"margin", v.margin},
                        {"passed", v.passed}};
  std::ostringstream verdict_csv;
  verdict_csv << "threshold,epsilon_vd,margin,passed\n"
              << io::format_double(v.threshold) << ',' << io::format_double(v.epsilon_vd) << ','
              << io::format_double(v.margin) << ',' << (v.passed ? "true" : "false") << '\n';
  emit(o, "advantage", doc,
       {{"verdict.csv", verdict_csv.str()}, {"summary.csv", io::summary_csv(r)},
        {"executions.csv", io::executions_csv(r)}},
       out);
  return kOk;
}

int cmd_twirl_check(const CommonOptions& o, std::ostream& out) {
  const Json j = load_config(o.config);
  if (j.is_object()) io::reject_unknown(j, {"hamiltonian"}, "");
  const auto h = hamiltonian_of(j);
  const InversionGroup g = build_inversion_group(*h);
  const double residual = twirl_check(g, *h);
  Json doc = envelope("twirl-check", o);
  doc["hamiltonian"] = io::to_json(*h);
  doc["group"] = io::to_json(g);
  doc["residual"] = residual;
  std::ostringstream csv;
  csv << "L,residual\n" << g.size() << ',' << io::format_double(residual) << '\n';
  emit(o, "twirl-check", doc, {{"twirl.csv", csv.str()}}, out);
  return kOk;
}

int cmd_invert_bench(const CommonOptions& o, std::ostream& out) {
  const Json j = load_config(o.config);
  io::reject_unknown(j, {"hamiltonian", "t", "M", "eps", "noise"}, "");
  const auto h = hamiltonian_of(j);
  const double t = number_or(j, "t", 1.0);
  const std::vector<double> ms = numbers_of(j, "M");
  const std::vector<double> epss = numbers_of(j, "eps");
  if (ms.empty() == epss.empty()) throw ParameterError("M", "give exactly one of M or eps to sweep");
  const NoiseModel noise = noise_of(j, h->n_qubits());
  require_choi(h->n_qubits(), "invert-bench");

  const InversionGroup g = build_inversion_group(*h);
  const std::size_t L = g.size();
  const SplitTimes split = split_time(t, L);
  const Matrix ideal = unitary_choi(exact_unitary(*h, -split.t2 / static_cast<double>(L - 1)));

  struct Point {
    std::size_t m;
    double eps;
  };
  std::vector<Point> points;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (!(ms[i] >= 1) || ms[i] != std::floor(ms[i]) || ms[i] > static_cast<double>(kMaxSlices)) {
      throw ParameterError("M[" + std::to_string(i) + "]", "must be a positive integer");
    }
    points.push_back({static_cast<std::size_t>(ms[i]), std::nan("")});
  }
  for (double eps : epss) points.push_back({compute_M(*h, split.t2, eps, L), eps});

  Json rows = Json::array();
  std::ostringstream csv;
  csv << "M,eps,distance,diamond_lower,diamond_upper\n";
  for (const auto& p : points) {
    const Matrix got = averaged_subcircuit_choi(*h, g, split.t2, p.m, Direction::inverted,
                                                noise.empty() ? nullptr : &noise);
    const ChoiDistance d = choi_trace_distance(got, ideal);
    Json row{{"M", p.m}};
    row["eps"] = std::isnan(p.eps) ? Json(nullptr) : Json(p.eps);
    row["distance"] = d.distance;
    row["diamond_lower"] = d.diamond_lower;
    row["diamond_upper"] = d.diamond_upper;
    rows.push_back(row);
    csv << p.m << ',' << (std::isnan(p.eps) ? "" : io::format_double(p.eps)) << ','
        << io::format_double(d.distance) << ',' << io::format_double(d.diamond_lower) << ','
        << io::format_double(d.diamond_upper) << '\n';
  }
  Json doc = envelope("invert-bench", o);
  doc["hamiltonian"] = io::to_json(*h);
  doc["L"] = L;
  doc["t"] = t;
  doc["t2"] = split.t2;
  doc["points"] = rows;
  emit(o, "invert-bench", doc, {{"invert-bench.csv", csv.str()}}, out);
  return kOk;
}

int cmd_trap_audit(const CommonOptions& o, std::ostream& out) {
  const Json j = load_config(o.config);
  io::reject_unknown(j, {"hamiltonian", "t", "eps", "boundary"}, "");
  const auto h = hamiltonian_of(j);
  const double t = number_or(j, "t", 1.0);
  const double eps = number_or(j, "eps", 0.05);
  const double boundary = number_or(j, "boundary", 0);
  if (!(boundary >= 0) || boundary != std::floor(boundary)) {
    throw ParameterError("boundary", "must be a non-negative integer");
  }
  const InversionPlan plan = make_plan(h, t, eps);
  const TrapAudit audit = trap_audit(plan, static_cast<std::size_t>(boundary));
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "error,detection\n";
  for (const auto& r : audit.rows) {
    rows.push_back(Json{{"error", r.error.word()}, {"detection", r.detection}});
    csv << r.error.word() << ',' << io::format_double(r.detection) << '\n';
  }
  Json doc = envelope("trap-audit", o);
  doc["hamiltonian"] = io::to_json(*h);
  doc["L"] = plan.L();
  doc["slices"] = plan.slices;
  doc["boundary"] = audit.boundary;
  doc["dressings"] = audit.dressings;
  doc["baseline"] = audit.baseline;
  doc["min_detection"] = audit.min_detection();
  doc["rows"] = rows;
  emit(o, "trap-audit", doc, {{"trap-audit.csv", csv.str()}}, out);
  return kOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Accredited analogue quantum simulation toolkit", "accredia"};
  app.require_subcommand(1);
  CommonOptions opts;
  auto* accredit = app.add_subcommand("accredit", "Run the trap/target protocol and report epsilon_vd");
  auto* bench = app.add_subcommand("invert-bench", "Sweep M or eps and report Choi distances of the inversion");
  auto* twirl = app.add_subcommand("twirl-check", "Twirl residual of the synthesized inversion group");
  auto* advantage = app.add_subcommand("advantage", "Lattice preset, protocol run and advantage verdict");
  auto* audit = app.add_subcommand("trap-audit", "Exact trap detection probability per injected Pauli error");
  add_common(accredit, opts, true);
  add_common(bench, opts, true);
  add_common(twirl, opts, true);
  add_common(advantage, opts, false);
  add_common(audit, opts, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (accredit->parsed()) return cmd_accredit(opts, out);
    if (bench->parsed()) return cmd_invert_bench(opts, out);
    if (twirl->parsed()) return cmd_twirl_check(opts, out);
    if (advantage->parsed()) return cmd_advantage(opts, out);
    if (audit->parsed()) return cmd_trap_audit(opts, out);
  } catch (const CapacityError& e) {
    err << "error: capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const ProtocolAborted& e) {
    err << "error: " << e.what() << " (" << e.partial().traps.size() << " traps finished)\n";
    return kFailure;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace accredia::cli
