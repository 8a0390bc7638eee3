// Copyright 2026 The qdc Authors
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

#include "qdc/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdc/circuit.hpp"
#include "qdc/classifier.hpp"
#include "qdc/data.hpp"
#include "qdc/encoding.hpp"
#include "qdc/error.hpp"
#include "qdc/rng.hpp"
#include "qdc/statevector.hpp"
#include "qdc/stats.hpp"

#ifndef QDC_VERSION
#define QDC_VERSION "0.0.0"
#endif

namespace qdc {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kCanonicalReps = 1000;
constexpr std::uint64_t kTable1Shots = 8192;
constexpr std::size_t kVerifyAngles = 50;

std::string fixed(double v, int precision = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& token) {
  const std::string t = trim(token);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw UsageError("'" + token + "' is not a number");
  }
  if (used != t.size() || !std::isfinite(v)) {
    throw UsageError("'" + token + "' is not a finite number");
  }
  return v;
}

FeatureVector parse_vector(const std::string& text) {
  if (trim(text).empty()) throw UsageError("empty vector");
  FeatureVector out;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) out.push_back(parse_number(token));
  if (text.back() == ',') throw UsageError("trailing comma in '" + text + "'");
  return out;
}

FeatureVector user_vector(const std::string& text) {
  const auto raw = parse_vector(text);
  try {
    return normalize(raw);
  } catch (const ZeroVectorError&) {
    throw UsageError("vector '" + text + "' has zero norm");
  }
}

/// "x1,x2,...:label" with label -1 or +1.
std::pair<FeatureVector, int> parse_training_point(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos) {
    throw UsageError("training point '" + text + "' needs a ':label' suffix");
  }
  const double label = parse_number(text.substr(colon + 1));
  if (label != -1.0 && label != 1.0) {
    throw UsageError("training label in '" + text + "' must be -1 or +1");
  }
  return {user_vector(text.substr(0, colon)), static_cast<int>(label)};
}

FeatureVector preset_vector(const std::string& name) {
  if (name == "xprime") return presets::x_tilde_prime();
  if (name == "xdoubleprime") return presets::x_tilde_double_prime();
  throw UsageError("unknown preset '" + name + "'");
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (std::getenv("QDC_SEED") != nullptr) {
    auto env = default_seed_from_env();
    if (!env) throw UsageError("QDC_SEED is not an unsigned 64-bit integer");
    return *env;
  }
  return kDefaultSeed;
}

void emit(const std::string& text, const std::string& path,
          std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  file.close();
  if (!file) throw IoError("failed writing '" + path + "'");
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t j = 0; j < header.size(); ++j) width[j] = header[j].size();
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      width[j] = std::max(width[j], row[j].size());
    }
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
      os << cells[j];
      if (j + 1 < cells.size()) {
        os << std::string(width[j] - cells[j].size() + 2, ' ');
      }
    }
    os << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : rows) line(row);
  return os.str();
}

std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (j) os << ',';
      os << cells[j];
    }
    os << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return os.str();
}

Json meta(const std::string& command, std::uint64_t seed, Json config) {
  Json j;
  j["tool"] = "qdc";
  j["version"] = version_string();
  j["command"] = command;
  j["seed"] = seed;
  j["config"] = std::move(config);
  return j;
}

std::string vector_text(const FeatureVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += fixed(v[i]);
  }
  return s;
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  std::string preset;
  std::string input;
  std::vector<std::string> train;
  std::optional<std::uint64_t> shots;
  std::optional<std::uint64_t> seed;
  std::string format = "table";
  std::string output;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  if (a.preset.empty() == a.input.empty()) {
    throw UsageError("give exactly one of --preset or --input");
  }
  const FeatureVector x =
      a.preset.empty() ? user_vector(a.input) : preset_vector(a.preset);

  TrainingSet train = presets::experiment_training_set();
  if (!a.train.empty()) {
    train = TrainingSet{};
    for (const auto& t : a.train) {
      auto [v, y] = parse_training_point(t);
      train.vectors.push_back(std::move(v));
      train.labels.push_back(y);
    }
  }
  if (train.dimension() != x.size() ||
      std::any_of(train.vectors.begin(), train.vectors.end(),
                  [&](const auto& v) { return v.size() != x.size(); })) {
    throw UsageError("input and training vectors differ in dimension");
  }

  const std::uint64_t seed = resolve_seed(a.seed);
  if (a.shots && *a.shots < 1) throw UsageError("--shots must be >= 1");
  const auto state = prepare_state(train, x);
  ClassificationOutcome o;
  try {
    o = a.shots ? interfere_and_sample(state, *a.shots, seed)
                : interfere_and_read(state);
  } catch (const ImpossibleBranchError& e) {
    throw Error(std::string("postselection cannot succeed: ") + e.what());
  }

  const std::string mode = a.shots ? "sampled" : "analytic";
  const std::string shots = a.shots ? std::to_string(*a.shots) : "";
  const std::string accepted = a.shots ? std::to_string(o.accepted) : "";
  std::string text;
  if (a.format == "json") {
    Json cfg;
    cfg["preset"] = a.preset;
    cfg["input"] = x;
    cfg["train"] = Json::array();
    for (std::size_t m = 0; m < train.size(); ++m) {
      cfg["train"].push_back({{"x", train.vectors[m]}, {"y", train.labels[m]}});
    }
    cfg["shots"] = a.shots ? Json(*a.shots) : Json("analytic");
    Json j = meta("classify", seed, std::move(cfg));
    j["result"] = {{"p_acc", o.p_acc},
                   {"p_class_minus", o.p_class_minus},
                   {"p_class_plus", o.p_class_plus},
                   {"predicted", o.predicted},
                   {"accepted", a.shots ? Json(o.accepted) : Json(nullptr)}};
    text = j.dump(2) + "\n";
  } else {
    const std::vector<std::string> header{
        "input", "mode",   "shots",        "accepted",
        "p_acc", "p(c=0)", "p(c=1)",       "predicted"};
    const std::vector<std::vector<std::string>> rows{
        {a.preset.empty() ? vector_text(x) : a.preset, mode, shots, accepted,
         fixed(o.p_acc), fixed(o.p_class_minus), fixed(o.p_class_plus),
         std::to_string(o.predicted)}};
    if (a.format == "csv") {
      text = render_csv({"input", "mode", "shots", "accepted", "p_acc",
                         "p_class_minus", "p_class_plus", "predicted"},
                        rows);
    } else {
      text = render_table(header, rows);
    }
  }
  emit(text, a.output, out);
  return kExitOk;
}

// --------------------------------------------------------------- reproduce

struct ReproduceArgs {
  int table = 0;
  std::optional<std::uint64_t> seed;
  std::size_t reps = kCanonicalReps;
  unsigned threads = 0;
  std::string format = "csv";
  std::string output;
};

struct Table2Row {
  std::string name;
  std::function<LabeledDataset(std::uint64_t)> load;
  int copies;
  std::string expected;
  std::string tolerance;
  std::function<bool(const BenchmarkReport&)> pass;
};

bool p_acc_ok(const BenchmarkReport& r) {
  return std::abs(r.mean_p_acc - 0.50) <= 0.05;
}

std::vector<Table2Row> table2_rows() {
  auto iris_of = [](int a, int b) {
    return [a, b](std::uint64_t) { return iris({a, b}); };
  };
  auto circles_of = [](std::uint64_t seed) { return circles({}, seed); };
  return {
      {"iris 1&2", iris_of(1, 2), 1, "0.00", "0.01",
       [](const auto& r) { return r.mean_error <= 0.01 && p_acc_ok(r); }},
      {"iris 1&3", iris_of(1, 3), 1, "0.00", "0.01",
       [](const auto& r) { return r.mean_error <= 0.01 && p_acc_ok(r); }},
      {"iris 2&3", iris_of(2, 3), 1, "0.07", "0.04",
       [](const auto& r) {
         return std::abs(r.mean_error - 0.07) <= 0.04 && p_acc_ok(r);
       }},
      {"iris 2&3 feat map", iris_of(2, 3), 2, "0.00", "0.01",
       [](const auto& r) { return r.mean_error <= 0.01 && p_acc_ok(r); }},
      {"circles feat map", circles_of, 2, "0.00", "0.02",
       [](const auto& r) { return r.mean_error <= 0.02; }},
      {"circles", circles_of, 1, "0.62", ">=0.40",
       [](const auto& r) { return r.mean_error >= 0.40; }},
  };
}

std::string reproduce_table1(std::uint64_t seed, const std::string& format) {
  const auto train = presets::experiment_training_set();
  const std::array<std::string, 2> names{"xprime", "xdoubleprime"};
  std::vector<std::vector<std::string>> rows;
  Json results = Json::array();
  for (std::size_t k = 0; k < names.size(); ++k) {
    const auto state = prepare_state(train, preset_vector(names[k]));
    const auto exact = interfere_and_read(state);
    const auto sampled =
        interfere_and_sample(state, kTable1Shots, derive_seed(seed, k));
    for (const auto* o : {&exact, &sampled}) {
      const bool is_sampled = o->shots.has_value();
      rows.push_back({names[k], is_sampled ? "sampled" : "analytic",
                      is_sampled ? std::to_string(*o->shots) : "",
                      fixed(o->p_acc), fixed(o->p_class_minus),
                      fixed(o->p_class_plus), std::to_string(o->predicted)});
      results.push_back({{"input", names[k]},
                         {"mode", is_sampled ? "sampled" : "analytic"},
                         {"shots", is_sampled ? Json(*o->shots) : Json(nullptr)},
                         {"p_acc", o->p_acc},
                         {"p_class_minus", o->p_class_minus},
                         {"p_class_plus", o->p_class_plus},
                         {"predicted", o->predicted}});
    }
  }
  if (format == "json") {
    Json j = meta("reproduce", seed, {{"table", 1}, {"shots", kTable1Shots}});
    j["rows"] = std::move(results);
    return j.dump(2) + "\n";
  }
  const std::vector<std::string> header{
      "input", "mode", "shots", "p_acc", "p_class_minus", "p_class_plus",
      "predicted"};
  return format == "csv" ? render_csv(header, rows)
                         : render_table(header, rows);
}

std::string reproduce_table2(const ReproduceArgs& a, std::uint64_t seed) {
  std::vector<std::vector<std::string>> rows;
  Json results = Json::array();
  for (const auto& row : table2_rows()) {
    BenchmarkOptions opts;
    opts.feature_map_copies = row.copies;
    opts.seed = seed;
    opts.threads = a.threads;
    const auto report = run_benchmark(row.load(seed), a.reps, opts);
    const bool pass = row.pass(report);
    rows.push_back({row.name, std::to_string(a.reps), fixed(report.mean_error),
                    fixed(report.variance), fixed(report.mean_p_acc),
                    row.expected, row.tolerance, pass ? "yes" : "no"});
    results.push_back({{"dataset", row.name},
                       {"feature_map_copies", row.copies},
                       {"reps", a.reps},
                       {"mean_error", report.mean_error},
                       {"variance", report.variance},
                       {"mean_p_acc", report.mean_p_acc},
                       {"impossible_count", report.impossible_count},
                       {"expected", row.expected},
                       {"tolerance", row.tolerance},
                       {"pass", pass}});
  }
  if (a.format == "json") {
    Json j = meta("reproduce", seed,
                  {{"table", 2},
                   {"reps", a.reps},
                   {"train_fraction", BenchmarkOptions{}.train_fraction},
                   {"circles", {{"n_per_class", CirclesParams{}.n_per_class},
                                {"radius_ratio", CirclesParams{}.radius_ratio},
                                {"noise_std", CirclesParams{}.noise_std}}}});
    j["canonical"] = a.reps == kCanonicalReps;
    j["rows"] = std::move(results);
    return j.dump(2) + "\n";
  }
  const std::vector<std::string> header{
      "dataset", "reps",     "mean_error", "variance",
      "mean_p_acc", "expected", "tolerance",  "pass"};
  return a.format == "csv" ? render_csv(header, rows)
                           : render_table(header, rows);
}

int cmd_reproduce(const ReproduceArgs& a, std::ostream& out,
                  std::ostream& err) {
  const std::uint64_t seed = resolve_seed(a.seed);
  if (a.reps < 1) throw UsageError("--reps must be >= 1");
  std::string text;
  if (a.table == 1) {
    text = reproduce_table1(seed, a.format);
  } else {
    if (a.reps != kCanonicalReps) {
      err << "note: " << a.reps << " repetitions (canonical is "
          << kCanonicalReps << "); results are non-canonical\n";
    }
    text = reproduce_table2(a, seed);
  }
  emit(text, a.output, out);
  return kExitOk;
}

// ---------------------------------------------------- verify-decompositions

struct VerifyArgs {
  std::optional<std::uint64_t> seed;
  std::string format = "table";
  std::string output;
  bool inject_toffoli_fault = false;
};

struct Check {
  std::string name;
  double value;
  double limit;
  bool pass;
};

Circuit single(std::size_t n, const GateOp& op) {
  Circuit c(n);
  c.append(op);
  return c;
}

Circuit with_first_t_flipped(const Circuit& c) {
  Circuit out(c.n_qubits());
  bool flipped = false;
  for (GateOp op : c.ops()) {
    if (!flipped && op.kind == GateKind::T) {
      op.kind = GateKind::Tdg;
      flipped = true;
    }
    out.append(op);
  }
  return out;
}

double unitary_gap(const Circuit& decomposed, const Circuit& ideal) {
  return phase_insensitive_distance(circuit_unitary(decomposed),
                                    circuit_unitary(ideal));
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(a.seed);
  std::vector<Check> checks;
  auto add = [&](std::string name, double value, double limit) {
    checks.push_back({std::move(name), value, limit, value <= limit});
  };

  add("swap", unitary_gap(swap_decomposition(2, 0, 1),
                          single(2, gates::swap(0, 1))), 1e-12);
  Circuit toffoli = toffoli_decomposition(3, 0, 1, 2);
  if (a.inject_toffoli_fault) toffoli = with_first_t_flipped(toffoli);
  add("toffoli", unitary_gap(toffoli, single(3, gates::toffoli(0, 1, 2))),
      1e-12);
  add("toffoli (target-centred)",
      unitary_gap(toffoli_target_centred(3, 0, 1, 2),
                  single(3, gates::toffoli(0, 1, 2))),
      1e-12);

  Rng rng(seed);
  double cry_gap = 0.0, ccry_gap = 0.0;
  for (std::size_t k = 0; k < kVerifyAngles; ++k) {
    const double theta = (2.0 * rng.uniform() - 1.0) * 2.0 * std::numbers::pi;
    cry_gap = std::max(cry_gap, unitary_gap(cry_decomposition(2, 0, 1, theta),
                                            single(2, gates::cry(0, 1, theta))));
    ccry_gap = std::max(
        ccry_gap, unitary_gap(ccry_decomposition(3, 0, 1, 2, theta),
                              single(3, gates::ccry(0, 1, 2, theta))));
  }
  add("cry (" + std::to_string(kVerifyAngles) + " angles)", cry_gap, 1e-10);
  add("ccry (" + std::to_string(kVerifyAngles) + " angles)", ccry_gap, 1e-10);

  const auto graph = star_graph_ibm5();
  const auto assignment = experiment_assignment();
  for (const std::string name : {"xprime", "xdoubleprime"}) {
    const auto circuit = decompose(
        with_interference(build_experiment_circuit(
            preset_vector(name), presets::x0(), presets::x1())),
        graph, assignment);
    add("gate count " + name, static_cast<double>(circuit.size()), 80);
    add("connectivity violations " + name,
        static_cast<double>(
            validate_connectivity(circuit, graph, assignment).size()),
        0);
  }

  const bool all = std::all_of(checks.begin(), checks.end(),
                               [](const Check& c) { return c.pass; });
  auto number = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return std::string(buf);
  };
  std::string text;
  if (a.format == "json") {
    Json j = meta("verify-decompositions", seed,
                  {{"angles", kVerifyAngles},
                   {"inject_toffoli_fault", a.inject_toffoli_fault}});
    j["checks"] = Json::array();
    for (const auto& c : checks) {
      j["checks"].push_back({{"check", c.name},
                             {"value", c.value},
                             {"limit", c.limit},
                             {"pass", c.pass}});
    }
    j["pass"] = all;
    text = j.dump(2) + "\n";
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : checks) {
      rows.push_back(
          {c.name, number(c.value), number(c.limit), c.pass ? "yes" : "no"});
    }
    const std::vector<std::string> header{"check", "value", "limit", "pass"};
    text = a.format == "csv" ? render_csv(header, rows)
                             : render_table(header, rows);
  }
  emit(text, a.output, out);
  return all ? kExitOk : kExitCheckFailed;
}

// -------------------------------------------------------------- export-qasm

struct ExportArgs {
  std::string preset;
  std::string output;
};

int cmd_export(const ExportArgs& a, std::ostream& out) {
  const auto circuit = decompose(
      with_interference(build_experiment_circuit(
          preset_vector(a.preset), presets::x0(), presets::x1())),
      star_graph_ibm5(), experiment_assignment());
  emit(export_qasm(circuit), a.output, out);
  return kExitOk;
}

// -------------------------------------------------------------------- shots

struct ShotsArgs {
  double eps = 0.0;
  double z = kZ99;
  std::string method = "wald";
  std::string format = "table";
  std::string output;
};

int cmd_shots(const ShotsArgs& a, std::ostream& out) {
  if (!(a.eps > 0.0 && a.eps < 0.5)) {
    throw UsageError("--eps must lie in (0, 0.5)");
  }
  if (!(a.z > 0.0) || !std::isfinite(a.z)) {
    throw UsageError("--z must be positive");
  }
  const auto method = parse_method(a.method);
  const std::uint64_t shots = shots_for_error(a.eps, a.z, method);
  const double bound = worst_case_bound(method, shots, a.z);
  std::string text;
  if (a.format == "json") {
    Json j;
    j["tool"] = "qdc";
    j["version"] = version_string();
    j["command"] = "shots";
    j["config"] = {{"epsilon", a.eps}, {"z", a.z}, {"method", a.method}};
    j["shots"] = shots;
    j["bound"] = bound;
    text = j.dump(2) + "\n";
  } else {
    const std::vector<std::string> header{"method", "epsilon", "z", "shots",
                                          "bound"};
    const std::vector<std::vector<std::string>> rows{
        {a.method, fixed(a.eps), fixed(a.z, 4), std::to_string(shots),
         fixed(bound, 8)}};
    text = a.format == "csv" ? render_csv(header, rows)
                             : render_table(header, rows);
  }
  emit(text, a.output, out);
  return kExitOk;
}

}  // namespace

const char* version_string() { return QDC_VERSION; }

std::optional<std::uint64_t> default_seed_from_env() {
  const char* env = std::getenv("QDC_SEED");
  if (env == nullptr) return kDefaultSeed;
  const std::string s = env;
  if (s.empty() || s.size() > 20 ||
      !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return std::nullopt;
  }
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) return std::nullopt;
    return static_cast<std::uint64_t>(v);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Distance-based quantum classifier toolkit", "qdc"};
  app.set_version_flag("--version", std::string(version_string()));
  app.require_subcommand(1);
  const std::vector<std::string> formats{"table", "csv", "json"};

  ClassifyArgs ca;
  auto* classify_cmd =
      app.add_subcommand("classify", "Classify one input vector");
  classify_cmd->add_option("--preset", ca.preset, "Named input vector")
      ->check(CLI::IsMember({"xprime", "xdoubleprime"}));
  classify_cmd->add_option("--input", ca.input,
                           "Comma-separated input vector (normalised)");
  classify_cmd->add_option(
      "--train", ca.train,
      "Training point 'x1,x2,...:label' (repeatable; default: Iris pair)");
  classify_cmd->add_option("--shots", ca.shots, "Sample this many shots");
  classify_cmd->add_option("--seed", ca.seed, "Sampling seed");
  classify_cmd->add_option("--format", ca.format)
      ->check(CLI::IsMember(formats));
  classify_cmd->add_option("-o,--output", ca.output, "Output file");

  ReproduceArgs ra;
  auto* reproduce_cmd =
      app.add_subcommand("reproduce", "Regenerate a results table");
  reproduce_cmd->add_option("--table", ra.table, "Table number")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  reproduce_cmd->add_option("--seed", ra.seed, "Master seed");
  reproduce_cmd->add_option("--reps", ra.reps, "Random splits per row");
  reproduce_cmd->add_option("--threads", ra.threads, "Worker threads (0: all)");
  reproduce_cmd->add_option("--format", ra.format)
      ->check(CLI::IsMember(formats));
  reproduce_cmd->add_option("-o,--output", ra.output, "Output file");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand(
      "verify-decompositions", "Check gate decompositions and the gate budget");
  verify_cmd->add_option("--seed", va.seed, "Seed for the random angles");
  verify_cmd->add_option("--format", va.format)->check(CLI::IsMember(formats));
  verify_cmd->add_option("-o,--output", va.output, "Output file");
  verify_cmd->add_flag("--inject-toffoli-fault", va.inject_toffoli_fault)
      ->group("");

  ExportArgs ea;
  auto* export_cmd = app.add_subcommand(
      "export-qasm", "Write the decomposed experiment circuit as OpenQASM 2.0");
  export_cmd->add_option("--preset", ea.preset, "Named input vector")
      ->required()
      ->check(CLI::IsMember({"xprime", "xdoubleprime"}));
  export_cmd->add_option("-o,--output", ea.output, "Output file");

  ShotsArgs sa;
  auto* shots_cmd =
      app.add_subcommand("shots", "Shots needed for a worst-case error");
  shots_cmd->add_option("--eps", sa.eps, "Target error")->required();
  shots_cmd->add_option("--z", sa.z, "Confidence multiplier");
  shots_cmd->add_option("--method", sa.method)
      ->check(CLI::IsMember({"wald", "wilson"}));
  shots_cmd->add_option("--format", sa.format)->check(CLI::IsMember(formats));
  shots_cmd->add_option("-o,--output", sa.output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(ca, out);
    if (*reproduce_cmd) return cmd_reproduce(ra, out, err);
    if (*verify_cmd) return cmd_verify(va, out);
    if (*export_cmd) return cmd_export(ea, out);
    if (*shots_cmd) return cmd_shots(sa, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace qdc
