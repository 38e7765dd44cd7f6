// Copyright 2026 The QSE Authors
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

// qse: command-line front end.
//
//   qse entropy     --in STATE|CHANNEL [--q Q --s S]
//   qse map-entropy --in CHANNEL [--in2 CHANNEL]
//   qse extremal    --in CHANNEL [--in2 STATE] [--out FILE]
//   qse exchange    --in CHANNEL [--in2 STATE]
//   qse verify      SUITE|all [--d D ...] [--trials N] [--seed S] [--renyi-scan] [--out FILE]
//   qse scan        --in CHANNEL --in2 CHANNEL [--out FILE] [--format csv|json]
//   qse gen         --kind KIND --d D [--p P] [--gamma G] [--lambda L] [--rank R] [--seed S] [--choi] [--out FILE]
//
// Inputs are JSON files or generator specs such as "depolarizing:d=2,p=1",
// "random:d=3,rank=2,seed=7" (channels) or "mixed:d=2", "pure:d=2,seed=1" (states).
// Exit codes: 0 ok, 1 assertion violations, 2 usage, parse or validation errors.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qse/qse.hpp"

namespace {

using nlohmann::json;
using namespace qse;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string fmt_list(std::span<const double> xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + fmt(xs[i]);
  return out + "]";
}

double assertion_tolerance() {
  const char* env = std::getenv("QSE_TOLERANCE");
  if (!env || !*env) return kAssertionTolerance;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v >= 0.0)) throw InvalidParameter("QSE_TOLERANCE must be a nonnegative number");
  return v;
}

struct Options {
  double q = 1.0;
  double s = 1.0;
  std::vector<long> dims;
  int trials = 50;
  std::uint64_t seed = 0;
  std::string in;
  std::string in2;
  std::string out;
  std::string format = "text";
  std::string suite;
  std::string kind = "random";
  double p = 1.0;
  double gamma = 0.5;
  double lambda = 0.5;
  long rank = 0;
  bool choi = false;
  bool renyi_scan = false;
  std::string dimension = "choi";
};

// ---------------------------------------------------------------------------
// Input resolution: a JSON file or a "kind:key=value,..." generator spec.

struct Spec {
  std::string kind;
  std::map<std::string, std::string> args;

  double number(const std::string& key, double fallback) const {
    auto it = args.find(key);
    if (it == args.end()) return fallback;
    try {
      std::size_t used = 0;
      const double v = std::stod(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument(key);
      return v;
    } catch (const std::exception&) {
      throw ParseError("generator spec: bad value for '" + key + "'");
    }
  }
  long integer(const std::string& key, long fallback) const {
    const double v = number(key, static_cast<double>(fallback));
    if (v != static_cast<double>(static_cast<long>(v))) throw ParseError("generator spec: '" + key + "' must be an integer");
    return static_cast<long>(v);
  }
};

std::optional<Spec> parse_spec(const std::string& text) {
  std::ifstream probe(text);
  if (probe.good()) return std::nullopt;
  const auto colon = text.find(':');
  Spec spec;
  spec.kind = text.substr(0, colon);
  if (colon != std::string::npos) {
    std::stringstream rest(text.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw ParseError("generator spec: expected key=value, got '" + item + "'");
      spec.args[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  return spec;
}

long spec_dim(const Spec& spec, const Options& o) {
  const long fallback = o.dims.empty() ? 2 : o.dims.front();
  const long d = spec.integer("d", fallback);
  if (d < 1 || d > 64) throw InvalidParameter("dimension out of range");
  return d;
}

KrausSet generate_channel(const std::string& kind, long d, double p, double gamma, double lambda, long rank,
                          std::uint64_t seed) {
  if (kind == "identity") return identity_channel(d);
  if (kind == "depolarizing") return depolarizing_channel(d, p);
  if (kind == "pinching") return computational_pinching(d);
  if (kind == "amplitude_damping") return amplitude_damping_channel(d, gamma);
  if (kind == "phase_damping") return phase_damping_channel(d, lambda);
  if (kind == "unitary") {
    Rng rng(seed);
    return unitary_channel(UnitaryMatrix(haar_unitary(d, rng)));
  }
  if (kind == "random") return random_channel(d, rank > 0 ? rank : d * d, seed);
  throw InvalidParameter("unknown channel kind '" + kind + "'");
}

Channel load_channel_input(const std::string& text, const Options& o) {
  auto spec = parse_spec(text);
  if (!spec) return io::load_channel(text);
  const long d = spec_dim(*spec, o);
  KrausSet k = generate_channel(spec->kind, d, spec->number("p", o.p), spec->number("gamma", o.gamma),
                                spec->number("lambda", o.lambda), spec->integer("rank", o.rank),
                                static_cast<std::uint64_t>(spec->integer("seed", static_cast<long>(o.seed))));
  return Channel::from_kraus(std::move(k));
}

DensityOperator load_state_input(const std::string& text, const Options& o, long default_dim) {
  auto spec = parse_spec(text);
  if (!spec) return io::load_state(text);
  const long d = spec->integer("d", default_dim);
  if (d < 1 || d > 64) throw InvalidParameter("dimension out of range");
  Rng rng(static_cast<std::uint64_t>(spec->integer("seed", static_cast<long>(o.seed))));
  if (spec->kind == "mixed") return DensityOperator::maximally_mixed(d);
  if (spec->kind == "pure") return DensityOperator::pure(random_pure_vector(d, rng));
  if (spec->kind == "random") return random_density(d, spec->integer("rank", d), rng);
  if (spec->kind == "plus") {
    ComplexVector v = ComplexVector::Ones(d) / std::sqrt(static_cast<double>(d));
    return DensityOperator::pure(v);
  }
  throw InvalidParameter("unknown state kind '" + spec->kind + "'");
}

// Either a state file/spec or a channel (whose Choi state is then used).
struct EntropySource {
  DensityOperator rho;
  std::string what;
};

EntropySource load_entropy_source(const std::string& text, const Options& o) {
  auto spec = parse_spec(text);
  if (spec) {
    if (spec->kind == "mixed" || spec->kind == "pure" || spec->kind == "plus")
      return {load_state_input(text, o, spec_dim(*spec, o)), "state"};
    return {load_channel_input(text, o).choi.sigma(), "choi"};
  }
  json j = io::read_json_file(text);
  if (io::is_state_json(j)) return {io::state_from_json(j), "state"};
  if (io::is_channel_json(j)) return {io::channel_from_json(j).choi.sigma(), "choi"};
  throw ParseError(text + ": neither a state nor a channel");
}

void emit(const Options& o, const json& j, const std::string& text) {
  const std::string body = o.format == "json" ? j.dump(2) + "\n" : text;
  if (o.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(o.out);
    if (!f) throw Error("cannot write " + o.out);
    f << body;
  }
}

// ---------------------------------------------------------------------------
// Commands

int cmd_entropy(const Options& o) {
  const EntropyParams params(o.q, o.s);
  auto src = load_entropy_source(o.in, o);
  const double unified = unified_entropy(src.rho, params);
  const double vn = von_neumann_entropy(src.rho);
  json j{{"source", src.what}, {"d", src.rho.dim()}, {"q", o.q}, {"s", o.s}, {"mode", to_string(params.mode)},
         {"unified", unified}, {"von_neumann", vn}};
  std::string text = "unified     " + fmt(unified) + "\n";
  if (o.q != 1.0) {
    const double ts = tsallis_entropy(src.rho, o.q);
    const double re = renyi_entropy(src.rho, o.q);
    j["tsallis"] = ts;
    j["renyi"] = re;
    text += "tsallis     " + fmt(ts) + "\nrenyi       " + fmt(re) + "\n";
  }
  text += "von_neumann " + fmt(vn) + "\n";
  std::vector<double> spec(src.rho.eigenvalues().begin(), src.rho.eigenvalues().end());
  j["spectrum"] = spec;
  text += "spectrum    " + fmt_list(spec) + "\n";
  emit(o, j, text);
  return kExitOk;
}

int cmd_map_entropy(const Options& o) {
  const EntropyParams params(o.q, o.s);
  Channel c1 = load_channel_input(o.in, o);
  const double m1 = map_entropy(c1.choi, params);
  json j{{"q", o.q}, {"s", o.s}, {"d", c1.choi.dim()}, {"map_entropy", m1}, {"choi_rank", c1.choi.rank()}};
  std::string text = "map_entropy " + fmt(m1) + "\nchoi_rank   " + std::to_string(c1.choi.rank()) + "\n";
  if (!o.in2.empty()) {
    Channel c2 = load_channel_input(o.in2, o);
    const double m2 = map_entropy(c2.choi, params);
    const double m12 = map_entropy(tensor_channels(c1.choi, c2.choi), params);
    const double residual = additivity_residual(c1.choi, c2.choi, params);
    auto cls = classify_additivity(c1.choi, c2.choi, params);
    j["map_entropy2"] = m2;
    j["map_entropy_product"] = m12;
    j["additivity_residual"] = residual;
    j["classification"] = to_string(cls.kind);
    j["gap"] = cls.gap;
    j["sign_consistent"] = cls.sign_consistent;
    text += "map_entropy2 " + fmt(m2) + "\nproduct     " + fmt(m12) + "\nresidual    " + fmt(residual) +
            "\nclass       " + to_string(cls.kind) + "\ngap         " + fmt(cls.gap) + "\n";
  }
  emit(o, j, text);
  return kExitOk;
}

int cmd_extremal(const Options& o) {
  const EntropyParams params(o.q, o.s);
  Channel ch = load_channel_input(o.in, o);
  DensityOperator rho =
      o.in2.empty() ? DensityOperator::maximally_mixed(ch.kraus.dim()) : load_state_input(o.in2, o, ch.kraus.dim());
  auto ex = extremal_unraveling(ch.kraus, rho);
  const double h_input = unraveling_entropy(ch.kraus, rho, params);
  const double h_ex = unified_entropy_spectrum(ex.lambdas, params);
  Report t2 = check_theorem2(ch.kraus, rho, params, assertion_tolerance());
  std::vector<double> lambdas(ex.lambdas.values().begin(), ex.lambdas.values().end());
  json j{{"q", o.q}, {"s", o.s}, {"lambdas", lambdas}, {"extremal_entropy", h_ex}, {"input_entropy", h_input},
         {"state_entropy", unified_entropy(rho, params)}, {"theorem2", t2}, {"kraus", io::kraus_to_json(ex.kraus)}};
  std::string text = "lambdas          " + fmt_list(lambdas) + "\nextremal_entropy " + fmt(h_ex) +
                     "\ninput_entropy    " + fmt(h_input) + "\nstate_entropy    " +
                     fmt(unified_entropy(rho, params)) + "\ntheorem2         " +
                     (t2.applicable ? (t2.pass ? "pass" : "fail") : "not applicable") + "\n";
  if (o.format == "json" || o.out.empty()) {
    emit(o, j, text);
  } else {
    io::save_channel(o.out, ex.kraus);
    std::cout << text;
  }
  return kExitOk;
}

int cmd_exchange(const Options& o) {
  const EntropyParams params(o.q, o.s);
  Channel ch = load_channel_input(o.in, o);
  DensityOperator rho =
      o.in2.empty() ? DensityOperator::maximally_mixed(ch.kraus.dim()) : load_state_input(o.in2, o, ch.kraus.dim());
  auto cmp = compare_exchange_routes(rho, ch.kraus, params);
  Report t4 = check_lindblad_extension(rho, ch.kraus, params, assertion_tolerance());
  json j{{"q", o.q}, {"s", o.s}, {"exchange", cmp.environment_value}, {"exchange_joint", cmp.joint_value},
         {"spectrum", cmp.environment_spectrum}, {"spectrum_residual", cmp.spectrum_residual},
         {"input_entropy", unified_entropy(rho, params)},
         {"output_entropy", unified_entropy(apply_channel(ch.kraus, rho), params)}, {"theorem4", t4}};
  std::string text = "exchange         " + fmt(cmp.environment_value) + "\nexchange_joint   " + fmt(cmp.joint_value) +
                     "\nspectrum         " + fmt_list(cmp.environment_spectrum) + "\nspectrum_residual " +
                     fmt(cmp.spectrum_residual) + "\ntriangle         " + to_string(t4.mode) + " " +
                     (t4.pass ? "pass" : "fail") + "\n";
  emit(o, j, text);
  return kExitOk;
}

int cmd_verify(const Options& o) {
  std::vector<std::string> suites;
  if (o.suite == "all")
    suites = verify::suite_names();
  else if (std::find(verify::suite_names().begin(), verify::suite_names().end(), o.suite) != verify::suite_names().end())
    suites = {o.suite};
  else
    throw CLI::ValidationError("suite", "unknown suite '" + o.suite + "'");

  verify::SuiteConfig cfg;
  if (!o.dims.empty()) cfg.dims.assign(o.dims.begin(), o.dims.end());
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.tolerance = assertion_tolerance();
  cfg.renyi_scan = o.renyi_scan;
  cfg.keep_details = !o.out.empty();

  json report = json::array();
  bool ok = true;
  for (const auto& name : suites) {
    auto r = verify::run_suite(name, cfg);
    ok = ok && r.pass();
    std::cout << (r.pass() ? "PASS " : "FAIL ") << name << " checks=" << r.checks << " violations=" << r.violations
              << " max_violation=" << fmt(r.max_violation) << " exploratory_violations=" << r.exploratory_violations
              << "\n";
    report.push_back(r);
  }
  if (!o.out.empty()) io::write_json_file(o.out, report);
  return ok ? kExitOk : kExitViolation;
}

int cmd_scan(const Options& o) {
  if (o.in2.empty()) throw CLI::ValidationError("--in2", "scan needs two channels");
  Channel c1 = load_channel_input(o.in, o);
  Channel c2 = load_channel_input(o.in2, o);
  if (c1.choi.dim() != c2.choi.dim()) throw DimensionError("scan: channels act on different dimensions");
  const Eigen::Index d = c1.choi.dim();
  const auto conv = o.dimension == "input" ? DimensionConvention::input_space : DimensionConvention::choi_space;
  const double dim = bound_dimension(d, conv);
  if (dim < 2.0) throw InvalidParameter("scan: bound dimension must be >= 2");
  const double tol = assertion_tolerance();
  const double t = choi_trace_distance(c1.choi, c2.choi);
  const double tau = choi_frobenius_distance(c1.choi, c2.choi);

  std::ostringstream csv;
  csv << "q,s,d,distance,norm_kind,bound_kind,bound_value,valid,observed_delta,sound\n";
  json rows = json::array();
  bool all_sound = true;
  for (const auto& p : verify::grid_params(verify::SuiteConfig{})) {
    if (!bound_region(p)) continue;
    const double delta = std::abs(map_entropy(c1.choi, p) - map_entropy(c2.choi, p));
    const std::pair<const char*, BoundResult> bounds[] = {
        {"trace", fannes_trace_bound(p, dim, t)},
        {"frobenius_small", fannes_frobenius_small_bound(p, dim, tau)},
        {"frobenius_global", fannes_frobenius_global_bound(p, dim, tau)}};
    for (const auto& [kind, b] : bounds) {
      const bool sound = !b.valid || delta <= b.bound_value + tol;
      all_sound = all_sound && sound;
      csv << fmt(p.q) << ',' << fmt(p.s) << ',' << d << ',' << fmt(b.distance_used) << ',' << to_string(b.norm_kind)
          << ',' << kind << ',' << fmt(b.bound_value) << ',' << (b.valid ? "true" : "false") << ',' << fmt(delta)
          << ',' << (sound ? "true" : "false") << '\n';
      rows.push_back({{"q", p.q}, {"s", p.s}, {"d", d}, {"distance", b.distance_used},
                      {"norm_kind", to_string(b.norm_kind)}, {"bound_kind", kind},
                      {"bound_value", std::isfinite(b.bound_value) ? json(b.bound_value) : json(nullptr)},
                      {"valid", b.valid}, {"observed_delta", delta}, {"sound", sound}});
    }
  }
  Options out = o;
  if (out.format != "json") out.format = "csv";
  emit(out, rows, csv.str());
  return all_sound || conv == DimensionConvention::input_space ? kExitOk : kExitViolation;
}

int cmd_gen(const Options& o) {
  const long d = o.dims.empty() ? 2 : o.dims.front();
  if (d < 1 || d > 64) throw InvalidParameter("--d out of range");
  KrausSet k = generate_channel(o.kind, d, o.p, o.gamma, o.lambda, o.rank, o.seed);
  ChoiMatrix c = kraus_to_choi(k);  // validates before writing
  const json j = o.choi ? io::choi_to_json(c, k.label()) : io::kraus_to_json(k);
  if (o.out.empty())
    std::cout << j.dump(2) << '\n';
  else
    io::write_json_file(o.out, j);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unified (q,s)-entropies of quantum states and channels"};
  app.require_subcommand(1);
  Options o;

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--q", o.q, "entropy order q > 0")->capture_default_str();
    sub->add_option("--s", o.s, "entropy parameter s")->capture_default_str();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", o.out, "output file");
  };
  auto add_d = [&](CLI::App* sub) { sub->add_option("--d", o.dims, "dimension"); };

  auto* entropy = app.add_subcommand("entropy", "entropies of a state or of a channel's Choi state");
  entropy->add_option("--in", o.in, "state or channel file, or generator spec")->required();
  add_params(entropy);
  add_format(entropy);
  add_d(entropy);

  auto* mapent = app.add_subcommand("map-entropy", "map entropy, and additivity for a pair of channels");
  mapent->add_option("--in", o.in, "channel")->required();
  mapent->add_option("--in2", o.in2, "second channel");
  add_params(mapent);
  add_format(mapent);
  add_d(mapent);

  auto* extremal = app.add_subcommand("extremal", "extremal unraveling of a channel at a state");
  extremal->add_option("--in", o.in, "channel")->required();
  extremal->add_option("--in2", o.in2, "input state (default maximally mixed)");
  add_params(extremal);
  add_format(extremal);
  add_d(extremal);

  auto* exchange = app.add_subcommand("exchange", "entropy exchange by both routes");
  exchange->add_option("--in", o.in, "channel")->required();
  exchange->add_option("--in2", o.in2, "input state (default maximally mixed)");
  add_params(exchange);
  add_format(exchange);
  add_d(exchange);

  auto* verify = app.add_subcommand("verify", "randomized verification suites");
  verify->add_option("suite", o.suite, "theorem1 | theorem2 | theorem4 | theorem5 | additivity | fannes | schatten | all")
      ->required();
  add_d(verify);
  verify->add_option("--trials", o.trials, "instances per dimension")->check(CLI::NonNegativeNumber)->capture_default_str();
  verify->add_option("--seed", o.seed, "base seed")->capture_default_str();
  verify->add_flag("--renyi-scan", o.renyi_scan, "also search the Renyi case q > 1 (exploratory)");
  verify->add_option("--out", o.out, "JSON report file");

  auto* scan = app.add_subcommand("scan", "continuity bounds over the default (q,s) grid");
  scan->add_option("--in", o.in, "first channel")->required();
  scan->add_option("--in2", o.in2, "second channel")->required();
  scan->add_option("--seed", o.seed, "seed for random generator specs");
  scan->add_option("--dimension", o.dimension, "bound dimension: choi (d^2) or input (d)")
      ->check(CLI::IsMember({"choi", "input"}));
  add_format(scan);
  add_d(scan);

  auto* gen = app.add_subcommand("gen", "write a channel file");
  gen->add_option("--kind", o.kind, "identity | unitary | depolarizing | pinching | amplitude_damping | phase_damping | random")
      ->capture_default_str();
  add_d(gen);
  gen->add_option("--p", o.p, "depolarizing strength");
  gen->add_option("--gamma", o.gamma, "amplitude damping rate");
  gen->add_option("--lambda", o.lambda, "phase damping rate");
  gen->add_option("--rank", o.rank, "Kraus rank of a random channel (default d^2)");
  gen->add_option("--seed", o.seed, "seed");
  gen->add_flag("--choi", o.choi, "write the Choi matrix instead of Kraus operators");
  gen->add_option("--out", o.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*entropy) return cmd_entropy(o);
    if (*mapent) return cmd_map_entropy(o);
    if (*extremal) return cmd_extremal(o);
    if (*exchange) return cmd_exchange(o);
    if (*verify) return cmd_verify(o);
    if (*scan) return cmd_scan(o);
    if (*gen) return cmd_gen(o);
  } catch (const CLI::Error& e) {
    std::cerr << "qse: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qse: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
