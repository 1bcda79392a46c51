#pragma once

// Batch front end. Reads a versioned instance file, runs one operation and
// writes a JSON verdict with sorted keys and canonical rationals.
//
// Exit codes: 0 computed, 1 unstable/violated with --fail-on-unstable,
// 2 malformed input or usage.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gitss/classical.hpp"
#include "gitss/dispo.hpp"
#include "gitss/error.hpp"
#include "gitss/hilbert_mumford.hpp"
#include "gitss/io.hpp"
#include "gitss/repdata.hpp"

namespace gitss::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnstable = 1;
inline constexpr int kExitMalformed = 2;
inline constexpr int kSchemaVersion = 1;

struct Options {
  std::string input;
  std::string lambda_path;
  bool fail_on_unstable = false;
  bool strict = false;
  bool pretty = false;
  bool summary = false;
  std::vector<std::string> types;
  int order = 0;
};

namespace detail {

inline json read_json(std::istream& in, const std::string& what) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  require(!j.is_discarded(), ErrorCode::ParseError, what + " is not valid JSON");
  return j;
}

inline json read_json_file(const std::string& path, std::istream& fallback, const std::string& what) {
  if (path.empty() || path == "-") return read_json(fallback, what);
  std::ifstream f(path);
  require(f.good(), ErrorCode::ParseError, "cannot open " + path);
  return read_json(f, what);
}

/// Checks the envelope and returns the payload.
inline const json& payload_of(const json& instance, std::initializer_list<const char*> kinds, std::string& kind) {
  const auto& version = io::field(instance, "schema_version");
  require(version.is_number_integer() && version.get<int>() == kSchemaVersion, ErrorCode::ParseError,
          "schema_version must be " + std::to_string(kSchemaVersion));
  const auto& k = io::field(instance, "kind");
  require(k.is_string(), ErrorCode::ParseError, "kind must be a string");
  kind = k.get<std::string>();
  bool accepted = std::any_of(kinds.begin(), kinds.end(), [&](const char* x) { return kind == x; });
  std::string expected;
  for (const char* x : kinds) expected += std::string(expected.empty() ? "" : ", ") + x;
  require(accepted, ErrorCode::ParseError, "kind '" + kind + "' not accepted here (expected " + expected + ")");
  const auto& payload = io::field(instance, "payload");
  require(payload.is_object(), ErrorCode::ParseError, "payload must be an object");
  return payload;
}

inline std::string verdict_word(bool satisfied, bool strict) {
  if (strict) return satisfied ? "stable" : "not stable";
  return satisfied ? "semistable" : "unstable";
}

inline json verdict_json(const Verdict& v, bool strict) {
  json out = {{"verdict", verdict_word(v.satisfied, strict)}};
  out["witness"] = v.witness ? json(*v.witness) : json(nullptr);
  return out;
}

inline std::vector<DispoInstance> dispo_instances(const json& payload) {
  std::vector<DispoInstance> model;
  if (payload.contains("instances")) {
    for (const auto& inst : io::array_of(payload["instances"]))
      model.push_back({io::filtration_from_json(io::field(inst, "filtration")),
                       io::profile_from_json(io::field(inst, "profile"))});
  } else {
    model.push_back({io::filtration_from_json(io::field(payload, "filtration")),
                     io::profile_from_json(io::field(payload, "profile"))});
  }
  return model;
}

struct Outcome {
  json result;
  bool unstable = false;
  std::string summary;
};

inline Outcome run_mu(const Options& opt, std::istream& in) {
  std::string kind;
  json instance = read_json_file(opt.input, in, "input");
  const json& payload = payload_of(instance, {"torus_rep", "dispo"}, kind);
  if (kind == "dispo") {
    auto model = dispo_instances(payload);
    require(model.size() == 1, ErrorCode::ParseError, "mu takes a single filtration");
    Rational m = mu_profile(model[0].filtration, model[0].profile);
    return {{{"mu", to_string(m)}}, false, "mu = " + to_string(m)};
  }
  auto rep = io::rep_from_json(io::field(payload, "rep"));
  auto point = io::point_from_json(io::field(payload, "point"));
  json lambda_json;
  if (!opt.lambda_path.empty()) {
    std::ifstream f(opt.lambda_path);
    require(f.good(), ErrorCode::ParseError, "cannot open " + opt.lambda_path);
    lambda_json = io::field(read_json(f, "lambda file"), "lambda");
  } else {
    lambda_json = io::field(payload, "lambda");
  }
  auto m = mu(rep, io::subgroup_from_json(lambda_json), point);
  return {{{"mu", std::to_string(m)}}, false, "mu = " + std::to_string(m)};
}

inline Outcome run_destabilize(const Options& opt, std::istream& in) {
  std::string kind;
  json instance = read_json_file(opt.input, in, "input");
  const json& payload = payload_of(instance, {"torus_rep"}, kind);
  auto rep = io::rep_from_json(io::field(payload, "rep"));
  auto point = io::point_from_json(io::field(payload, "point"));
  auto verdict = torus_destabilize(rep, point);
  if (verdict.unstable()) {
    std::ostringstream s;
    s << "unstable, lambda = [";
    for (std::size_t a = 0; a < verdict.destabilizer->rank(); ++a) s << (a ? ", " : "") << (*verdict.destabilizer)[a];
    s << "]";
    return {{{"verdict", "unstable"}, {"lambda", io::subgroup_to_json(*verdict.destabilizer)}}, true, s.str()};
  }
  return {{{"verdict", "semistable"}, {"certificate", io::certificate_to_json(*verdict.certificate)}},
          false, "semistable (0 lies in the weight hull)"};
}

inline Outcome run_dispo_check(const Options& opt, std::istream& in) {
  std::string kind;
  json instance = read_json_file(opt.input, in, "input");
  const json& payload = payload_of(instance, {"dispo"}, kind);
  auto model = dispo_instances(payload);
  Outcome out;
  auto asym = asymptotic_semistable(model, opt.strict);
  out.result["asymptotic"] = verdict_json(asym, opt.strict);
  out.unstable = !asym.satisfied;
  out.summary = "asymptotic: " + verdict_word(asym.satisfied, opt.strict);
  if (payload.contains("delta")) {
    UniPoly delta = io::poly_from_json(payload["delta"]);
    auto v = delta_semistable(model, delta, opt.strict);
    out.result["delta"] = verdict_json(v, opt.strict);
    out.result["slopy_implication"] = slopy_implication_check(model, delta);
    out.unstable = out.unstable || !v.satisfied;
    out.summary += ", delta: " + verdict_word(v.satisfied, opt.strict);
  }
  if (payload.contains("delta_bar")) {
    Rational delta_bar = io::rational_from_json(payload["delta_bar"]);
    auto v = slope_semistable(model, delta_bar, opt.strict);
    out.result["slope"] = verdict_json(v, opt.strict);
    out.unstable = out.unstable || !v.satisfied;
    out.summary += ", slope: " + verdict_word(v.satisfied, opt.strict);
  }
  json mus = json::array();
  for (const auto& [f, prof] : model) mus.push_back(to_string(mu_profile(f, prof)));
  out.result["mu"] = mus;
  return out;
}

inline Outcome run_deform(const Options& opt, std::istream& in) {
  std::string kind;
  json instance = read_json_file(opt.input, in, "input");
  const json& payload = payload_of(instance, {"dispo"}, kind);
  auto model = dispo_instances(payload);
  require(model.size() == 1, ErrorCode::ParseError, "deform takes a single filtration");
  const auto& [f, prof] = model[0];
  auto deformed = admissible_deformation(f, prof);
  Rational m = mu_profile(f, deformed);
  return {{{"profile", io::profile_to_json(deformed)}, {"mu", to_string(m)}, {"M", io::poly_to_json(functional_M(f))}},
          false,
          "deformed profile has " + std::to_string(deformed.tuples().size()) + " tuples, mu = " + to_string(m)};
}

inline json form_verdict_json(const FormVerdict& v, bool strict) {
  json out = {{"verdict", verdict_word(v.satisfied, strict)}};
  out["witness"] = v.witness ? io::subsheaf_flag_to_json(*v.witness) : json(nullptr);
  out["witness_mu"] = v.witness_mu ? json(to_string(*v.witness_mu)) : json(nullptr);
  return out;
}

inline Outcome run_form_check(const Options& opt, std::istream& in) {
  std::string kind;
  json instance = read_json_file(opt.input, in, "input");
  const json& payload = payload_of(instance, {"form_bundle"}, kind);
  auto fb = io::form_bundle_from_json(io::field(payload, "bundle"));
  FlagSource source = ExhaustiveCoordinate{};
  if (payload.contains("flags")) {
    SuppliedFlags supplied;
    for (const auto& f : io::array_of(payload["flags"])) supplied.flags.push_back(io::subsheaf_flag_from_json(f, fb.model));
    source = std::move(supplied);
  }
  auto kernel = kernel_destabilizer(fb);
  auto ss = semistable_form(fb, source, opt.strict);
  auto ram = ramanathan_semistable(fb, source, opt.strict);
  Outcome out;
  out.result["kernel"] = kernel ? io::subsheaf_flag_to_json(*kernel) : json(nullptr);
  out.result["semistable"] = form_verdict_json(ss, opt.strict);
  out.result["ramanathan"] = form_verdict_json(ram, opt.strict);
  out.unstable = !ss.satisfied;
  out.summary = "form: " + verdict_word(ss.satisfied, opt.strict) + ", Ramanathan: " + verdict_word(ram.satisfied, opt.strict);
  return out;
}

inline Outcome run_dualize(const Options& opt, std::istream& in) {
  std::string kind;
  json instance = read_json_file(opt.input, in, "input");
  const json& payload = payload_of(instance, {"flags"}, kind);
  auto model = io::model_from_json(io::field(payload, "degrees"));
  auto flag = io::subsheaf_flag_from_json(io::field(payload, "flag"), model);
  auto dual = dualize_filtration(model, flag);
  return {{{"degrees", dual_model(model).degrees}, {"flag", io::subsheaf_flag_to_json(dual)}},
          false,
          "dual flag with " + std::to_string(dual.steps.size()) + " steps"};
}

inline Outcome run_bounds(const Options& opt, std::istream& in) {
  std::vector<std::string> names = opt.types;
  if (names.empty()) {
    std::string kind;
    json instance = read_json_file(opt.input, in, "input");
    const json& payload = payload_of(instance, {"bounds_query"}, kind);
    for (const auto& t : io::array_of(io::field(payload, "types"))) {
      require(t.is_string(), ErrorCode::ParseError, "types must be strings");
      names.push_back(t.get<std::string>());
    }
  }
  require(!names.empty(), ErrorCode::ParseError, "no Dynkin types given");
  std::set<DynkinType> types;
  std::int64_t bound = 0;
  for (const auto& n : names) {
    auto t = parse_dynkin(n);
    types.insert(t);
    bound = std::max(bound, adjoint_low_height_bound(t));
  }
  auto clause = heinloth_curve_condition(types);
  return {{{"bound", bound}, {"clause", to_string(clause)}}, false,
          "Char(k) > " + std::to_string(bound) + "; curve case: " + to_string(clause)};
}

inline Outcome run_compositions(const Options& opt) {
  auto comps = weighted_compositions(opt.order);
  return {{{"compositions", comps}}, false, std::to_string(comps.size()) + " compositions"};
}

}  // namespace detail

/// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
  CLI::App app{"Exact GIT semistability computations"};
  app.require_subcommand(1);
  Options opt;
  auto add_common = [&](CLI::App* sub, bool verdicts) {
    sub->add_option("--input,-i", opt.input, "Instance file (default: standard input)");
    sub->add_flag("--pretty", opt.pretty, "Indent the JSON output");
    sub->add_flag("--summary", opt.summary, "Print a one-line summary to standard error");
    if (verdicts) {
      sub->add_flag("--fail-on-unstable", opt.fail_on_unstable, "Exit with status 1 on an unstable verdict");
      sub->add_flag("--strict", opt.strict, "Test stability instead of semistability");
    }
  };
  auto* mu_cmd = app.add_subcommand("mu", "Hilbert-Mumford weight of a point or of a filtration");
  add_common(mu_cmd, false);
  mu_cmd->add_option("--lambda", opt.lambda_path, "JSON file whose \"lambda\" field overrides the payload");
  auto* destab = app.add_subcommand("destabilize", "Torus-level instability with certificate");
  add_common(destab, true);
  auto* dispo = app.add_subcommand("dispo-check", "delta-, slope- and asymptotic semistability of a dispo sheaf");
  add_common(dispo, true);
  auto* deform = app.add_subcommand("deform", "Admissible deformation of a nonvanishing profile");
  add_common(deform, false);
  auto* form = app.add_subcommand("form-check", "Semistability of a bilinear-form bundle");
  add_common(form, true);
  auto* dualize = app.add_subcommand("dualize", "Dual filtration of a coordinate flag");
  add_common(dualize, false);
  auto* bounds = app.add_subcommand("bounds", "Characteristic bounds for Dynkin types");
  add_common(bounds, false);
  bounds->add_option("types", opt.types, "Dynkin types such as A5, D4, E8");
  auto* comps = app.add_subcommand("enumerate-compositions", "Tuples (d_1..d_s) with sum i*d_i = s!");
  add_common(comps, false);
  comps->add_option("s", opt.order, "Order s (1..4)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    detail::Outcome outcome;
    if (*mu_cmd) outcome = detail::run_mu(opt, in);
    else if (*destab) outcome = detail::run_destabilize(opt, in);
    else if (*dispo) outcome = detail::run_dispo_check(opt, in);
    else if (*deform) outcome = detail::run_deform(opt, in);
    else if (*form) outcome = detail::run_form_check(opt, in);
    else if (*dualize) outcome = detail::run_dualize(opt, in);
    else if (*bounds) outcome = detail::run_bounds(opt, in);
    else outcome = detail::run_compositions(opt);

    out << (opt.pretty ? outcome.result.dump(2) : outcome.result.dump()) << '\n';
    if (opt.summary) {
      const bool color = std::getenv("NO_COLOR") == nullptr;
      const char* on = outcome.unstable ? "\033[31m" : "\033[32m";
      err << (color ? on : "") << outcome.summary << (color ? "\033[0m" : "") << '\n';
    }
    return opt.fail_on_unstable && outcome.unstable ? kExitUnstable : kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitMalformed;
}

}  // namespace gitss::cli
