// Copyright 2026 The aunital Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "aunital/bounds.hpp"
#include "aunital/detect.hpp"
#include "aunital/errors.hpp"
#include "aunital/io.hpp"

namespace aunital::cli {

namespace {

std::string fixed6(double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << x;
  return s.str();
}

std::string join(const LabelList &labels) {
  std::string s;
  for (const auto &l : labels) {
    s += (s.empty() ? "" : ",") + l;
  }
  return s;
}

Json labels_json(const LabelList &labels) {
  Json arr = Json::array();
  for (const auto &l : labels) {
    arr.push_back(l);
  }
  return arr;
}

KrausChannel load_valid_channel(const std::string &path) {
  auto ch = load_channel(path);
  const auto v = validate(ch);
  if (!v.valid()) {
    std::ostringstream msg;
    msg << path << ": not a valid channel (trace-preservation deviation "
        << v.tp_deviation << ", Choi minimum eigenvalue "
        << v.choi_min_eigenvalue << ")";
    throw ValidationError(msg.str());
  }
  return ch;
}

void emit(Format format, std::ostream &out, const Json &j,
          const std::string &human) {
  if (format == Format::json) {
    out << dump_json(j);
  } else {
    out << human;
  }
}

Json report_json(const DetectionReport &r) {
  Json per = Json::array();
  for (const auto &p : r.per_probe) {
    per.push_back(Json{{"probe", p.probe}, {"deviation", p.deviation}});
  }
  return Json{{"verdict", r.verdict},
              {"max_deviation", r.max_deviation},
              {"per_probe", std::move(per)},
              {"tolerance_used", r.tolerance_used}};
}

// Commands ------------------------------------------------------------------

int cmd_validate(Format format, std::ostream &out, const std::string &path) {
  const auto v = validate(load_channel(path));
  const Json j{{"valid", v.valid()},
               {"trace_preserving", v.trace_preserving},
               {"completely_positive", v.completely_positive},
               {"tp_deviation", v.tp_deviation},
               {"choi_min_eigenvalue", v.choi_min_eigenvalue},
               {"tolerance", v.tolerance}};
  std::ostringstream h;
  h << (v.valid() ? "valid" : "invalid") << " channel\n"
    << "  trace preserving:    " << (v.trace_preserving ? "yes" : "no")
    << " (deviation " << std::scientific << std::setprecision(3)
    << v.tp_deviation << ")\n"
    << "  completely positive: " << (v.completely_positive ? "yes" : "no")
    << " (Choi minimum eigenvalue " << v.choi_min_eigenvalue << ")\n";
  emit(format, out, j, h.str());
  return v.valid() ? kExitTrue : kExitFalse;
}

int cmd_detect(Format format, std::ostream &out, const std::string &kind,
               const std::string &path, double tol, const LabelList &a_labels) {
  const auto ch = load_valid_channel(path);
  DetectionReport r;
  if (kind == "aunital") {
    r = is_a_unital(ch, tol, a_labels);
  } else if (kind == "bunital") {
    r = is_b_unital(ch, tol, a_labels);
  } else {
    r = is_unital(ch, tol);
  }
  std::ostringstream h;
  h << kind << ": " << (r.verdict ? "true" : "false") << "\n"
    << "  max deviation: " << std::scientific << std::setprecision(3)
    << r.max_deviation << " (tolerance " << r.tolerance_used << ")\n";
  for (const auto &p : r.per_probe) {
    h << "  probe " << p.probe << ": " << p.deviation << "\n";
  }
  emit(format, out, report_json(r), h.str());
  return r.verdict ? kExitTrue : kExitFalse;
}

int cmd_entropy(Format format, std::ostream &out, const std::string &path) {
  const double s = von_neumann_entropy(load_state(path));
  emit(format, out, Json{{"entropy", s}}, "S = " + fixed6(s) + " bits\n");
  return kExitTrue;
}

int cmd_cve(Format format, std::ostream &out, const std::string &path,
            LabelList a_labels) {
  const auto rho = load_state(path);
  if (a_labels.empty()) {
    a_labels = default_a_side(rho.layout());
  }
  const double c = conditional_entropy(rho, a_labels);
  emit(format, out, Json{{"a_labels", labels_json(a_labels)}, {"cve", c}},
       "CVE(" + join(a_labels) + "|" + join(rho.layout().complement(a_labels)) +
           ") = " + fixed6(c) + " bits\n");
  return kExitTrue;
}

int cmd_acvenn(Format format, std::ostream &out, const std::string &path,
               double tol, const LabelList &a_labels) {
  const auto rho = load_state(path);
  const bool member = is_acvenn(rho, tol, a_labels);
  const auto a = a_labels.empty() ? default_a_side(rho.layout()) : a_labels;
  const double s = von_neumann_entropy(rho);
  const double logd = std::log2(static_cast<double>(rho.layout().dim_of(a)));
  emit(format, out,
       Json{{"acvenn", member},
            {"entropy", s},
            {"log_d", logd},
            {"tolerance", tol}},
       std::string("ACVENN: ") + (member ? "true" : "false") + " (S = " +
           fixed6(s) + ", log d = " + fixed6(logd) + ")\n");
  return member ? kExitTrue : kExitFalse;
}

int cmd_witness(Format format, std::ostream &out, const std::string &path,
                std::size_t samples, unsigned long long seed,
                const std::string &state_out, const std::string &output_out) {
  const auto ch = load_valid_channel(path);
  const auto hit = find_cve_decrease(ch, samples, seed);
  if (!hit) {
    emit(format, out,
         Json{{"found", false}, {"samples", samples}, {"seed", seed}},
         "no CVE decrease found (sampling is not a proof; run `detect "
         "aunital` for a certified verdict)\n");
    return kExitFalse;
  }
  const auto ref = std::filesystem::path(path).filename().string();
  const auto w =
      build_resource_witness(ch, hit->state, hit->cve_in, hit->cve_out, ref);
  save_state(state_out, w.input_state);
  if (!output_out.empty()) {
    save_state(output_out, w.output_state);
  }
  Json j{{"found", true},
         {"channel_ref", w.channel_ref},
         {"decrease_cve_in", hit->cve_in},
         {"decrease_cve_out", hit->cve_out},
         {"sigma_parameter", w.sigma_parameter},
         {"sigma_cve", w.sigma_cve},
         {"input_cve", w.input_cve},
         {"output_cve", w.output_cve},
         {"input_state_file", state_out}};
  if (!output_out.empty()) {
    j["output_state_file"] = output_out;
  }
  std::ostringstream h;
  h << "witness for " << ref << "\n"
    << "  CVE decrease:  " << fixed6(hit->cve_in) << " -> "
    << fixed6(hit->cve_out) << "\n"
    << "  sigma:         isotropic p = " << fixed6(w.sigma_parameter)
    << ", CVE = " << fixed6(w.sigma_cve) << "\n"
    << "  input CVE:     " << fixed6(w.input_cve) << "\n"
    << "  output CVE:    " << fixed6(w.output_cve) << "\n"
    << "  input state:   " << state_out << "\n";
  if (!output_out.empty()) {
    h << "  output state:  " << output_out << "\n";
  }
  emit(format, out, j, h.str());
  return kExitTrue;
}

int cmd_gallery(Format format, std::ostream &out, const std::string &name,
                std::size_t dim, const std::string &file, bool list) {
  if (list || name.empty()) {
    Json arr = Json::array();
    std::string h;
    for (const auto &n : gallery_names()) {
      arr.push_back(n);
      h += n + "\n";
    }
    emit(format, out, Json{{"entries", std::move(arr)}}, h);
    return kExitTrue;
  }
  const auto entry = gallery_entry(name, dim);
  if (file.empty()) {
    out << dump_json(channel_to_json(entry.channel));
    return kExitTrue;
  }
  save_channel(file, entry.channel);
  Json expected;
  for (const auto &[k, v] : entry.expected) {
    expected[k] = v;
  }
  emit(format, out,
       Json{{"name", entry.name},
            {"dim", dim},
            {"file", file},
            {"expected", std::move(expected)},
            {"separable_by_construction", entry.separable_by_construction}},
       "wrote " + entry.name + " (d = " + std::to_string(dim) + ") to " +
           file + "\n");
  return kExitTrue;
}

int cmd_bounds(Format format, std::ostream &out, double x, std::size_t dim,
               const std::string &lower_out, const std::string &upper_out) {
  const auto r = cve_bounds(x, dim);
  if (!lower_out.empty()) {
    save_state(lower_out, r.lower_attainer);
  }
  if (!upper_out.empty()) {
    save_state(upper_out, r.upper_attainer);
  }
  const Json j{{"entropy_x", r.entropy_x},
               {"lower", r.lower},
               {"upper", r.upper},
               {"lower_attainer", state_to_json(r.lower_attainer)},
               {"upper_attainer", state_to_json(r.upper_attainer)}};
  std::ostringstream h;
  h << "S = " << fixed6(x) << ", d = " << dim << "\n"
    << "  lower: " << fixed6(r.lower) << " (attainer CVE "
    << fixed6(conditional_entropy(r.lower_attainer, {"A"})) << ")\n"
    << "  upper: " << fixed6(r.upper) << " (attainer CVE "
    << fixed6(conditional_entropy(r.upper_attainer, {"A"})) << ")\n";
  if (!lower_out.empty()) {
    h << "  lower attainer written to " << lower_out << "\n";
  }
  if (!upper_out.empty()) {
    h << "  upper attainer written to " << upper_out << "\n";
  }
  emit(format, out, j, h.str());
  return kExitTrue;
}

// Self-test checks ----------------------------------------------------------

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

using CheckFn = std::function<std::string()>; // empty string on success

CheckResult run_check(const std::string &name, const CheckFn &fn) {
  try {
    const auto problem = fn();
    return {name, problem.empty(), problem};
  } catch (const std::exception &e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

std::string check_aunital_monotone() {
  for (std::size_t d : {2u, 3u}) {
    const auto layout = SubsystemLayout::bipartite(d, d);
    const double logd = std::log2(static_cast<double>(d));
    std::vector<KrausChannel> channels;
    for (std::uint64_t s = 1; s <= 6; ++s) {
      channels.push_back(random_channel(layout, 1 + s % 3, 1000 * d + s));
      channels.push_back(tensor_channels(
          KrausChannel::identity(SubsystemLayout::single("A", d)),
          random_channel(SubsystemLayout::single("B", d), 2, 2000 * d + s)));
    }
    for (std::size_t k = 0; k < channels.size(); ++k) {
      const auto &ch = channels[k];
      const std::string where =
          "d = " + std::to_string(d) + ", channel " + std::to_string(k);
      if (is_a_unital(ch).verdict) {
        if (find_cve_decrease(ch, 100, k)) {
          return where + ": A-unital but CVE decreased";
        }
      } else {
        const auto dec = probe_cve_decrease(ch);
        if (!dec || dec->cve_out >= logd - kCveDecreaseMargin) {
          return where + ": not A-unital but no probe decrease";
        }
      }
    }
  }
  return "";
}

std::string check_swap_and_prepare() {
  for (std::size_t d : {2u, 3u}) {
    if (!is_a_unital(swap_and_prepare(d)).verdict) {
      return "Sp is not A-unital at d = " + std::to_string(d);
    }
    const auto out =
        apply(extend_with_identity(swap_and_prepare(d), d, d), chi_state(d));
    if ((out.matrix() - chi_prime_state(d).matrix()).norm() > 1e-9) {
      return "extended Sp does not map chi to chi' at d = " + std::to_string(d);
    }
  }
  const double n = negativity(chi_prime_state(2), {"B'", "B"});
  if (n <= 0.4) {
    return "negativity of chi' is " + std::to_string(n);
  }
  return "";
}

std::string check_acvenn() {
  const auto layout = SubsystemLayout::bipartite(2, 2);
  for (std::uint64_t s = 1; s <= 40; ++s) {
    const auto rho = random_state(layout, 1 + s % 4, 300 + s);
    const auto rotated = conjugate(rho, entropy_maximizing_unitary(rho));
    const double min_cve = conditional_entropy(rotated, {"A"});
    const double expected = von_neumann_entropy(rho) - 1.0;
    if (std::abs(min_cve - expected) > 1e-9) {
      return "rotated CVE differs from S - log d for sample " + std::to_string(s);
    }
    if (std::abs(expected) > 1e-6 && is_acvenn(rho) != (expected >= 0.0)) {
      return "is_acvenn disagrees with S >= log d for sample " +
             std::to_string(s);
    }
  }
  return "";
}

std::string check_unital_acvenn() {
  const auto layout = SubsystemLayout::bipartite(2, 2);
  const SubsystemLayout aux({"A'", "B'"}, {2, 2});
  for (std::uint64_t s = 1; s <= 5; ++s) {
    const auto u = random_mixed_unitary_channel(layout, 3, 400 + s);
    for (std::uint64_t k = 0; k < 10; ++k) {
      const auto rho = random_state(layout, 4, 500 + 10 * s + k);
      if (is_acvenn(rho) && !is_acvenn(apply(u, rho))) {
        return "unital channel " + std::to_string(s) + " left ACVENN";
      }
    }
    const auto m = random_channel(layout, 2, 600 + s);
    if (is_unital(m).verdict) {
      continue;
    }
    const auto gamma = random_state(aux, 1, 700 + s);
    const auto chi = reorder(product(gamma, DensityMatrix::maximally_mixed(layout)),
                             {"A'", "A", "B'", "B"});
    if (is_acvenn(apply(extend_with_identity(m, 2, 2), chi),
                  kDetectionTolerance)) {
      return "non-unital channel " + std::to_string(s) + " kept chi in ACVENN";
    }
  }
  return "";
}

std::string check_bounds() {
  for (std::size_t d : {2u, 3u}) {
    const auto layout = SubsystemLayout::bipartite(d, d);
    const double logd = std::log2(static_cast<double>(d));
    for (std::uint64_t s = 1; s <= 100; ++s) {
      const auto rho = random_state(layout, 1 + s % (d * d), 800 + s);
      const double x = von_neumann_entropy(rho);
      const double c = conditional_entropy(rho, {"A"});
      if (c < x - logd - 1e-8 || c > std::min(x, logd) + 1e-8) {
        return "sample " + std::to_string(s) + " violates the bounds";
      }
    }
    for (int k = 0; k <= 4; ++k) {
      const double x = 2.0 * logd * k / 4.0;
      const auto r = cve_bounds(x, d);
      if (std::abs(conditional_entropy(r.lower_attainer, {"A"}) - r.lower) >
              1e-6 ||
          std::abs(conditional_entropy(r.upper_attainer, {"A"}) - r.upper) >
              1e-6) {
        return "attainers miss the bounds at x = " + fixed6(x);
      }
    }
  }
  return "";
}

std::string check_relative_entropy() {
  const auto layout = SubsystemLayout::bipartite(2, 2);
  for (std::uint64_t s = 1; s <= 30; ++s) {
    const auto rho = random_state(layout, 1 + s % 4, 900 + s);
    const auto ref = DensityMatrix(
        tensor(identity(2) / 2.0, marginal(rho, {"B"}).matrix()), layout);
    if (std::abs(1.0 - relative_entropy(rho, ref) -
                 conditional_entropy(rho, {"A"})) > 1e-9) {
      return "CVE identity fails on sample " + std::to_string(s);
    }
    const auto sigma = random_state(layout, 4, 950 + s);
    const auto ch = random_channel(layout, 2, 990 + s);
    const auto full = random_state(layout, 4, 1000 + s);
    if (relative_entropy(apply(ch, full), apply(ch, sigma)) >
        relative_entropy(full, sigma) + 1e-9) {
      return "monotonicity fails on sample " + std::to_string(s);
    }
  }
  return "";
}

std::vector<GalleryEntry> default_gallery() {
  auto entries = gallery_entries(2);
  auto three = gallery_entries(3);
  entries.insert(entries.end(), std::make_move_iterator(three.begin()),
                 std::make_move_iterator(three.end()));
  return entries;
}

LabelList split_labels(const std::vector<std::string> &raw) {
  LabelList labels;
  for (const auto &s : raw) {
    if (!s.empty()) {
      labels.push_back(s);
    }
  }
  return labels;
}

} // namespace

int selftest(Format format, std::ostream &out, const Context &ctx) {
  std::vector<CheckResult> results;
  const auto entries =
      ctx.gallery_provider ? ctx.gallery_provider() : default_gallery();
  for (const auto &entry : entries) {
    const auto d = entry.channel.in_layout().dims().front();
    results.push_back(run_check(
        "gallery/" + entry.name + " d=" + std::to_string(d), [&entry] {
          std::string msg;
          for (const auto &p : verify_entry(entry)) {
            msg += (msg.empty() ? "" : "; ") + p;
          }
          return msg;
        }));
  }
  results.push_back(run_check("a-unital iff cve non-decreasing", check_aunital_monotone));
  results.push_back(run_check("swap-and-prepare", check_swap_and_prepare));
  results.push_back(run_check("acvenn iff S >= log d", check_acvenn));
  results.push_back(run_check("unital iff acvenn preserving", check_unital_acvenn));
  results.push_back(run_check("entropy bounds", check_bounds));
  results.push_back(run_check("relative entropy", check_relative_entropy));

  const auto passed = static_cast<std::size_t>(std::count_if(
      results.begin(), results.end(), [](const auto &r) { return r.passed; }));
  const bool all = passed == results.size();
  if (format == Format::json) {
    Json checks = Json::array();
    for (const auto &r : results) {
      checks.push_back(
          Json{{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    out << dump_json(Json{{"passed", all}, {"checks", std::move(checks)}});
  } else {
    for (const auto &r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.passed) {
        out << ": " << r.detail;
      }
      out << "\n";
    }
    out << passed << "/" << results.size() << " checks passed\n";
  }
  return all ? kExitTrue : kExitFalse;
}

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err, const Context &ctx) {
  CLI::App app{"Detect resource-generating quantum channels for conditional "
               "entropy.",
               "aunital"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name = "human";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"human", "json"}));

  std::string path;
  double tol = kDetectionTolerance;
  std::vector<std::string> a_raw;

  auto *validate_cmd = app.add_subcommand("validate", "Check that a channel is CPTP");
  validate_cmd->add_option("channel", path, "Channel JSON file")->required();

  std::string kind;
  auto *detect_cmd =
      app.add_subcommand("detect", "Run the A-unital, B-unital or unital detector");
  detect_cmd->add_option("kind", kind, "aunital | bunital | unital")
      ->required()
      ->check(CLI::IsMember({"aunital", "bunital", "unital"}));
  detect_cmd->add_option("channel", path, "Channel JSON file")->required();
  detect_cmd->add_option("--tol", tol, "Frobenius deviation tolerance")
      ->check(CLI::PositiveNumber);
  detect_cmd->add_option("--a-labels", a_raw, "Subsystems on the A side")
      ->delimiter(',');

  auto *entropy_cmd = app.add_subcommand("entropy", "Von Neumann entropy in bits");
  entropy_cmd->add_option("state", path, "State JSON file")->required();

  auto *cve_cmd = app.add_subcommand("cve", "Conditional entropy S(AB) - S(B)");
  cve_cmd->add_option("state", path, "State JSON file")->required();
  cve_cmd->add_option("--a-labels", a_raw, "Subsystems on the A side")
      ->delimiter(',');

  double acvenn_tol = kAcvennTolerance;
  auto *acvenn_cmd =
      app.add_subcommand("acvenn", "Check S(rho) >= log d for equal-dimension cuts");
  acvenn_cmd->add_option("state", path, "State JSON file")->required();
  acvenn_cmd->add_option("--tol", acvenn_tol, "Entropy tolerance in bits")
      ->check(CLI::PositiveNumber);
  acvenn_cmd->add_option("--a-labels", a_raw, "Subsystems on the A side")
      ->delimiter(',');

  std::size_t samples = 500;
  unsigned long long seed = kDefaultSeed;
  std::string state_out = "witness.json";
  std::string output_out;
  auto *witness_cmd = app.add_subcommand(
      "witness", "Find a CVE decrease and build a resource witness state");
  witness_cmd->add_option("channel", path, "Channel JSON file")->required();
  witness_cmd->add_option("--samples", samples, "Random states to try");
  witness_cmd->add_option("--seed", seed, "Sampling seed");
  witness_cmd->add_option("-o,--output", state_out, "Witness input state file");
  witness_cmd->add_option("--output-state", output_out,
                          "Also write the channel's output on the witness");

  std::string name;
  std::size_t dim = 2;
  std::string file;
  bool list = false;
  auto *gallery_cmd = app.add_subcommand("gallery", "Export a named channel");
  gallery_cmd->add_option("name", name, "Entry name");
  gallery_cmd->add_option("--dim", dim, "Local dimension d");
  gallery_cmd->add_option("-o,--output", file, "Channel JSON file");
  gallery_cmd->add_flag("--list", list, "List entry names");

  double x = 0.0;
  std::string lower_out;
  std::string upper_out;
  auto *bounds_cmd =
      app.add_subcommand("bounds", "Tight CVE bounds at fixed entropy");
  bounds_cmd->add_option("--entropy", x, "Entropy S(rho) in bits")->required();
  bounds_cmd->add_option("--dim", dim, "Local dimension d");
  bounds_cmd->add_option("--lower-out", lower_out, "Write the lower attainer");
  bounds_cmd->add_option("--upper-out", upper_out, "Write the upper attainer");

  auto *selftest_cmd =
      app.add_subcommand("selftest", "Gallery expectations and sampled properties");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitTrue;
    }
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  const Format format = format_name == "json" ? Format::json : Format::human;
  const auto a_labels = split_labels(a_raw);
  try {
    if (*validate_cmd) {
      return cmd_validate(format, out, path);
    }
    if (*detect_cmd) {
      return cmd_detect(format, out, kind, path, tol, a_labels);
    }
    if (*entropy_cmd) {
      return cmd_entropy(format, out, path);
    }
    if (*cve_cmd) {
      return cmd_cve(format, out, path, a_labels);
    }
    if (*acvenn_cmd) {
      return cmd_acvenn(format, out, path, acvenn_tol, a_labels);
    }
    if (*witness_cmd) {
      return cmd_witness(format, out, path, samples, seed, state_out,
                         output_out);
    }
    if (*gallery_cmd) {
      return cmd_gallery(format, out, name, dim, file, list);
    }
    if (*bounds_cmd) {
      return cmd_bounds(format, out, x, dim, lower_out, upper_out);
    }
    if (*selftest_cmd) {
      return selftest(format, out, ctx);
    }
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

} // namespace aunital::cli
