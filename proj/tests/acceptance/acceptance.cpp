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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Every check re-derives its verdict from library primitives rather
// than trusting a single code path.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "aunital/bounds.hpp"
#include "aunital/detect.hpp"
#include "aunital/gallery.hpp"
#include "aunital/io.hpp"
#include "aunital/random.hpp"
#include "cli.hpp"

using namespace aunital;
namespace fs = std::filesystem;

namespace {

// Collects the first few failures of a criterion.
class Verdict {
public:
  void fail(const std::string &msg) {
    ++failures_;
    if (notes_.size() < 3) {
      notes_.push_back(msg);
    }
  }
  void expect(bool ok, const std::string &msg) {
    if (!ok) {
      fail(msg);
    }
  }
  void note(const std::string &msg) { info_.push_back(msg); }
  bool passed() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    if (failures_ > 0) {
      s << failures_ << " failure(s)";
      for (const auto &n : notes_) {
        s << "; " << n;
      }
    }
    for (const auto &i : info_) {
      s << (s.tellp() > 0 ? "; " : "") << i;
    }
    return s.str();
  }

private:
  int failures_ = 0;
  std::vector<std::string> notes_;
  std::vector<std::string> info_;
};

std::string num(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

double log2d(std::size_t d) { return std::log2(static_cast<double>(d)); }

int cli_run(const std::vector<std::string> &args, std::string *out_text = nullptr) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  if (out_text) {
    *out_text = out.str();
  }
  return code;
}

// 1 ---------------------------------------------------------------------------
Verdict aunital_iff_monotone() {
  Verdict v;
  int positives = 0;
  int negatives = 0;
  for (std::size_t d : {2u, 3u}) {
    const auto layout = SubsystemLayout::bipartite(d, d);
    std::vector<KrausChannel> channels;
    for (std::uint64_t s = 0; s < 50; ++s) {
      channels.push_back(random_channel(layout, 1 + s % 4, 10000 * d + s));
    }
    // A-unital by construction, so the positive branch is exercised too.
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto phi = random_channel(SubsystemLayout::single("B", d), 1 + s % 3,
                                      20000 * d + s);
      const auto id_phi = tensor_channels(
          KrausChannel::identity(SubsystemLayout::single("A", d)), phi);
      channels.push_back(
          convex_mix({id_phi, swap_and_prepare(d)}, {0.1 * (s + 1) * 0.9, 1.0 - 0.1 * (s + 1) * 0.9}));
    }
    for (std::size_t k = 0; k < channels.size(); ++k) {
      const auto &ch = channels[k];
      const std::string where = "d=" + std::to_string(d) + " #" + std::to_string(k);
      if (is_a_unital(ch).verdict) {
        ++positives;
        const auto hit = find_cve_decrease(ch, 500, 30000 * d + k);
        v.expect(!hit, where + ": A-unital yet CVE decreased " +
                           (hit ? num(hit->cve_in) + " -> " + num(hit->cve_out)
                                : std::string()));
      } else {
        ++negatives;
        const auto dec = probe_cve_decrease(ch);
        v.expect(dec && std::abs(dec->cve_in - log2d(d)) < 1e-9 &&
                     dec->cve_out < log2d(d) - 1e-8,
                 where + ": not A-unital and no probe decrease");
      }
    }
  }
  v.note(std::to_string(positives) + " A-unital, " + std::to_string(negatives) +
         " not");
  return v;
}

// 2 ---------------------------------------------------------------------------
Verdict swap_and_prepare_properties() {
  Verdict v;
  for (std::size_t d : {2u, 3u, 4u}) {
    const auto sp = swap_and_prepare(d);
    const auto r = is_a_unital(sp);
    v.expect(r.verdict && r.max_deviation < 1e-10,
             "Sp d=" + std::to_string(d) + " max deviation " +
                 num(r.max_deviation));
    const auto out = apply(extend_with_identity(sp, d, d), chi_state(d));
    // Closed form assembled here from its factors in [A', B, A, B'] order.
    const auto phi = maximally_entangled_vector(d);
    const SubsystemLayout raw_layout({"A'", "B", "A", "B'"}, {d, d, d, d});
    ComplexMatrix p0 = ComplexMatrix::Zero(static_cast<Eigen::Index>(d),
                                           static_cast<Eigen::Index>(d));
    p0(0, 0) = 1.0;
    const ComplexMatrix raw =
        tensor(tensor(phi * phi.adjoint(), identity(d) / static_cast<double>(d)),
               p0);
    const ComplexMatrix closed =
        permute_subsystems(raw, raw_layout, {"A'", "A", "B'", "B"});
    const double dist = (out.matrix() - closed).norm();
    v.expect(dist <= 1e-9, "chi' mismatch d=" + std::to_string(d) + ": " + num(dist));
  }
  const double n = negativity(chi_prime_state(2), {"B'", "B"});
  v.expect(n > 0.4, "negativity(chi') = " + num(n));
  v.note("negativity(chi') = " + num(n));
  return v;
}

// 3 ---------------------------------------------------------------------------
Verdict region_witnesses() {
  Verdict v;
  for (std::size_t d : {2u, 3u}) {
    const auto a = SubsystemLayout::single("A", d);
    const auto b = SubsystemLayout::single("B", d);
    const std::string tag = " d=" + std::to_string(d);
    v.expect(!is_a_unital(r0_channel(d)).verdict, "R0 passed" + tag);
    v.expect(is_a_unital(tensor_channels(KrausChannel::identity(a),
                                         classical_quantum_channel(d, "B")))
                 .verdict,
             "id x Phi failed" + tag);
    v.expect(!is_a_unital(tensor_channels(classical_quantum_channel(d, "A"),
                                          KrausChannel::identity(b)))
                  .verdict,
             "M x id passed" + tag);
    v.expect(is_a_unital(gallery_entry("separable_family", d).channel).verdict,
             "separable family failed" + tag);
    v.expect(is_a_unital(swap_and_prepare(d)).verdict, "Sp failed" + tag);
    // Placement metadata.
    v.expect(gallery_entry("r0", d).separable_by_construction &&
                 gallery_entry("id_cq", d).separable_by_construction &&
                 gallery_entry("cq_id", d).separable_by_construction &&
                 gallery_entry("separable_family", d).separable_by_construction &&
                 !gallery_entry("sp", d).separable_by_construction,
             "separability metadata" + tag);
  }
  return v;
}

// 4 ---------------------------------------------------------------------------
Verdict acvenn_suite() {
  Verdict v;
  const auto layout = SubsystemLayout::bipartite(2, 2);
  Rng rng(4242);
  std::vector<ComplexMatrix> unitaries;
  for (int k = 0; k < 200; ++k) {
    unitaries.push_back(haar_unitary(4, rng));
  }
  int compared = 0;
  int banded = 0;
  double worst_marginal = 0.0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const auto rho = random_state(layout, 1 + s % 4, 40000 + s);
    const double entropy = von_neumann_entropy(rho);
    const auto ue = entropy_maximizing_unitary(rho);
    const double dev =
        (marginal(conjugate(rho, ue), {"B"}).matrix() - identity(2) / 2.0)
            .cwiseAbs()
            .maxCoeff();
    worst_marginal = std::max(worst_marginal, dev);
    v.expect(dev <= 1e-9, "U_e marginal deviation " + num(dev));
    if (std::abs(entropy - 1.0) < 0.02) {
      ++banded;
      continue;
    }
    ++compared;
    double min_cve = conditional_entropy(rho, {"A"});
    for (const auto &u : unitaries) {
      min_cve = std::min(min_cve, conditional_entropy(conjugate(rho, u), {"A"}));
    }
    const bool direct = min_cve >= -1e-6;
    v.expect(direct == is_acvenn(rho),
             "state " + std::to_string(s) + ": S = " + num(entropy) +
                 ", min CVE over unitaries " + num(min_cve));
  }
  v.note(std::to_string(compared) + " compared, " + std::to_string(banded) +
         " in the boundary band, worst U_e marginal deviation " +
         num(worst_marginal));
  return v;
}

// 5 ---------------------------------------------------------------------------
Verdict unital_acvenn_suite() {
  Verdict v;
  const auto layout = SubsystemLayout::bipartite(2, 2);
  const SubsystemLayout aux({"A'", "B'"}, {2, 2});
  std::vector<DensityMatrix> members;
  for (std::uint64_t s = 0; members.size() < 100; ++s) {
    auto rho = random_state(layout, 3 + s % 2, 50000 + s);
    if (is_acvenn(rho)) {
      members.push_back(std::move(rho));
    }
  }
  for (std::uint64_t c = 0; c < 30; ++c) {
    const auto u = random_mixed_unitary_channel(layout, 2 + c % 4, 60000 + c);
    v.expect(is_unital(u, 1e-8).verdict, "mixed-unitary channel not unital");
    for (std::size_t k = 0; k < members.size(); ++k) {
      v.expect(is_acvenn(apply(u, members[k]), 1e-8),
               "unital channel " + std::to_string(c) + " moved member " +
                   std::to_string(k) + " out of ACVENN");
    }
  }
  int exited = 0;
  for (std::uint64_t c = 0; c < 30; ++c) {
    const auto m = random_channel(layout, 1 + c % 3, 70000 + c);
    if (c % 3 == 0) {
      // env_dim 1 is a unitary channel; make it non-unital with a replacement.
      continue;
    }
    v.expect(!is_unital(m, 1e-8).verdict, "sampled channel unexpectedly unital");
    const auto gamma = random_state(aux, 1, 80000 + c);
    const auto chi = reorder(product(gamma, DensityMatrix::maximally_mixed(layout)),
                             {"A'", "A", "B'", "B"});
    v.expect(is_acvenn(chi, 1e-8), "gamma x I/d^2 not in ACVENN");
    const bool stays = is_acvenn(apply(extend_with_identity(m, 2, 2), chi), 1e-8);
    v.expect(!stays, "non-unital channel " + std::to_string(c) + " kept chi");
    exited += stays ? 0 : 1;
  }
  // Top up the non-unital set to 30 with amplitude-damping-like mixtures.
  for (std::uint64_t c = 0; c < 10; ++c) {
    const auto m = convex_mix(
        {random_mixed_unitary_channel(layout, 2, 90000 + c), r0_channel(2)},
        {0.7, 0.3});
    v.expect(!is_unital(m, 1e-8).verdict, "mixture unexpectedly unital");
    const auto gamma = random_state(aux, 1, 95000 + c);
    const auto chi = reorder(product(gamma, DensityMatrix::maximally_mixed(layout)),
                             {"A'", "A", "B'", "B"});
    const bool stays = is_acvenn(apply(extend_with_identity(m, 2, 2), chi), 1e-8);
    v.expect(!stays, "non-unital mixture " + std::to_string(c) + " kept chi");
    exited += stays ? 0 : 1;
  }
  v.note(std::to_string(exited) + "/30 non-unital channels exit ACVENN");
  return v;
}

// 6 ---------------------------------------------------------------------------
Verdict bounds_suite() {
  Verdict v;
  for (std::size_t d : {2u, 3u}) {
    const auto layout = SubsystemLayout::bipartite(d, d);
    const double ld = log2d(d);
    for (std::uint64_t s = 0; s < 2000; ++s) {
      const auto rho = random_state(layout, 1 + s % (d * d), 100000 * d + s);
      const double x = von_neumann_entropy(rho);
      const double c = conditional_entropy(rho, {"A"});
      v.expect(x - ld - 1e-8 <= c && c <= std::min(x, ld) + 1e-8,
               "d=" + std::to_string(d) + " sample " + std::to_string(s) +
                   ": S = " + num(x) + ", CVE = " + num(c));
    }
    for (int k = 0; k < 50; ++k) {
      const double x = 2.0 * ld * k / 49.0;
      const auto r = cve_bounds(x, d);
      for (const auto *att : {&r.lower_attainer, &r.upper_attainer}) {
        const double bound = att == &r.lower_attainer ? r.lower : r.upper;
        v.expect(std::abs(von_neumann_entropy(*att) - x) <= 1e-6 &&
                     std::abs(conditional_entropy(*att, {"A"}) - bound) <= 1e-6,
                 "attainer misses bound at d=" + std::to_string(d) +
                     ", x = " + num(x));
      }
    }
  }
  return v;
}

// 7 ---------------------------------------------------------------------------
Verdict relative_entropy_suite() {
  Verdict v;
  const auto layout = SubsystemLayout::bipartite(2, 2);
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto rho = random_state(layout, 1 + s % 4, 200000 + s);
    const DensityMatrix ref(
        tensor(identity(2) / 2.0, marginal(rho, {"B"}).matrix()), layout);
    const double gap = std::abs(1.0 - relative_entropy(rho, ref) -
                                conditional_entropy(rho, {"A"}));
    worst = std::max(worst, gap);
    v.expect(gap <= 1e-9, "identity gap " + num(gap));
  }
  int triples = 0;
  for (std::uint64_t s = 0; triples < 100; ++s) {
    const auto ch = random_channel(layout, 1 + s % 4, 300000 + s);
    const auto rho = random_state(layout, 1 + s % 4, 310000 + s);
    const auto sigma = random_state(layout, 4, 320000 + s);
    const double before = relative_entropy(rho, sigma);
    const double after = relative_entropy(apply(ch, rho), apply(ch, sigma));
    if (!std::isfinite(before) || !std::isfinite(after)) {
      continue;
    }
    ++triples;
    v.expect(after <= before + 1e-9,
             "monotonicity: " + num(after) + " > " + num(before));
  }
  v.note("worst identity gap " + num(worst));
  return v;
}

// 8 ---------------------------------------------------------------------------
Verdict witness_pipeline(const fs::path &dir) {
  Verdict v;
  const auto channel_file = (dir / "r0_d2.json").string();
  const auto witness_file = (dir / "witness.json").string();
  v.expect(cli_run({"gallery", "r0", "--dim", "2", "-o", channel_file}) == 0,
           "gallery export failed");
  const int code = cli_run({"witness", channel_file, "-o", witness_file});
  v.expect(code == 0, "witness exit code " + std::to_string(code));
  if (code != 0) {
    return v;
  }
  // Independent re-evaluation: reload both files, push the state through the
  // Choi matrix of the extended channel rather than its Kraus operators.
  const auto state = load_state(witness_file);
  const auto channel = load_channel(channel_file);
  const auto choi = to_choi(extend_with_identity(channel, 2, 2));
  const auto out = choi_apply(choi, state);
  const double in_cve = conditional_entropy(state, {"A'", "A"});
  const double out_cve = conditional_entropy(out, {"A'", "A"});
  v.expect(in_cve >= 0.49, "input CVE " + num(in_cve));
  v.expect(out_cve <= -0.49, "output CVE " + num(out_cve));
  v.note("input CVE " + num(in_cve) + ", output CVE " + num(out_cve));
  return v;
}

// 9 ---------------------------------------------------------------------------
std::vector<std::string> key_paths(const Json &j, const std::string &prefix = "") {
  std::vector<std::string> out;
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      out.push_back(prefix + "/" + it.key());
      auto sub = key_paths(it.value(), prefix + "/" + it.key());
      out.insert(out.end(), sub.begin(), sub.end());
    }
  }
  return out;
}

double max_entry_gap(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return INFINITY;
  }
  return (a - b).cwiseAbs().maxCoeff();
}

Verdict roundtrip_determinism(const fs::path &dir) {
  Verdict v;
  for (std::size_t d : {2u, 3u}) {
    for (const auto &name : gallery_names()) {
      const auto f = (dir / (name + "_" + std::to_string(d) + ".json")).string();
      const auto g = (dir / (name + "_" + std::to_string(d) + "_b.json")).string();
      v.expect(cli_run({"gallery", name, "--dim", std::to_string(d), "-o", f}) == 0 &&
                   cli_run({"gallery", name, "--dim", std::to_string(d), "-o", g}) == 0,
               "export of " + name);
      const auto text = read_text_file(f);
      v.expect(text == read_text_file(g), name + ": repeated export differs");
      const auto back = load_channel(f);
      const auto ref = gallery_entry(name, d).channel;
      v.expect(back.kraus().size() == ref.kraus().size(), name + ": Kraus count");
      for (std::size_t k = 0; k < std::min(back.kraus().size(), ref.kraus().size());
           ++k) {
        v.expect(max_entry_gap(back.kraus()[k], ref.kraus()[k]) <= 1e-15,
                 name + ": Kraus entries drift");
      }
      const auto again = parse_json(dump_json(channel_to_json(back)));
      v.expect(key_paths(again) == key_paths(parse_json(text)),
               name + ": key structure changed");
    }
  }
  // States written by the CLI: bounds attainers and witnesses.
  const auto lo = (dir / "lo.json").string();
  const auto up = (dir / "up.json").string();
  std::string report;
  v.expect(cli_run({"--format", "json", "bounds", "--entropy", "1.5", "--dim", "3",
                    "--lower-out", lo, "--upper-out", up},
                   &report) == 0,
           "bounds export");
  const auto rj = parse_json(report);
  const auto lo_state = load_state(lo);
  v.expect(max_entry_gap(lo_state.matrix(),
                         state_from_json(rj["lower_attainer"]).matrix()) <= 1e-15,
           "lower attainer file vs report");
  v.expect(dump_json(state_to_json(lo_state)) == read_text_file(lo),
           "state re-dump differs");
  std::string report2;
  cli_run({"--format", "json", "bounds", "--entropy", "1.5", "--dim", "3"}, &report2);
  v.expect(key_paths(parse_json(report2)) == key_paths(rj), "bounds key structure");
  v.expect(report2 == report || parse_json(report2)["lower"] == rj["lower"],
           "bounds not reproducible");

  const auto r0 = (dir / "r0_d2.json").string();
  const auto w1 = (dir / "w1.json").string();
  const auto w2 = (dir / "w2.json").string();
  cli_run({"gallery", "r0", "-o", r0});
  cli_run({"witness", r0, "--seed", "7", "-o", w1});
  cli_run({"witness", r0, "--seed", "7", "-o", w2});
  v.expect(read_text_file(w1) == read_text_file(w2), "witness not reproducible");

  // Fixed-seed sampling.
  const auto layout = SubsystemLayout::bipartite(3, 3);
  v.expect(random_state(layout, 5, 99).matrix() == random_state(layout, 5, 99).matrix(),
           "random_state not reproducible");
  const auto c1 = random_channel(layout, 3, 99);
  const auto c2 = random_channel(layout, 3, 99);
  bool same = c1.kraus().size() == c2.kraus().size();
  for (std::size_t k = 0; same && k < c1.kraus().size(); ++k) {
    same = c1.kraus()[k] == c2.kraus()[k];
  }
  v.expect(same, "random_channel not reproducible");
  const auto h1 = find_cve_decrease(random_channel(layout, 2, 5), 20, 11);
  const auto h2 = find_cve_decrease(random_channel(layout, 2, 5), 20, 11);
  v.expect(h1.has_value() == h2.has_value() &&
               (!h1 || h1->state.matrix() == h2->state.matrix()),
           "falsifier not reproducible");
  std::string s1;
  std::string s2;
  cli_run({"--format", "json", "selftest"}, &s1);
  cli_run({"--format", "json", "selftest"}, &s2);
  v.expect(s1 == s2, "selftest output not reproducible");
  return v;
}

} // namespace

int main() {
  const fs::path dir = fs::temp_directory_path() / "aunital_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);

  struct Criterion {
    std::string name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {"A-unital iff CVE non-decreasing (random channels, d = 2, 3)",
       aunital_iff_monotone},
      {"swap-and-prepare is A-unital and entangles chi", swap_and_prepare_properties},
      {"region witnesses R0, id x Phi, M x id, separable family",
       region_witnesses},
      {"ACVENN iff S >= log d (1000 two-qubit states)", acvenn_suite},
      {"unital channels preserve ACVENN, non-unital ones do not",
       unital_acvenn_suite},
      {"CVE bounds at fixed entropy and their attainers", bounds_suite},
      {"relative entropy identity and monotonicity", relative_entropy_suite},
      {"witness pipeline for r0_d2.json", [&dir] { return witness_pipeline(dir); }},
      {"round trips and fixed-seed determinism",
       [&dir] { return roundtrip_determinism(dir); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].run();
    } catch (const std::exception &e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += v.passed() ? 0 : 1;
    std::cout << (v.passed() ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
              << criteria[i].name << " [" << num(secs) << " s]";
    const auto s = v.summary();
    if (!s.empty()) {
      std::cout << " (" << s << ")";
    }
    std::cout << std::endl;
  }
  fs::remove_all(dir);
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/"
            << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
