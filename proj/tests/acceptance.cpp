// Acceptance run: one PASS/FAIL line per criterion.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "distgraph/certificate_json.hpp"
#include "distgraph/fraction.hpp"
#include "distgraph/oracle.hpp"
#include "distgraph/polynomial_json.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace distgraph;
using support::error_of;

namespace {

constexpr int kPropertyCases = 10000;
constexpr double kGreenTol = 1e-9;
constexpr double kAngleTol = 1e-7;
constexpr double kLevelTol = 1e-12;
constexpr double kG_sym_at2 = 0.91886185389851430892828543504137457655;
constexpr double kOracleBudgetSeconds = 300;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("distgraph_accept_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::string& args) {
  const auto out = scratch() / "stdout", err = scratch() / "stderr";
  const std::string cmd = std::string(DISTGRAPH_CLI) + " " + args + " >" +
                          out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::string corpus(const std::string& name) {
  return std::string(CORPUS_DIR) + "/" + name + ".json";
}

ComplexPolynomial load(const std::string& name) {
  return polynomial_from_json(nlohmann::json::parse(slurp(corpus(name))));
}

ComplexPolynomial monomial(int m) {
  std::vector<Complex> c(m + 1, Complex(0));
  c[m] = 1;
  return ComplexPolynomial(c);
}

double circle_gap(double a, double b) {
  const double d = std::abs(a - b);
  return std::min(d, 1 - d);
}

Outcome forced_anchor() {
  const auto r = cli("invariant " + corpus("quad_z2_plus3"));
  if (r.code != 0) return {false, "exit " + std::to_string(r.code) + ": " + r.err};
  const auto j = nlohmann::json::parse(r.out);
  const auto& g = j.at("graph");
  const bool ok = g.size() == 1 && g[0].at("position") == 0.0 &&
                  g[0].at("label").at("d") == 2 && g[0].at("label").at("n") == 0 &&
                  g[0].at("label").at("pair") == nlohmann::json::parse("[[1],[1]]");
  return {ok, "graph " + g.dump()};
}

Outcome monomials() {
  int right = 0;
  std::string detail;
  for (int m = 2; m <= 4; ++m)
    if (invariant_of(monomial(m)).graph.empty()) ++right;
  const std::vector<std::pair<int, int>> pairs{{2, 2}, {3, 3}, {4, 4},
                                               {2, 3}, {2, 4}, {3, 4}};
  int agreed = 0;
  for (const auto& [a, b] : pairs) {
    const bool eq = certificates_equivalent(invariant_of(monomial(a)),
                                            invariant_of(monomial(b)));
    if (eq == (a == b)) ++agreed;
  }
  const auto same = cli("equiv " + corpus("cube_fixed") + " " + corpus("cube_fixed"));
  const bool cli_ok = same.code == 0 && same.out.rfind("EQUIVALENT", 0) == 0;
  detail = std::to_string(right) + "/3 empty, " + std::to_string(agreed) +
           "/6 equiv verdicts, cli " + (cli_ok ? "ok" : "wrong");
  return {right == 3 && agreed == 6 && cli_ok, detail};
}

Outcome affine_invariance() {
  std::mt19937_64 rng(101);
  int agreed = 0;
  for (int i = 0; i < 20; ++i) {
    const auto p = support::random_escaping_cubic(rng);
    std::uniform_real_distribution<double> u(-2, 2);
    const auto q = p.affine_conjugate(support::random_unit_scale(rng),
                                      Complex(u(rng), u(rng)));
    try {
      const auto a = canonical_sequence(invariant_of(p).graph);
      const auto b = canonical_sequence(invariant_of(q).graph);
      bool same = a.size() == b.size() && !a.empty();
      for (std::size_t k = 0; same && k < a.size(); ++k) same = label_eq(a[k], b[k]);
      if (same) ++agreed;
    } catch (const Error&) {
    }
  }
  return {agreed == 20, std::to_string(agreed) + "/20 label sequences equal"};
}

Outcome orientation_symmetry() {
  std::mt19937_64 rng(102);
  int identical = 0;
  for (int i = 0; i < 20; ++i) {
    const auto p = support::random_valid_portrait(rng);
    if (serialize_certificate(build_certificate(p, Orientation::Cw)) ==
        serialize_certificate(build_certificate(p, Orientation::Ccw)))
      ++identical;
  }
  int files = 0, same = 0;
  for (const auto* name : {"quad_z2_plus3", "cubic_z3_m3z_p10", "cubic_a", "cubic_c"}) {
    const auto ccw = cli("invariant " + corpus(name));
    const auto cw = cli("invariant --orientation cw " + corpus(name));
    ++files;
    if (ccw.code == 0 && cw.code == 0 && ccw.out == cw.out) ++same;
  }
  return {identical == 20 && same == files,
          std::to_string(identical) + "/20 portraits, " + std::to_string(same) + "/" +
              std::to_string(files) + " cli files"};
}

Outcome boundary_growth() {
  const auto p = load("quad_z2_plus3");
  const auto a = analyze_polynomial(p);
  struct Want {
    int depth, regions, boundaries;
  };
  // Depth 2 pins only the region count.
  const std::vector<Want> want{{0, 1, 2}, {1, 1, 3}, {2, 2, -1}};
  std::string detail;
  bool ok = true;
  for (const int res : {1024, 2048}) {
    for (const auto& w : want) {
      const auto map = depth_components(p, a, w.depth, res);
      const bool hit = map.resolution == res && map.region_count == w.regions &&
                       (w.boundaries < 0 || map.boundary_count == w.boundaries);
      ok = ok && hit;
      detail += "k" + std::to_string(w.depth) + "@" + std::to_string(res) + "=" +
                std::to_string(map.region_count) + "/" +
                std::to_string(map.boundary_count) + " ";
    }
  }
  return {ok, detail};
}

Outcome oracle_pinning() {
  const std::vector<std::string> names{"cubic_z3_m3z_p10", "cubic_a", "cubic_b",
                                       "cubic_c", "cubic_d", "cubic_e"};
  OracleOptions opt;
  opt.resolution = 2048;
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (const auto& name : names) {
    const auto p = load(name);
    const auto cert = invariant_of(p);
    const auto report = consistency_report(p, cert, 3, opt);
    int unresolved = 0;
    for (const auto& c : report.counts) unresolved += c.resolved ? 0 : 1;
    const bool good = report.consistent() && !report.entries.empty() &&
                      report.conclusive_entries() ==
                          static_cast<int>(report.entries.size());
    ok = ok && good;
    detail += name + (good ? " ok" : " FAILED") +
              (unresolved ? " (" + std::to_string(unresolved) + " count depth unresolved)"
                          : std::string()) +
              "; ";
    if (!good)
      for (const auto& f : report.failures) std::cerr << "  " << name << ": " << f << "\n";
  }
  const auto p = load("cubic_z3_m3z_p10");
  const auto bad = consistency_report(p, corrupt_certificate(invariant_of(p)), 3, opt);
  ok = ok && !bad.consistent();
  detail += std::string("corrupted ") + (bad.consistent() ? "passed" : "rejected");
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok = ok && seconds <= kOracleBudgetSeconds;
  char buf[32];
  std::snprintf(buf, sizeof buf, "; %.1f s", seconds);
  return {ok, detail + buf};
}

Outcome genericity() {
  const auto sym = load("cubic_symmetric");
  const bool rejected = error_of([&] { invariant_of(sym); }) == ErrorCode::GenericityViolation;
  const double g_plus = green(sym, 2, 1e-14).value;
  const double g_minus = green(sym, -2, 1e-14).value;
  const bool levels = std::abs(g_plus - g_minus) <= kLevelTol &&
                      std::abs(g_plus - kG_sym_at2) <= kLevelTol;
  const auto r = cli("check " + corpus("cubic_symmetric"));
  const bool cli_ok = r.code == 1 && r.out.find("GENERICITY_VIOLATION") != std::string::npos;
  char buf[96];
  std::snprintf(buf, sizeof buf, "|G(2)-G(-2)| = %.1e, |G(2)-frozen| = %.1e",
                std::abs(g_plus - g_minus), std::abs(g_plus - kG_sym_at2));
  return {rejected && levels && cli_ok, buf};
}

Outcome numeric_kernels() {
  const std::vector<ComplexPolynomial> polys{
      load("quad_z2_plus3"), load("cubic_z3_m3z_p10"), load("cubic_a"),
      ComplexPolynomial({Complex(1, -1), 0, Complex(0.5, 0.2), 0, Complex(0.7, 0.1)})};
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> u(-3, 3);
  double worst_green = 0, worst_angle = 0;
  int ambiguous = 0;
  for (const auto& p : polys) {
    const int m = p.degree();
    int green_seeds = 0, angle_seeds = 0;
    while (green_seeds < 100 || angle_seeds < 100) {
      const Complex z(u(rng), u(rng));
      if (!escapes(p, z)) continue;
      if (green_seeds < 100) {
        const double g = green(p, z, 1e-12).value;
        worst_green = std::max(worst_green, std::abs(green(p, p(z), 1e-12).value - m * g));
        ++green_seeds;
      }
      if (angle_seeds < 100) {
        try {
          const double t = external_angle(p, z, 1e-10);
          const double tp = external_angle(p, p(z), 1e-10);
          worst_angle = std::max(worst_angle, circle_gap(std::fmod(m * t, 1.0), tp));
          ++angle_seeds;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::BranchAmbiguity) throw;
          ++ambiguous;
        }
      }
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "worst green %.1e, worst angle %.1e, %d seeds redrawn on branch ambiguity",
                worst_green, worst_angle, ambiguous);
  return {worst_green <= kGreenTol && worst_angle <= kAngleTol, buf};
}

// Exact comparison of k1/den1 and k2/den2 by cross multiplication.
bool exact_equal(const PreimageFraction& a, const PreimageFraction& b) {
  return static_cast<unsigned __int128>(a.index()) * b.denominator() ==
         static_cast<unsigned __int128>(b.index()) * a.denominator();
}

PreimageFraction random_fraction(std::mt19937_64& rng, std::uint64_t m) {
  std::uniform_int_distribution<int> depth(0, m == 2 ? 40 : 12);
  const int n = depth(rng);
  std::uint64_t den = 1;
  for (int i = 0; i < n; ++i) den *= m;
  std::uint64_t idx = std::uniform_int_distribution<std::uint64_t>(0, den - 1)(rng);
  if (rng() % 3 == 0) idx = den >= 4 ? rng() % 4 * (den / 4) : 0;
  return frac_make(static_cast<std::int64_t>(idx), static_cast<std::int64_t>(m), n);
}

Outcome combinatorial_core() {
  std::mt19937_64 rng(104);
  int failures = 0;
  auto expect = [&](bool b) { failures += b ? 0 : 1; };

  for (int i = 0; i < kPropertyCases; ++i) {
    const std::uint64_t m = 2 + rng() % 3;
    const auto a = random_fraction(rng, m), b = random_fraction(rng, m),
               c = random_fraction(rng, m);
    expect(frac_eq(a, b) == exact_equal(a, b));
    expect(frac_eq(a, a));
    expect(frac_eq(a, b) == frac_eq(b, a));
    if (frac_eq(a, b) && frac_eq(b, c)) expect(frac_eq(a, c));
  }
  for (int done = 0; done < kPropertyCases;) {
    const std::uint64_t m = 2 + rng() % 3;
    const auto a = random_fraction(rng, m), b = random_fraction(rng, m),
               c = random_fraction(rng, m), r = random_fraction(rng, m);
    if (frac_eq(a, b) || frac_eq(b, c) || frac_eq(a, c)) continue;
    expect(cyclic_between(a, b, c) ==
           cyclic_between(frac_rotate(a, r), frac_rotate(b, r), frac_rotate(c, r)));
    ++done;
  }
  for (int i = 0; i < kPropertyCases; ++i) {
    const auto a = support::random_label(rng), b = support::random_label(rng),
               c = support::random_label(rng);
    expect(label_eq(a, a));
    expect(label_eq(a, b) == label_eq(b, a));
    if (label_eq(a, b) && label_eq(b, c)) expect(label_eq(a, c));
  }
  for (int i = 0; i < kPropertyCases; ++i) {
    const auto a = support::random_graph(rng), b = support::random_graph(rng),
               c = support::random_graph(rng);
    expect(graphs_equivalent(a, a));
    expect(graphs_equivalent(a, b) == graphs_equivalent(b, a));
    if (graphs_equivalent(a, b) && graphs_equivalent(b, c)) expect(graphs_equivalent(a, c));
    const double k = std::uniform_real_distribution<double>(0.3, 3.0)(rng);
    std::vector<LabelledPoint> moved;
    for (const auto& pt : a.points()) moved.push_back({std::pow(pt.position, k), pt.label});
    const auto sa = canonical_sequence(a);
    const auto sm = canonical_sequence(DistinguishingGraph(moved));
    bool same = sa.size() == sm.size();
    for (std::size_t q = 0; same && q < sa.size(); ++q) same = label_eq(sa[q], sm[q]);
    expect(same);
  }
  for (int i = 0; i < kPropertyCases; ++i) {
    const InvariantCertificate a{9, support::random_graph(rng)},
        b{static_cast<int>(9 + rng() % 2), support::random_graph(rng)},
        c{9, support::random_graph(rng)};
    expect(certificates_equivalent(a, a));
    expect(certificates_equivalent(a, b) == certificates_equivalent(b, a));
    if (certificates_equivalent(a, b) && certificates_equivalent(b, c))
      expect(certificates_equivalent(a, c));
  }
  return {failures == 0, std::to_string(failures) + " failures over 6 x " +
                             std::to_string(kPropertyCases) + " cases"};
}

Outcome determinism() {
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(CORPUS_DIR))
    if (e.path().extension() == ".json") names.push_back(e.path().stem().string());
  std::sort(names.begin(), names.end());

  auto pipeline = [&](const fs::path& dir) {
    fs::create_directories(dir);
    for (const auto& name : names) {
      const auto base = (dir / name).string();
      const auto inv = cli("invariant -o " + base + ".cert.json " + corpus(name));
      std::ofstream(base + ".invariant.log", std::ios::binary)
          << inv.code << "\n" << inv.out << inv.err;
      for (const auto* what : {"equipotentials", "rays", "regions"}) {
        const auto r = cli(std::string("render --res 256 --depth 2 -o ") + base + "." +
                           what + ".svg " + corpus(name) + " " + what);
        std::ofstream(base + "." + what + ".log", std::ios::binary)
            << r.code << "\n" << r.out << r.err;
      }
    }
  };
  const auto first = scratch() / "run1", second = scratch() / "run2";
  pipeline(first);
  pipeline(second);

  int files = 0, differing = 0, certificates = 0, renders = 0;
  for (const auto& e : fs::directory_iterator(first)) {
    const auto other = second / e.path().filename();
    ++files;
    if (!fs::exists(other) || slurp(e.path()) != slurp(other)) ++differing;
    const auto fname = e.path().filename().string();
    if (fname.ends_with(".cert.json")) ++certificates;
    if (fname.ends_with(".svg")) ++renders;
  }
  const bool ok = differing == 0 && certificates > 0 && renders > 0;
  return {ok, std::to_string(files) + " files (" + std::to_string(certificates) +
                  " certificates, " + std::to_string(renders) + " renders), " +
                  std::to_string(differing) + " differ"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"forced anchor label", forced_anchor},
      {"monomials give empty graphs", monomials},
      {"affine conjugacy invariance", affine_invariance},
      {"orientation symmetry", orientation_symmetry},
      {"boundary growth for z^2+3", boundary_growth},
      {"flood-fill oracle pins compound numbers", oracle_pinning},
      {"genericity detection", genericity},
      {"numeric kernels", numeric_kernels},
      {"combinatorial core properties", combinatorial_core},
      {"deterministic pipeline", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first
              << ": " << o.detail << std::endl;
  }
  fs::remove_all(scratch());
  return failed == 0 ? 0 : 1;
}
