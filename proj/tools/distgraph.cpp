// Command-line front end: invariant, equiv, check, oracle, render.
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "distgraph/certificate_json.hpp"
#include "distgraph/dynamics.hpp"
#include "distgraph/error.hpp"
#include "distgraph/oracle.hpp"
#include "distgraph/polynomial_json.hpp"
#include "distgraph/portrait_json.hpp"
#include "distgraph/render.hpp"

namespace dg = distgraph;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kFailure = 2;

struct RunConfig {
  dg::DynamicsConfig dyn;
  int resolution = dg::kDefaultResolution;
  int depth = 2;
  std::string orientation = "ccw";
  std::string output;
  unsigned workers = 0;
};

using Input = std::variant<dg::ComplexPolynomial, dg::InvariantCertificate>;

Input load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dg::Error(dg::ErrorCode::Io, "cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw dg::Error(dg::ErrorCode::Parse, path + ": " + e.what());
  }
  if (j.is_object() && j.contains("graph")) return dg::certificate_from_json(j);
  if (!j.is_object() || !j.contains("coefficients"))
    throw dg::Error(dg::ErrorCode::Parse,
                    path + ": neither a polynomial nor a certificate");
  return dg::polynomial_from_json(j);
}

dg::ComplexPolynomial require_polynomial(const Input& in) {
  if (const auto* p = std::get_if<dg::ComplexPolynomial>(&in)) return *p;
  throw dg::Error(dg::ErrorCode::Precondition,
                  "this command needs a polynomial, not a certificate");
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw dg::Error(dg::ErrorCode::Io, "cannot write " + cfg.output);
  out << text;
}

void validate(const RunConfig& cfg) {
  if (!(cfg.dyn.tol_green > 0) || !(cfg.dyn.tol_angle > 0))
    throw dg::Error(dg::ErrorCode::Precondition, "tolerances must be > 0");
  if (cfg.dyn.max_iter < 1)
    throw dg::Error(dg::ErrorCode::Precondition, "max-iter must be >= 1");
  if (cfg.resolution < dg::kMinResolution)
    throw dg::Error(dg::ErrorCode::Precondition, "resolution must be >= 64");
  if (cfg.depth < 0)
    throw dg::Error(dg::ErrorCode::Precondition, "depth must be >= 0");
}

dg::InvariantCertificate certificate_of(const Input& in, const RunConfig& cfg) {
  if (const auto* c = std::get_if<dg::InvariantCertificate>(&in)) {
    const auto report = dg::certificate_validate(*c);
    if (!report.ok())
      throw dg::Error(dg::ErrorCode::InvalidCertificate,
                      report.violations.front());
    return *c;
  }
  const auto& p = std::get<dg::ComplexPolynomial>(in);
  if (cfg.orientation == "both") {
    const auto ccw = dg::invariant_of(p, cfg.dyn, dg::Orientation::Ccw);
    const auto cw = dg::invariant_of(p, cfg.dyn, dg::Orientation::Cw);
    if (dg::serialize_certificate(ccw) != dg::serialize_certificate(cw))
      throw dg::Error(dg::ErrorCode::InconsistentCombinatorics,
                      "orientations disagree");
    return ccw;
  }
  return dg::invariant_of(p, cfg.dyn,
                          cfg.orientation == "cw" ? dg::Orientation::Cw
                                                  : dg::Orientation::Ccw);
}

int cmd_invariant(const std::string& file, const RunConfig& cfg) {
  emit(cfg, dg::serialize_certificate(certificate_of(load(file), cfg)));
  return kOk;
}

int cmd_equiv(const std::string& a, const std::string& b, const RunConfig& cfg) {
  const auto ca = certificate_of(load(a), cfg);
  const auto cb = certificate_of(load(b), cfg);
  const auto diff = dg::certificate_difference(ca, cb);
  std::ostringstream os;
  if (!diff) {
    os << "EQUIVALENT: "
       << (ca.graph.empty() ? "both empty"
                            : "label sequences agree (" +
                                  std::to_string(ca.graph.size()) + " labels)")
       << '\n';
  } else {
    os << "NOT_EQUIVALENT: ";
    switch (diff->kind) {
      case dg::Difference::Kind::Degree:
        os << "degree mismatch (" << ca.degree << " vs " << cb.degree << ")";
        break;
      case dg::Difference::Kind::Length:
        os << "label sequence length " << ca.graph.size() << " vs "
           << cb.graph.size();
        break;
      case dg::Difference::Kind::Label:
        os << "label sequence differs at index " << diff->index;
        break;
    }
    os << '\n';
  }
  emit(cfg, os.str());
  return diff ? kNegative : kOk;
}

int cmd_check(const std::string& file, const RunConfig& cfg) {
  const auto p = require_polynomial(load(file));
  json out;
  out["degree"] = p.degree();
  json census = json::array();
  for (const auto& s : dg::critical_census(p, cfg.dyn)) {
    json c{{"point", {s.critical.point.real(), s.critical.point.imag()}},
           {"local_degree", s.critical.local_degree},
           {"escaping", s.escaping}};
    if (s.escaping) c["green"] = s.level.value;
    census.push_back(c);
  }
  out["criticals"] = census;
  int code = kOk;
  try {
    const auto analysis = dg::analyze_polynomial(p, cfg.dyn);
    const auto report = dg::portrait_validate(analysis.portrait);
    out["generic"] = true;
    out["portrait"] = dg::portrait_to_json(analysis.portrait);
    out["validation"] = {{"violations", report.violations},
                         {"warnings", report.warnings}};
    if (analysis.records.empty())
      out["note"] = "empty portrait: no escaping critical point";
    out["usable"] = report.ok();
    if (!report.ok()) code = kNegative;
  } catch (const dg::Error& e) {
    if (e.code() != dg::ErrorCode::GenericityViolation) throw;
    out["generic"] = false;
    out["error"] = std::string(dg::to_string(e.code()));
    out["message"] = e.what();
    out["usable"] = false;
    code = kNegative;
  }
  emit(cfg, out.dump(2) + "\n");
  return code;
}

int cmd_oracle(const std::string& file, const std::string& cert_file,
               bool corrupt, bool stability, const RunConfig& cfg) {
  const auto p = require_polynomial(load(file));
  auto cert = cert_file.empty() ? dg::invariant_of(p, cfg.dyn)
                                : certificate_of(load(cert_file), cfg);
  if (corrupt) cert = dg::corrupt_certificate(cert);
  dg::OracleOptions opt;
  opt.resolution = cfg.resolution;
  opt.check_stability = stability;
  opt.workers = cfg.workers;
  const auto report = dg::consistency_report(p, cert, cfg.depth, opt, cfg.dyn);
  emit(cfg, dg::report_to_json(report) + "\n");
  return report.consistent() ? kOk : kNegative;
}

int cmd_render(const std::string& file, const std::string& what,
               const RunConfig& cfg) {
  const auto p = require_polynomial(load(file));
  dg::RenderOptions opt;
  opt.resolution = cfg.resolution;
  opt.workers = cfg.workers;
  if (what == "equipotentials") {
    emit(cfg, dg::render_equipotentials(p, opt, cfg.dyn));
  } else if (what == "rays") {
    emit(cfg, dg::render_rays(p, opt, cfg.dyn));
  } else {
    const auto analysis = dg::analyze_polynomial(p, cfg.dyn);
    const auto map = dg::depth_components(p, analysis, cfg.depth,
                                          cfg.resolution, cfg.dyn, cfg.workers);
    const bool csv = cfg.output.size() >= 4 &&
                     cfg.output.compare(cfg.output.size() - 4, 4, ".csv") == 0;
    if (csv) {
      std::ostringstream os;
      dg::write_component_csv(os, map);
      emit(cfg, os.str());
    } else {
      emit(cfg, dg::render_regions_svg(map));
    }
  }
  return kOk;
}

void report_error(const std::string& code, const std::string& message) {
  std::cerr << json{{"error", code}, {"message", message}}.dump() << '\n';
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--tol-green", cfg.dyn.tol_green, "Green tolerance");
  sub->add_option("--tol-angle", cfg.dyn.tol_angle, "external angle tolerance");
  sub->add_option("--max-iter", cfg.dyn.max_iter, "iteration budget");
  sub->add_option("--res", cfg.resolution, "grid pixels per side");
  sub->add_option("--depth", cfg.depth, "band depth");
  sub->add_option("--orientation", cfg.orientation, "numbering orientation")
      ->check(CLI::IsMember({"ccw", "cw", "both"}));
  sub->add_option("-o", cfg.output, "output path (default stdout)");
  sub->add_option("--workers", cfg.workers, "grid threads (0 = all cores)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological invariants of polynomial escaping dynamics"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string first, second, cert_file, what;
  bool corrupt = false, stability = false;

  auto* inv = app.add_subcommand("invariant", "certificate of a polynomial");
  inv->add_option("input", first)->required();
  auto* eq = app.add_subcommand("equiv", "compare two inputs");
  eq->add_option("a", first)->required();
  eq->add_option("b", second)->required();
  auto* chk = app.add_subcommand("check", "critical census and genericity");
  chk->add_option("input", first)->required();
  auto* orc = app.add_subcommand("oracle", "flood-fill consistency check");
  orc->add_option("input", first)->required();
  orc->add_option("--certificate", cert_file, "certificate to check");
  orc->add_flag("--corrupt", corrupt, "swap one compound-number entry");
  orc->add_flag("--stability", stability, "recount at twice the resolution");
  auto* ren = app.add_subcommand("render", "SVG or CSV pictures");
  ren->add_option("input", first)->required();
  ren->add_option("what", what)
      ->required()
      ->check(CLI::IsMember({"equipotentials", "rays", "regions"}));
  for (auto* sub : {inv, eq, chk, orc, ren}) add_common(sub, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("PRECONDITION", e.what());
    return kFailure;
  }

  try {
    validate(cfg);
    if (*inv) return cmd_invariant(first, cfg);
    if (*eq) return cmd_equiv(first, second, cfg);
    if (*chk) return cmd_check(first, cfg);
    if (*orc) return cmd_oracle(first, cert_file, corrupt, stability, cfg);
    return cmd_render(first, what, cfg);
  } catch (const dg::Error& e) {
    report_error(std::string(dg::to_string(e.code())), e.what());
  } catch (const std::exception& e) {
    report_error("INTERNAL", e.what());
  }
  return kFailure;
}
