#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sbgeo/error.hpp"
#include "sbgeo/json_io.hpp"

namespace sbgeo::cli {

namespace {

using json_io::Json;

struct Config {
  double tol_interp = kTolInterp;
  double tol_gap = 1e-6;
  int omega_grid = 1024;
  std::uint64_t seed = 0;
  std::string format = "auto";
  std::string output;

  DistanceOptions distance() const {
    DistanceOptions o;
    o.tol_interp = tol_interp;
    o.tol_gap = tol_gap;
    o.sweep.grid = omega_grid;
    return o;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Malformed, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Accepts a bare geodesic or the output of the geodesic subcommand.
Geodesic load_geodesic(const std::string& path) {
  const Json j = json_io::parse(read_file(path));
  if (j.is_object() && j.contains("geodesic")) return json_io::decode_geodesic(j["geodesic"]);
  return json_io::decode_geodesic(j);
}

std::string fmt17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain:
    case ErrorKind::Degenerate:
    case ErrorKind::Infeasible:
    case ErrorKind::InfeasibleUnbalanced:
    case ErrorKind::InfeasibleRoyalCrossing:
    case ErrorKind::Ambiguous:
      return 2;
    case ErrorKind::CertificationFailure:
      return 3;
    case ErrorKind::Classification:
    case ErrorKind::Malformed:
    case ErrorKind::Internal:
      return 1;
  }
  return 1;
}

std::string resolve_format(const Config& cfg, bool csv_allowed) {
  std::string f = cfg.format == "auto" ? (csv_allowed ? "csv" : "json") : cfg.format;
  if (f == "csv" && !csv_allowed) {
    throw Error(ErrorKind::Malformed, "csv output is only available for trace");
  }
  return f;
}

std::string cmd_member(const std::string& point) {
  const SymPoint z = json_io::decode_sym_point(json_io::parse(point));
  const Membership m = contains(z);
  Json out{{"inside", m.inside},
           {"margin", m.margin},
           {"lift", Json::array({json_io::encode(m.lift.l1), json_io::encode(m.lift.l2)})},
           {"royal", on_royal_variety(z)}};
  return out.dump(2) + "\n";
}

std::string cmd_dist(const Config& cfg, const std::string& from, const std::string& to) {
  const SymPoint z = json_io::decode_sym_point(json_io::parse(from));
  const SymPoint w = json_io::decode_sym_point(json_io::parse(to));
  return json_io::encode(distance_report(z, w, cfg.distance())).dump(2) + "\n";
}

std::string cmd_geodesic(const Config& cfg, const std::string& from,
                         const std::string& to) {
  const SymPoint z = json_io::decode_sym_point(json_io::parse(from));
  const SymPoint w = json_io::decode_sym_point(json_io::parse(to));
  const LempertResult r = lempert_upper(z, w, cfg.distance());
  if (!r.has_witness) {
    throw Error(ErrorKind::CertificationFailure,
                "no geodesic found; only the lift bound " + fmt17(r.value) +
                    " is available");
  }
  FlatCertificateOptions copts;
  copts.grid = cfg.omega_grid;
  const Certificate cert = certificate(*r.witness, copts);
  Json out{{"geodesic", json_io::encode(*r.witness)},
           {"method", std::string(to_string(r.method))},
           {"preimage_from", json_io::encode(r.preimage_z)},
           {"preimage_to", json_io::encode(r.preimage_w)},
           {"distance", r.value},
           {"certificate", json_io::encode(cert)},
           {"certificate_deviation", verify_certificate(*r.witness, cert)}};
  return out.dump(2) + "\n";
}

std::pair<std::string, bool> cmd_verify(const Config& cfg, const std::string& path,
                                        int pairs, double tol) {
  const Geodesic g = load_geodesic(path);
  Rng rng(cfg.seed);
  std::vector<std::pair<Complex, Complex>> samples;
  for (int k = 0; k < pairs; ++k) {
    const Complex a = random_disc_point(rng, 0.9);
    const Complex b = random_disc_point(rng, 0.9);
    samples.emplace_back(a, b);
  }
  SweepOptions sweep;
  sweep.grid = cfg.omega_grid;
  const VerifyReport report = verify_geodesic(g, samples, tol, sweep);
  return {json_io::encode(report).dump(2) + "\n", report.passed};
}

std::string cmd_trace(const Config& cfg, const std::string& path, int samples) {
  const Geodesic g = load_geodesic(path);
  const std::vector<TraceRow> rows = boundary_trace(g, samples);
  if (resolve_format(cfg, true) == "json") {
    Json arr = Json::array();
    for (const TraceRow& r : rows) {
      arr.push_back(Json{{"theta", r.theta},
                         {"root1_abs", r.modulus1},
                         {"root2_abs", r.modulus2},
                         {"value", json_io::encode(r.value)}});
    }
    return arr.dump(2) + "\n";
  }
  std::string out = "theta,root1_abs,root2_abs,s_re,s_im,p_re,p_im\n";
  for (const TraceRow& r : rows) {
    out += fmt17(r.theta) + "," + fmt17(r.modulus1) + "," + fmt17(r.modulus2) + "," +
           fmt17(r.value.s.real()) + "," + fmt17(r.value.s.imag()) + "," +
           fmt17(r.value.p.real()) + "," + fmt17(r.value.p.imag()) + "\n";
  }
  return out;
}

std::string cmd_classify(const std::string& path) {
  return json_io::encode(royal_intersection_class(load_geodesic(path))).dump(2) + "\n";
}

std::string cmd_gn(int n, const std::string& target_text) {
  const Json j = json_io::parse(target_text);
  const SymPointN target =
      j.is_array() ? json_io::decode_sym_point_n(Json{{"sigma", j}})
                   : json_io::decode_sym_point_n(j);
  if (target.n() != n) {
    throw Error(ErrorKind::Malformed, "--n does not match the target length");
  }
  Json out{{"n", n}, {"target", json_io::encode(target)}};
  out.update(json_io::encode(lempert_upper_origin_n(target)));
  return out.dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distances and complex geodesics of the symmetrized bidisc", "sbgeo"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--tol-interp", cfg.tol_interp, "interpolation tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-gap", cfg.tol_gap, "tightness threshold for distance gaps")
      ->check(CLI::PositiveNumber);
  app.add_option("--omega-grid", cfg.omega_grid, "angle grid of the omega sweep")
      ->check(CLI::Range(16, 1 << 24));
  app.add_option("--seed", cfg.seed, "seed for sampled checks");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"auto", "json", "csv"}));
  app.add_option("--output", cfg.output, "write data to this file");

  std::string point, from, to, geodesic_path, target;
  int pairs = 16, samples = 256, n = 3;
  double verify_tol = 1e-6;

  auto* member = app.add_subcommand("member", "membership, margin and lift of a point");
  member->add_option("--point", point, "{\"s\": [re, im], \"p\": [re, im]}")->required();

  auto* dist = app.add_subcommand("dist", "Caratheodory and Lempert bounds");
  dist->add_option("--from", from)->required();
  dist->add_option("--to", to)->required();

  auto* geo = app.add_subcommand("geodesic", "witness geodesic with certificate");
  geo->add_option("--from", from)->required();
  geo->add_option("--to", to)->required();

  auto* verify = app.add_subcommand("verify", "check a geodesic on random pairs");
  verify->add_option("--geodesic", geodesic_path, "geodesic JSON file")->required();
  verify->add_option("--pairs", pairs)->check(CLI::Range(1, 1 << 20));
  verify->add_option("--tol", verify_tol)->check(CLI::PositiveNumber);

  auto* trace = app.add_subcommand("trace", "boundary values and lift moduli");
  trace->add_option("--geodesic", geodesic_path, "geodesic JSON file")->required();
  trace->add_option("--samples", samples)->check(CLI::Range(1, 1 << 24));

  auto* classify = app.add_subcommand("classify", "intersection with the royal variety");
  classify->add_option("--geodesic", geodesic_path, "geodesic JSON file")->required();

  auto* gn = app.add_subcommand("gn", "upper bound in the symmetrized n-disc");
  gn->add_option("--n", n)->check(CLI::Range(2, 64));
  gn->add_option("--target", target, "{\"n\": n, \"sigma\": [[re, im], ...]}")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  int code = 0;
  std::string data;
  try {
    const bool csv_ok = trace->parsed();
    resolve_format(cfg, csv_ok);
    if (member->parsed()) {
      data = cmd_member(point);
    } else if (dist->parsed()) {
      data = cmd_dist(cfg, from, to);
    } else if (geo->parsed()) {
      data = cmd_geodesic(cfg, from, to);
    } else if (verify->parsed()) {
      auto [text, passed] = cmd_verify(cfg, geodesic_path, pairs, verify_tol);
      data = std::move(text);
      if (!passed) {
        err << "verify: deviation above tolerance\n";
        code = 3;
      }
    } else if (trace->parsed()) {
      data = cmd_trace(cfg, geodesic_path, samples);
    } else if (classify->parsed()) {
      data = cmd_classify(geodesic_path);
    } else if (gn->parsed()) {
      data = cmd_gn(n, target);
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (cfg.output.empty()) {
    out << data;
  } else {
    std::ofstream file(cfg.output);
    if (!file) {
      err << "error: cannot write " << cfg.output << "\n";
      return 1;
    }
    file << data;
  }
  return code;
}

}  // namespace sbgeo::cli
