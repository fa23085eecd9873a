#pragma once
/**
 * @brief Command-line surface: `hypersphere`, `clifford`, `sweep`, `verify`.
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
 * Tables print 6 significant digits, CSV 12. JSON numbers are written in shortest
 * round-trip form so values parsed back reproduce residuals bit for bit.
 */

#include <fmt/format.h>

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "polyharm/critical_points.hpp"
#include "polyharm/fd_oracle.hpp"
#include "polyharm/section_calculus.hpp"
#include "polyharm/verification.hpp"

namespace polyharm::cli {

enum class ExitCode : int { ok = 0, verification_failed = 1, usage = 2, io = 3 };

enum class OutputFormat { table, csv, json };

inline OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::table;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format: " + name);
}

struct IntRange {
  int lo = 0;
  int hi = -1;
  bool empty() const noexcept { return hi < lo; }
};

/// "A", "A..B" or "A:B", inclusive.
inline IntRange parse_range(const std::string& text) {
  auto to_int = [&](const std::string& part) {
    std::size_t used = 0;
    const int v = std::stoi(part, &used);
    if (used != part.size()) throw std::invalid_argument("bad range: " + text);
    return v;
  };
  for (const std::string sep : {"..", ":"}) {
    const auto pos = text.find(sep);
    if (pos != std::string::npos) return {to_int(text.substr(0, pos)), to_int(text.substr(pos + sep.size()))};
  }
  const int v = to_int(text);
  return {v, v};
}

struct SweepSpec {
  IntRange p_range{1, 8};
  IntRange q_range{1, 8};
  IntRange r_range{3, 40};
  OutputFormat output_format = OutputFormat::csv;
  std::optional<std::string> output_path;
};

struct SweepRow {
  int p = 0;
  int q = 0;
  int r = 0;
  std::optional<double> discriminant;
  std::vector<double> roots;
};

inline void validate(const SweepSpec& spec) {
  if (spec.p_range.empty() || spec.q_range.empty() || spec.r_range.empty()) {
    throw std::invalid_argument("sweep ranges must be nonempty");
  }
  if (spec.p_range.lo < 1 || spec.q_range.lo < 1) throw std::invalid_argument("p and q must be >= 1");
  if (spec.r_range.lo < 2) throw std::invalid_argument("r must be >= 2");
}

/// Rows in (p, q, r) order.
inline std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  validate(spec);
  std::vector<SweepRow> rows;
  for (int p = spec.p_range.lo; p <= spec.p_range.hi; ++p) {
    for (int q = spec.q_range.lo; q <= spec.q_range.hi; ++q) {
      for (int r = spec.r_range.lo; r <= spec.r_range.hi; ++r) {
        SweepRow row{p, q, r, std::nullopt, {}};
        if (r >= 3) row.discriminant = discriminant_condition(p, q, r);
        for (const SolutionReport& rep : solve_clifford(p, q, r)) row.roots.push_back(rep.parameter);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

namespace detail {

inline std::string g12(double x) { return fmt::format("{:.12g}", x); }
inline std::string g6(double x) { return fmt::format("{:.6g}", x); }

inline std::string stability_text(const std::optional<bool>& stable) {
  if (!stable) return "unknown";
  return *stable ? "stable" : "unstable";
}

inline nlohmann::json stability_json(const std::optional<bool>& stable) {
  if (!stable) return nullptr;
  return *stable;
}

inline nlohmann::json residuals_json(const std::map<std::string, double>& residuals) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [name, value] : residuals) out[name] = value;
  return out;
}

}  // namespace detail

/// solve_hypersphere plus the operator-route and finite-difference residuals.
inline SolutionReport hypersphere_with_oracles(int r, int n) {
  SolutionReport rep = solve_hypersphere(r);
  rep.residuals["tau_r"] = std::abs(tau_r(rep.alpha_star, n, r).coeff);
  rep.residuals["fd_eps_deriv"] = verify_hypersphere_report(rep, r).routes.at("fd_eps_deriv");
  return rep;
}

/// solve_clifford plus the finite-difference residual of each root.
inline std::vector<SolutionReport> clifford_with_oracles(int p, int q, int r) {
  std::vector<SolutionReport> reports = solve_clifford(p, q, r);
  for (SolutionReport& rep : reports) {
    rep.residuals["fd_eps_C"] = verify_clifford_criticality(rep.parameter, p, q, r).routes.at("fd_eps_C");
  }
  return reports;
}

inline std::string render_hypersphere(const SolutionReport& rep, int r, int n, OutputFormat format) {
  const double energy = total_energy(HypersphereConfig(r, n), rep.alpha_star);
  std::ostringstream os;
  switch (format) {
    case OutputFormat::table: {
      os << fmt::format("r-harmonic hypersphere S^{}(R) in S^{}, r = {}\n", n - 1, n, r);
      os << fmt::format("  {:<18}{}\n", "radius", detail::g6(rep.parameter));
      os << fmt::format("  {:<18}{}\n", "alpha*", detail::g6(rep.alpha_star));
      os << fmt::format("  {:<18}{}\n", "energy", detail::g6(energy));
      os << fmt::format("  {:<18}{}\n", "kind", to_string(rep.kind));
      os << fmt::format("  {:<18}{}\n", "stability", detail::stability_text(rep.stable));
      for (const auto& [name, value] : rep.residuals) {
        os << fmt::format("  {:<18}{}\n", "res." + name, detail::g6(value));
      }
      break;
    }
    case OutputFormat::csv: {
      os << "r,n,radius,alpha_star,energy,kind,stable";
      for (const auto& entry : rep.residuals) os << ",res_" << entry.first;
      os << '\n';
      os << r << ',' << n << ',' << detail::g12(rep.parameter) << ',' << detail::g12(rep.alpha_star) << ','
         << detail::g12(energy) << ',' << to_string(rep.kind) << ',' << detail::stability_text(rep.stable);
      for (const auto& entry : rep.residuals) os << ',' << detail::g12(entry.second);
      os << '\n';
      break;
    }
    case OutputFormat::json: {
      nlohmann::json j;
      j["r"] = r;
      j["n"] = n;
      j["radius"] = rep.parameter;
      j["alpha_star"] = rep.alpha_star;
      j["energy"] = energy;
      j["kind"] = std::string(to_string(rep.kind));
      j["stable"] = detail::stability_json(rep.stable);
      j["residuals"] = detail::residuals_json(rep.residuals);
      os << j.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

inline std::string render_clifford(const std::vector<SolutionReport>& reports, int p, int q, int r,
                                   OutputFormat format) {
  const std::optional<double> disc = r >= 3 ? std::optional<double>(discriminant_condition(p, q, r)) : std::nullopt;
  std::ostringstream os;
  switch (format) {
    case OutputFormat::table: {
      os << fmt::format("Clifford tori S^{}(R1) x S^{}(R2) in S^{}, r = {}", p, q, p + q + 1, r);
      if (disc) os << fmt::format(", discriminant condition {}", detail::g6(*disc));
      os << '\n';
      os << fmt::format("  {:>12}{:>12}{:>12}{:>12}  {:<18}{:>12}{:>12}{:>12}\n", "t", "R1", "R2", "alpha*", "kind",
                        "res.poly", "res.334", "res.fd");
      for (const SolutionReport& rep : reports) {
        auto res = [&](const char* key) {
          auto it = rep.residuals.find(key);
          return it == rep.residuals.end() ? std::string("-") : detail::g6(it->second);
        };
        os << fmt::format("  {:>12}{:>12}{:>12}{:>12}  {:<18}{:>12}{:>12}{:>12}\n", detail::g6(rep.parameter),
                          detail::g6(rep.r1.value_or(0.0)), detail::g6(rep.r2.value_or(0.0)),
                          detail::g6(rep.alpha_star), to_string(rep.kind), res("poly"), res("residual_334"),
                          res("fd_eps_C"));
      }
      break;
    }
    case OutputFormat::csv: {
      os << "p,q,r,t,R1,R2,alpha_star,kind,stable,res_poly,res_334,res_fd,discriminant\n";
      for (const SolutionReport& rep : reports) {
        auto res = [&](const char* key) {
          auto it = rep.residuals.find(key);
          return it == rep.residuals.end() ? std::string() : detail::g12(it->second);
        };
        os << p << ',' << q << ',' << r << ',' << detail::g12(rep.parameter) << ','
           << detail::g12(rep.r1.value_or(0.0)) << ',' << detail::g12(rep.r2.value_or(0.0)) << ','
           << detail::g12(rep.alpha_star) << ',' << to_string(rep.kind) << ',' << detail::stability_text(rep.stable)
           << ',' << res("poly") << ',' << res("residual_334") << ',' << res("fd_eps_C") << ','
           << (disc ? detail::g12(*disc) : std::string()) << '\n';
      }
      break;
    }
    case OutputFormat::json: {
      nlohmann::json j;
      j["p"] = p;
      j["q"] = q;
      j["r"] = r;
      j["discriminant"] = disc ? nlohmann::json(*disc) : nlohmann::json(nullptr);
      j["solutions"] = nlohmann::json::array();
      for (const SolutionReport& rep : reports) {
        nlohmann::json s;
        s["t"] = rep.parameter;
        s["R1"] = rep.r1.value_or(0.0);
        s["R2"] = rep.r2.value_or(0.0);
        s["alpha_star"] = rep.alpha_star;
        s["kind"] = std::string(to_string(rep.kind));
        s["stable"] = detail::stability_json(rep.stable);
        s["residuals"] = detail::residuals_json(rep.residuals);
        j["solutions"].push_back(std::move(s));
      }
      os << j.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

inline std::string render_sweep(const std::vector<SweepRow>& rows, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::csv: {
      os << "p,q,r,count,disc,t1,t2,t3\n";
      for (const SweepRow& row : rows) {
        os << row.p << ',' << row.q << ',' << row.r << ',' << row.roots.size() << ','
           << (row.discriminant ? detail::g12(*row.discriminant) : std::string());
        for (std::size_t i = 0; i < 3; ++i) {
          os << ',' << (i < row.roots.size() ? detail::g12(row.roots[i]) : std::string());
        }
        os << '\n';
      }
      break;
    }
    case OutputFormat::table: {
      os << fmt::format("{:>4}{:>4}{:>5}{:>7}{:>14}{:>12}{:>12}{:>12}\n", "p", "q", "r", "count", "disc", "t1", "t2",
                        "t3");
      for (const SweepRow& row : rows) {
        os << fmt::format("{:>4}{:>4}{:>5}{:>7}{:>14}", row.p, row.q, row.r, row.roots.size(),
                          row.discriminant ? detail::g6(*row.discriminant) : std::string("-"));
        for (std::size_t i = 0; i < 3; ++i) {
          os << fmt::format("{:>12}", i < row.roots.size() ? detail::g6(row.roots[i]) : std::string("-"));
        }
        os << '\n';
      }
      break;
    }
    case OutputFormat::json: {
      nlohmann::json j = nlohmann::json::array();
      for (const SweepRow& row : rows) {
        j.push_back({{"p", row.p},
                     {"q", row.q},
                     {"r", row.r},
                     {"count", row.roots.size()},
                     {"discriminant", row.discriminant ? nlohmann::json(*row.discriminant) : nlohmann::json(nullptr)},
                     {"roots", row.roots}});
      }
      os << j.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

inline std::string render_reports(const std::vector<OracleReport>& reports, OutputFormat format) {
  std::ostringstream os;
  if (format == OutputFormat::json) {
    nlohmann::json j = nlohmann::json::array();
    for (const OracleReport& rep : reports) {
      j.push_back({{"name", rep.name},
                   {"max_residual", rep.max_residual},
                   {"samples", rep.samples},
                   {"passed", rep.passed},
                   {"tolerance", rep.tolerance},
                   {"routes", detail::residuals_json(rep.routes)}});
    }
    os << j.dump(2) << '\n';
    return os.str();
  }
  for (const OracleReport& rep : reports) {
    os << fmt::format("{}  {:<36} residual={:<12.6g} tol={:<10.3g} samples={}\n", rep.passed ? "PASS" : "FAIL",
                      rep.name, rep.max_residual, rep.tolerance, rep.samples);
    for (const auto& [route, value] : rep.routes) os << fmt::format("      {:<18}{:.12g}\n", route, value);
  }
  return os.str();
}

namespace detail {

inline ExitCode emit(const std::string& text, const std::optional<std::string>& path, std::ostream& out,
                     std::ostream& err) {
  if (!path) {
    out << text;
    return ExitCode::ok;
  }
  std::ofstream file(*path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open output file " << *path << '\n';
    return ExitCode::io;
  }
  file << text;
  file.flush();
  if (!file) {
    err << "error: failed writing " << *path << '\n';
    return ExitCode::io;
  }
  return ExitCode::ok;
}

}  // namespace detail

/// Parses argv and runs one subcommand. Never calls std::exit.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proper r-harmonic hyperspheres and generalized Clifford tori in Euclidean spheres", "polyharm"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"table", "csv", "json"};

  int r = 2;
  int n = 3;
  int p = 1;
  int q = 1;
  std::string format = "table";
  std::optional<std::string> out_path;

  auto* hyper = app.add_subcommand("hypersphere", "Proper r-harmonic hypersphere radius in S^n");
  hyper->add_option("--r", r, "order r >= 2")->required()->check(CLI::Range(2, 1 << 20));
  hyper->add_option("--n", n, "ambient dimension n >= 2")->check(CLI::Range(2, 1 << 20));
  hyper->add_option("--format", format)->check(CLI::IsMember(formats));
  hyper->add_option("--out", out_path, "write output to PATH");

  auto* cliff = app.add_subcommand("clifford", "Admissible Clifford tori S^p(R1) x S^q(R2)");
  cliff->add_option("--p", p, "p >= 1")->required()->check(CLI::Range(1, 1 << 20));
  cliff->add_option("--q", q, "q >= 1")->required()->check(CLI::Range(1, 1 << 20));
  cliff->add_option("--r", r, "order r >= 2")->required()->check(CLI::Range(2, 1 << 20));
  cliff->add_option("--format", format)->check(CLI::IsMember(formats));
  cliff->add_option("--out", out_path, "write output to PATH");

  std::string p_text = "1..8";
  std::string q_text = "1..8";
  std::string r_text = "3..40";
  std::string sweep_format = "csv";
  auto* sweep = app.add_subcommand("sweep", "Root counts of P(t) over a (p, q, r) grid");
  sweep->add_option("--p", p_text, "range A..B")->capture_default_str();
  sweep->add_option("--q", q_text, "range A..B")->capture_default_str();
  sweep->add_option("--r", r_text, "range A..B")->capture_default_str();
  sweep->add_option("--format", sweep_format)->check(CLI::IsMember(formats))->capture_default_str();
  sweep->add_option("--out", out_path, "write output to PATH");

  std::string suite = "all";
  double tol = 1e-7;
  std::optional<double> point_t;
  int vp = 1;
  int vq = 1;
  int vr = 3;
  auto* verify = app.add_subcommand("verify", "Run invariant batteries, or check one Clifford parameter with --t");
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember(std::vector<std::string>(suite_names.begin(), suite_names.end())))
      ->capture_default_str();
  verify->add_option("--tol", tol, "tolerance for finite-difference routes")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--t", point_t, "check this t = R1^2 instead of a suite");
  verify->add_option("--p", vp)->check(CLI::Range(1, 1 << 20));
  verify->add_option("--q", vq)->check(CLI::Range(1, 1 << 20));
  verify->add_option("--r", vr)->check(CLI::Range(2, 1 << 20));
  verify->add_option("--format", format)->check(CLI::IsMember(std::vector<std::string>{"table", "json"}));
  verify->add_option("--out", out_path, "write output to PATH");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return static_cast<int>(ExitCode::ok);
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return static_cast<int>(ExitCode::ok);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  }

  try {
    if (hyper->parsed()) {
      const SolutionReport rep = hypersphere_with_oracles(r, n);
      return static_cast<int>(detail::emit(render_hypersphere(rep, r, n, parse_format(format)), out_path, out, err));
    }
    if (cliff->parsed()) {
      const auto reports = clifford_with_oracles(p, q, r);
      return static_cast<int>(
          detail::emit(render_clifford(reports, p, q, r, parse_format(format)), out_path, out, err));
    }
    if (sweep->parsed()) {
      SweepSpec spec;
      try {
        spec.p_range = parse_range(p_text);
        spec.q_range = parse_range(q_text);
        spec.r_range = parse_range(r_text);
        spec.output_format = parse_format(sweep_format);
        spec.output_path = out_path;
        validate(spec);
      } catch (const std::exception& e) {
        err << "usage error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::usage);
      }
      return static_cast<int>(
          detail::emit(render_sweep(run_sweep(spec), spec.output_format), spec.output_path, out, err));
    }
    if (verify->parsed()) {
      std::vector<OracleReport> reports;
      if (point_t) {
        if (!(*point_t > 0.0 && *point_t < 1.0)) {
          err << "usage error: --t must lie in (0, 1)\n";
          return static_cast<int>(ExitCode::usage);
        }
        reports.push_back(verify_clifford_criticality(*point_t, vp, vq, vr, 1e-8));
      } else {
        reports = run_suite(parse_suite(suite), tol);
      }
      const ExitCode written = detail::emit(render_reports(reports, parse_format(format)), out_path, out, err);
      if (written != ExitCode::ok) return static_cast<int>(written);
      bool all_passed = true;
      for (const OracleReport& rep : reports) {
        if (!rep.passed) {
          err << "FAILED: " << rep.name << '\n';
          all_passed = false;
        }
      }
      return static_cast<int>(all_passed ? ExitCode::ok : ExitCode::verification_failed);
    }
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  }
  return static_cast<int>(ExitCode::usage);
}

}  // namespace polyharm::cli
