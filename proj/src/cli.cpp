#include "gsqr/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gsqr/bounds.hpp"
#include "gsqr/diagnostics.hpp"
#include "gsqr/errors.hpp"
#include "gsqr/gram_schmidt.hpp"
#include "gsqr/linalg.hpp"
#include "gsqr/matrix_gen.hpp"
#include "gsqr/matrix_io.hpp"
#include "gsqr/report_json.hpp"
#include "gsqr/verify.hpp"

namespace gsqr {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

enum class ReportFormat { Json, Markdown, Csv };

struct RunConfig {
  std::string command;
  std::string algo;
  std::string input;
  std::string output_q;
  std::string output_r;
  std::string report = "markdown";
  std::string report_out;
  std::string format;
  std::optional<std::uint64_t> seed;
  double epsilon = kMachineEpsilon;
  GluedParams glued;
  std::size_t trials = 20;
  std::size_t m = 0;
  std::size_t n = 0;
  double kappa = 1e2;
  double slack = 10.0;
  bool all_prefixes = false;
};

ReportFormat report_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "markdown" || s == "md") return ReportFormat::Markdown;
  if (s == "csv") return ReportFormat::Csv;
  throw std::invalid_argument("unknown report format: " + s);
}

std::vector<Algorithm> algorithms(const std::string& algo) {
  if (algo == "both") return {Algorithm::CgsS, Algorithm::CgsP};
  return {algorithm_from_string(algo)};
}

std::uint64_t resolve_seed(const RunConfig& cfg) {
  if (cfg.seed) return *cfg.seed;
  if (const char* env = std::getenv("GSQR_SEED"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("GSQR_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

json header(const std::string& command, double epsilon) {
  return json{{"tool", "gsqr"}, {"version", kVersion}, {"command", command}, {"epsilon", epsilon}};
}

std::string audit_table_markdown(const DiagnosticsReport& r) {
  TableDocument t;
  t.title = std::string(display_name(r.algorithm)) + " prefix audit";
  t.headers = {"k", "||QR-A||", "c1||A||eps", "||R'R-A'A||", "c2||A||^2eps", "|mu|",
               "c3 eps", "||I-Q'Q||", "c4 kappa^2 eps", "||Q||"};
  for (const auto& row : r.rows) {
    t.rows.push_back({std::to_string(row.k), sci5(row.backward_error), sci5(row.backward_bound),
                      sci5(row.normal_residual), sci5(row.normal_bound), sci5(std::abs(row.mu)),
                      sci5(row.mu_bound), sci5(row.ortho_loss), sci5(row.ortho_bound),
                      sci5(row.q_norm)});
  }
  return t.to_markdown();
}

// Shared tail of factor/example1/glued: the headline table, extra scalar
// facts, and (markdown only) the per-prefix audit tables when available.
std::string render(const RunConfig& cfg, const std::vector<FinalAudit>& finals,
                   const json& reports_json, const std::vector<DiagnosticsReport>& full,
                   const std::string& title, const json& extra) {
  const auto fmt = report_format(cfg.report);
  if (fmt == ReportFormat::Json) {
    json doc = header(cfg.command, cfg.epsilon);
    for (const auto& [key, value] : extra.items()) doc[key] = value;
    doc["reports"] = reports_json;
    return doc.dump(2) + "\n";
  }
  const auto table = summary_table(finals, title);
  if (fmt == ReportFormat::Csv) return table.to_csv();

  std::ostringstream os;
  os << table.to_markdown() << '\n';
  for (const auto& [key, value] : extra.items()) os << "- " << key << ": " << value.dump() << '\n';
  for (const auto& f : finals) {
    os << "- " << display_name(f.algorithm) << ": kappa_2(R) = " << sci5(f.row.kappa_r)
       << ", c4*eps*kappa^2 = " << sci5(f.assumption.lhs)
       << (f.assumption.satisfied ? " (assumption satisfied)" : " (assumption NOT satisfied)")
       << '\n';
  }
  for (const auto& r : full) os << '\n' << audit_table_markdown(r);
  return os.str();
}

std::string render(const RunConfig& cfg, const std::vector<DiagnosticsReport>& reports,
                   const std::string& title, const json& extra) {
  std::vector<FinalAudit> finals;
  for (const auto& r : reports) finals.push_back(final_audit(r));
  return render(cfg, finals, json(reports), reports, title, extra);
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.report_out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.report_out);
  if (!f) throw IoError("cannot open " + cfg.report_out + " for writing");
  f << text;
  if (!f) throw IoError("failed writing " + cfg.report_out);
}

fs::path tagged_path(const std::string& path, Algorithm algo, bool tag) {
  fs::path p(path);
  if (!tag) return p;
  std::string tag_text(display_name(algo));
  for (auto& c : tag_text) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return p.parent_path() / (p.stem().string() + "." + tag_text + p.extension().string());
}

// --format wins; otherwise each file's own extension decides.
MatrixFormat file_format(const RunConfig& cfg, const fs::path& path) {
  if (!cfg.format.empty()) return matrix_format_from_string(cfg.format);
  return path.extension() == ".csv" ? MatrixFormat::Csv : MatrixFormat::MatrixMarket;
}

int cmd_factor(const RunConfig& cfg, std::ostream& out) {
  const Matrix a = read_matrix(cfg.input, file_format(cfg, cfg.input));
  if (a.rows() < a.cols()) {
    throw ParseError(cfg.input + ": matrix is " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + ", need rows >= cols");
  }
  const auto algos = algorithms(cfg.algo.empty() ? "cgs-p" : cfg.algo);
  std::vector<DiagnosticsReport> reports;
  for (const auto algo : algos) {
    const auto f = factorize(a, algo);
    const bool tag = algos.size() > 1;
    if (!cfg.output_q.empty()) {
      const auto path = tagged_path(cfg.output_q, algo, tag);
      write_matrix(path, f.q, file_format(cfg, path));
    }
    if (!cfg.output_r.empty()) {
      const auto path = tagged_path(cfg.output_r, algo, tag);
      write_matrix(path, f.r, file_format(cfg, path));
    }
    reports.push_back(diagnose(a, f, cfg.epsilon));
  }
  json extra{{"input", cfg.input}, {"m", a.rows()}, {"n", a.cols()}};
  emit(cfg, out, render(cfg, reports, "Factorization of " + cfg.input, extra));
  return kExitOk;
}

int cmd_example1(const RunConfig& cfg, std::ostream& out) {
  const Matrix a = example1_matrix();
  std::vector<DiagnosticsReport> reports;
  for (const auto algo : algorithms(cfg.algo.empty() ? "both" : cfg.algo)) {
    reports.push_back(diagnose(a, factorize(a, algo), cfg.epsilon));
  }
  json extra{{"m", a.rows()}, {"n", a.cols()}};
  emit(cfg, out,
       render(cfg, reports, "Orthogonality and normal equations error, 6x5 counterexample",
              extra));
  return kExitOk;
}

int cmd_glued(const RunConfig& cfg, std::ostream& out) {
  GluedParams p = cfg.glued;
  p.seed = resolve_seed(cfg);
  const Matrix a = glued_matrix(p);
  json extra{{"seed", p.seed},
             {"m", p.m},
             {"n", p.n()},
             {"cond_a_glob", p.cond_a_glob},
             {"cond_a", p.cond_a},
             {"nglued", p.nglued},
             {"nbglued", p.nbglued},
             {"cond2_A", cond2(a)}};
  const std::string title = "Orthogonality and normal equations error, glued matrix";
  const auto algos = algorithms(cfg.algo.empty() ? "both" : cfg.algo);

  if (cfg.all_prefixes) {
    std::vector<DiagnosticsReport> reports;
    for (const auto algo : algos) reports.push_back(diagnose(a, factorize(a, algo), cfg.epsilon));
    emit(cfg, out, render(cfg, reports, title, extra));
    return kExitOk;
  }
  std::vector<FinalAudit> finals;
  for (const auto algo : algos) finals.push_back(audit_final(a, factorize(a, algo), cfg.epsilon));
  emit(cfg, out, render(cfg, finals, json(finals), {}, title, extra));
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyConfig vc;
  vc.trials = cfg.trials;
  vc.m = cfg.m;
  vc.n = cfg.n;
  vc.kappa = cfg.kappa;
  vc.slack = cfg.slack;
  vc.seed = resolve_seed(cfg);
  vc.epsilon = cfg.epsilon;
  vc.algorithm = algorithm_from_string(cfg.algo.empty() ? "cgs-p" : cfg.algo);
  const auto s = run_verify(vc);

  const auto fmt = report_format(cfg.report);
  std::ostringstream os;
  if (fmt == ReportFormat::Json) {
    json doc = header(cfg.command, cfg.epsilon);
    doc["seed"] = vc.seed;
    doc["algorithm"] = std::string(to_string(vc.algorithm));
    doc["config"] = {{"trials", vc.trials}, {"m", vc.m}, {"n", vc.n},
                     {"kappa", vc.kappa},   {"slack", vc.slack}};
    doc["prefixes"] = s.prefixes;
    doc["breakdowns"] = s.breakdowns;
    doc["all_pass"] = s.all_pass();
    json per_ineq = json::object();
    for (std::size_t i = 0; i < kInequalityCount; ++i) {
      per_ineq[std::string(to_string(static_cast<Inequality>(i)))] = {
          {"passes", s.passes[i]}, {"worst_ratio", s.worst_ratio[i]}};
    }
    doc["inequalities"] = per_ineq;
    json trials = json::array();
    for (const auto& t : s.trials) {
      trials.push_back({{"index", t.index},
                        {"m", t.m},
                        {"n", t.n},
                        {"breakdown", t.breakdown},
                        {"kappa_r", t.kappa_r},
                        {"assumption_satisfied", t.assumption_satisfied},
                        {"worst_ratio", t.worst_ratio}});
    }
    doc["trials"] = trials;
    os << doc.dump(2) << '\n';
  } else {
    TableDocument t;
    t.title = "Error-bound audit, " + std::to_string(vc.trials) + " trials, slack " +
              format_real(vc.slack);
    t.headers = {"inequality", "passes", "prefixes", "worst measured/bound"};
    for (std::size_t i = 0; i < kInequalityCount; ++i) {
      t.rows.push_back({std::string(to_string(static_cast<Inequality>(i))),
                        std::to_string(s.passes[i]), std::to_string(s.prefixes),
                        sci5(s.worst_ratio[i])});
    }
    if (fmt == ReportFormat::Csv) {
      os << t.to_csv();
    } else {
      os << t.to_markdown() << "\n- seed: " << vc.seed << "\n- kappa target: "
         << format_real(vc.kappa) << "\n- breakdowns: " << s.breakdowns
         << "\n- result: " << (s.all_pass() ? "PASS" : "FAIL") << '\n';
    }
  }
  emit(cfg, out, os.str());
  return s.breakdowns == 0 ? kExitOk : kExitNumerical;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_algo_both) {
  auto* algo = sub->add_option("--algo", cfg.algo, "cgs-s | cgs-p | householder" +
                                                       std::string(with_algo_both ? " | both" : ""));
  if (with_algo_both) {
    algo->check(CLI::IsMember({"cgs-s", "cgs-p", "householder", "both"}));
  } else {
    algo->check(CLI::IsMember({"cgs-s", "cgs-p", "householder"}));
  }
  sub->add_option("--report", cfg.report, "report format: json | markdown | csv")
      ->check(CLI::IsMember({"json", "markdown", "md", "csv"}));
  sub->add_option("--report-out", cfg.report_out, "write the report to this file");
  sub->add_option("--epsilon", cfg.epsilon, "unit roundoff used in the bounds")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classical Gram-Schmidt QR: factor, reproduce experiments, audit error bounds",
               "gsqr"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  RunConfig cfg;

  auto* factor = app.add_subcommand("factor", "factor a matrix read from a file");
  add_common(factor, cfg, true);
  factor->add_option("--input", cfg.input, "Matrix Market (.mtx) or CSV file")->required();
  factor->add_option("--output-q", cfg.output_q, "write Q here");
  factor->add_option("--output-r", cfg.output_r, "write R here");
  factor->add_option("--format", cfg.format, "matrixmarket | csv (default: by extension)")
      ->check(CLI::IsMember({"matrixmarket", "mm", "mtx", "csv"}));

  auto* ex1 = app.add_subcommand("example1", "6x5 Hilbert/Pascal counterexample");
  add_common(ex1, cfg, true);

  auto* glued = app.add_subcommand("glued", "glued random matrix experiment");
  add_common(glued, cfg, true);
  glued->add_option("--seed", cfg.seed, "PRNG seed (default: $GSQR_SEED or 0)");
  glued->add_option("--m", cfg.glued.m, "rows");
  glued->add_option("--nglued", cfg.glued.nglued, "columns per block");
  glued->add_option("--nbglued", cfg.glued.nbglued, "number of blocks");
  glued->add_option("--cond-a", cfg.glued.cond_a, "log10 per-block conditioning");
  glued->add_option("--cond-a-glob", cfg.glued.cond_a_glob, "log10 global conditioning");
  glued->add_flag("--all-prefixes", cfg.all_prefixes,
                  "audit every column prefix (slow for large n; default audits k = n only)");

  auto* verify = app.add_subcommand("verify", "randomized audit of the error bounds");
  add_common(verify, cfg, false);
  verify->add_option("--seed", cfg.seed, "PRNG seed (default: $GSQR_SEED or 0)");
  verify->add_option("--trials", cfg.trials, "number of random matrices")
      ->check(CLI::PositiveNumber);
  verify->add_option("--m", cfg.m, "rows (default: random in [5, 60])");
  verify->add_option("--n", cfg.n, "columns (default: random in [2, m])");
  verify->add_option("--kappa", cfg.kappa, "target condition number, at most 1e5")
      ->check(CLI::Range(1.0, 1e5));
  verify->add_option("--slack", cfg.slack, "multiplier on each bound")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, eo;
    const int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (factor->parsed()) {
      cfg.command = "factor";
      return cmd_factor(cfg, out);
    }
    if (ex1->parsed()) {
      cfg.command = "example1";
      return cmd_example1(cfg, out);
    }
    if (glued->parsed()) {
      cfg.command = "glued";
      return cmd_glued(cfg, out);
    }
    cfg.command = "verify";
    return cmd_verify(cfg, out);
  } catch (const Breakdown& e) {
    err << "gsqr: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const RankDeficient& e) {
    err << "gsqr: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const SingularInput& e) {
    err << "gsqr: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const NonConvergence& e) {
    err << "gsqr: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ParseError& e) {
    err << "gsqr: parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const IoError& e) {
    err << "gsqr: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "gsqr: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace gsqr
