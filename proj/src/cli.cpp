#include "hurwitz/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "hurwitz/classical.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/kp.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/recursion.hpp"
#include "hurwitz/verify.hpp"

namespace hurwitz {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string cache_dir;
  std::string format = "pretty";
  int genus = 0;
  std::vector<int> lambda, mu;
  std::string method = "cutjoin";
  int max_q_weight = 8;
  int max_lambda_weight = 6;
  int max_r = 3;
  int max_nu_weight = 0;
  std::string out_file;
  int d = 0;
  int r = 1;
  int n_bound = 0;
  bool drop_negative_top = false;
  int max_t_weight = 6;
  std::string suite = "all";
};

fs::path cache_root(const RunConfig& cfg) {
  if (!cfg.cache_dir.empty()) return cfg.cache_dir;
  if (const char* env = std::getenv("HURWITZ_CACHE_DIR"); env && *env) return env;
  return ".hurwitz-cache";
}

fs::path table_file(const RunConfig& cfg) { return cache_root(cfg) / "xtable.json"; }

Partition partition_arg(const std::vector<int>& parts, const char* flag) {
  if (parts.empty()) throw UsageError(std::string(flag) + " must list at least one part");
  for (int x : parts)
    if (x < 1) throw UsageError(std::string(flag) + " parts must be positive");
  return Partition(parts);
}

std::string monomial_text(const Monomial& m) {
  std::string s;
  // highest index first, matching partition order
  auto f = m.factors();
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    if (!s.empty()) s += "*";
    s += to_string(it->first);
    if (it->second > 1) s += "^" + std::to_string(it->second);
  }
  return s.empty() ? "1" : s;
}

// q-series rows ordered by q-weight, then reverse lexicographic partition
void write_q_series(std::ostream& out, const GradedSeries& s, const std::string& format) {
  if (format == "json") {
    out << io::to_json(s).dump(1) << "\n";
    return;
  }
  std::vector<std::pair<Partition, Rational>> rows;
  for (const auto& [m, c] : s.terms()) {
    std::vector<int> parts;
    for (const auto& [v, e] : m.factors())
      for (int k = 0; k < e; ++k) parts.push_back(v.i);
    rows.emplace_back(Partition(parts), c);
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first.weight() != b.first.weight()) return a.first.weight() < b.first.weight();
    return reverse_lex_less(a.first, b.first);
  });
  if (format == "csv") out << "monomial,coeff\n";
  for (const auto& [p, c] : rows) {
    std::vector<Monomial::Factor> f;
    for (int x : p.parts()) f.emplace_back(VarId::q(x), 1);
    const std::string mono = p.empty() ? "1" : monomial_text(Monomial(std::move(f)));
    out << mono << (format == "csv" ? "," : " ") << to_string(c) << "\n";
  }
}

int cmd_compute_hurwitz(const RunConfig& cfg, std::ostream& out) {
  const Partition lambda = partition_arg(cfg.lambda, "--lambda");
  const Partition mu = partition_arg(cfg.mu, "--mu");
  out << to_string(hurwitz_number(parse_method(cfg.method), cfg.genus, lambda, mu)) << "\n";
  return 0;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const OracleResult r = oracle_count(cfg.genus, partition_arg(cfg.lambda, "--lambda"), partition_arg(cfg.mu, "--mu"));
  out << "literal " << to_string(r.literal) << "\n"
      << "calibrated " << to_string(r.calibrated) << "\n"
      << "raw " << r.raw_count.get_str() << "\n";
  return 0;
}

int cmd_h_series(const RunConfig& cfg, std::ostream& out) {
  write_q_series(out, h_lambda_series(partition_arg(cfg.lambda, "--lambda"), cfg.max_q_weight), cfg.format);
  return 0;
}

int cmd_h_poly(const RunConfig& cfg, std::ostream& out) {
  RecursionEngine engine;
  engine.load(table_file(cfg));
  const std::size_t before = engine.size();
  const ZPoly p = engine.compute(XKey::from_partition(partition_arg(cfg.lambda, "--lambda")));
  if (engine.size() != before) engine.save(table_file(cfg));
  if (cfg.format == "json") out << io::to_json(p).dump() << "\n";
  else out << to_string(p) << "\n";
  return 0;
}

int cmd_x_table(const RunConfig& cfg, std::ostream& out) {
  RecursionEngine engine;
  engine.load(table_file(cfg));
  engine.compute_all(cfg.max_lambda_weight, cfg.max_r, cfg.max_nu_weight);
  const fs::path target = cfg.out_file.empty() ? table_file(cfg) : fs::path(cfg.out_file);
  engine.save(target);
  out << "wrote " << engine.size() << " entries to " << target.string() << "\n";
  return 0;
}

int cmd_z_series(const RunConfig& cfg, std::ostream& out) {
  ZSeriesOptions opts{cfg.max_q_weight, std::nullopt, cfg.drop_negative_top};
  if (cfg.n_bound > 0) opts.n_bound = cfg.n_bound;
  write_q_series(out, z_series(cfg.d, cfg.r, opts), cfg.format);
  return 0;
}

int cmd_kp_check(const RunConfig& cfg, std::ostream& out) {
  const PsiLaurentSeries res = kp_residual(cfg.max_t_weight);
  if (res.is_zero()) {
    out << "pass kp residual vanishes up to t-weight " << cfg.max_t_weight << "\n";
    return 0;
  }
  const auto& [m, c] = *res.body.terms().begin();
  out << "fail first offending monomial " << to_string(m) << " coeff " << to_string(c) << " psi_shift "
      << res.psi_shift << "\n";
  return 1;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> names;
  if (cfg.suite == "all") names = suite_names();
  else names.push_back(cfg.suite);
  VerifyContext ctx;
  ctx.engine.load(table_file(cfg));
  bool ok = true;
  io::Json all = io::Json::array();
  for (const auto& name : names) {
    SuiteReport rep;
    try {
      rep = run_suite(name, ctx);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    ok = ok && rep.passed();
    if (cfg.format == "json") {
      all.push_back(to_json(rep));
    } else {
      std::size_t passed = 0;
      for (const auto& c : rep.checks) passed += c.ok;
      out << "suite " << rep.suite << ": " << passed << "/" << rep.checks.size() << " pass\n";
      for (const auto& c : rep.checks)
        out << "  " << (c.ok ? "pass " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
    }
  }
  if (cfg.format == "json") out << (names.size() == 1 ? all[0] : all).dump(1) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact genus-0 double Hurwitz numbers", "hurwitz"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--cache-dir", cfg.cache_dir, "Table cache directory (env HURWITZ_CACHE_DIR)");

  auto profile_opts = [&](CLI::App* sub) {
    sub->add_option("--genus", cfg.genus)->check(CLI::NonNegativeNumber);
    sub->add_option("--lambda", cfg.lambda)->delimiter(',')->required();
    sub->add_option("--mu", cfg.mu)->delimiter(',')->required();
  };
  const std::vector<std::string> series_formats{"json", "csv", "pretty"};

  auto* ch = app.add_subcommand("compute-hurwitz", "Hurwitz number by oracle, frobenius or cutjoin");
  profile_opts(ch);
  ch->add_option("--method", cfg.method)->check(CLI::IsMember({"oracle", "frobenius", "cutjoin"}));

  auto* orc = app.add_subcommand("oracle", "Brute-force factorization count");
  profile_opts(orc);

  auto* hs = app.add_subcommand("h-series", "h_lambda(q) from the cut-and-join potential");
  hs->add_option("--lambda", cfg.lambda)->delimiter(',')->required();
  hs->add_option("--max-q-weight", cfg.max_q_weight)->check(CLI::PositiveNumber);
  hs->add_option("--format", cfg.format)->check(CLI::IsMember(series_formats));

  auto* hp = app.add_subcommand("h-poly", "h_lambda as a polynomial in z_{d,r}");
  hp->add_option("--lambda", cfg.lambda)->delimiter(',')->required();
  hp->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "pretty"}));

  auto* xt = app.add_subcommand("x-table", "Fill and persist the correlator table");
  xt->add_option("--max-lambda-weight", cfg.max_lambda_weight)->check(CLI::PositiveNumber);
  xt->add_option("--max-r", cfg.max_r)->check(CLI::PositiveNumber);
  xt->add_option("--max-nu-weight", cfg.max_nu_weight)->check(CLI::NonNegativeNumber);
  xt->add_option("--out", cfg.out_file);

  auto* zs = app.add_subcommand("z-series", "Generator series z_{d,r}(q)");
  zs->add_option("--d", cfg.d)->check(CLI::NonNegativeNumber);
  zs->add_option("--r", cfg.r)->check(CLI::PositiveNumber);
  zs->add_option("--max-q-weight", cfg.max_q_weight)->check(CLI::PositiveNumber);
  zs->add_option("--n-bound", cfg.n_bound)->check(CLI::PositiveNumber);
  zs->add_flag("--drop-negative-top", cfg.drop_negative_top, "Zero the terms with n+r-3 < 0 and d >= 1");
  zs->add_option("--format", cfg.format)->check(CLI::IsMember(series_formats));

  auto* kp = app.add_subcommand("kp-check", "First scaled KP equation on R");
  kp->add_option("--max-t-weight", cfg.max_t_weight)->check(CLI::Range(4, 64));

  auto* vf = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  vf->add_option("--suite", cfg.suite)->check(CLI::IsMember(suites));
  vf->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "pretty"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: usage: " << msg << "\n";
    return 2;
  }

  try {
    if (*ch) return cmd_compute_hurwitz(cfg, out);
    if (*orc) return cmd_oracle(cfg, out);
    if (*hs) return cmd_h_series(cfg, out);
    if (*hp) return cmd_h_poly(cfg, out);
    if (*xt) return cmd_x_table(cfg, out);
    if (*zs) return cmd_z_series(cfg, out);
    if (*kp) return cmd_kp_check(cfg, out);
    if (*vf) return cmd_verify(cfg, out);
  } catch (const ResourceError& e) {
    err << "error: resource: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: usage: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace hurwitz
