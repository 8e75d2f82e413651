// Command-line front end: exact moment tables, asymptotic constants,
// Bessel-based predictors, and the verification suites. All output is
// deterministic; exact quantities are printed as integers or num/den
// rationals, floats only in prediction and convergence columns.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rankcrank/bessel.hpp"
#include "rankcrank/constants.hpp"
#include "rankcrank/moments.hpp"
#include "rankcrank/predict.hpp"
#include "rankcrank/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace rankcrank;

struct Config {
  std::string kind = "crank";
  long k = 0;
  long k_max = -1;
  long n = -1;
  long n_max = -1;
  std::vector<long> n_list;
  int terms = 0;  // 0 = pick the full predictor for the kind
  long precision_bits = 256;
  std::string format;
  std::string out;
};

void write_output(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + cfg.out);
  f << text;
}

std::string default_format(const std::string& subcommand) {
  if (subcommand == "constants" || subcommand == "verify") return "json";
  return "csv";
}

std::string resolve_format(const Config& cfg, const std::string& subcommand) {
  std::string f = cfg.format.empty() ? default_format(subcommand) : cfg.format;
  if (f != "csv" && f != "json") throw std::invalid_argument("unknown format: " + f);
  return f;
}

std::vector<long> resolve_n_list(const Config& cfg, bool allow_n_max) {
  if (!cfg.n_list.empty()) return cfg.n_list;
  if (cfg.n >= 1) return {cfg.n};
  if (allow_n_max && cfg.n_max >= 1) {
    std::vector<long> v;
    for (long i = 1; i <= cfg.n_max; ++i) v.push_back(i);
    return v;
  }
  throw std::invalid_argument("need --n, --n-list or --n-max");
}

int resolve_terms(const Config& cfg, PredKind kind) {
  if (cfg.terms != 0) return cfg.terms;
  return (kind == PredKind::crank || kind == PredKind::rank) ? 2 : 1;
}

std::vector<Int> moment_values(const std::string& kind, long k, long T) {
  if (kind == "crank") return moment_from_table(crank_bivariate(T), StatKind::crank, 2 * k).values;
  if (kind == "rank") return moment_from_table(rank_bivariate(T), StatKind::rank, 2 * k).values;
  if (kind == "diff") return diff_table(k, T).values;
  if (kind == "partition") return partition_counts(T);
  throw std::invalid_argument("unknown kind: " + kind);
}

int run_moments(const Config& cfg) {
  long T = (cfg.n_max >= 0) ? cfg.n_max : 500;
  auto values = moment_values(cfg.kind, cfg.k, T);
  std::string fmt = resolve_format(cfg, "moments");
  if (fmt == "csv") {
    std::string text = "n,value\n";
    for (long n = 0; n <= T; ++n) {
      text += std::to_string(n) + "," + to_string(values[static_cast<size_t>(n)]) + "\n";
    }
    write_output(cfg, text);
  } else {
    ordered_json j;
    j["kind"] = cfg.kind;
    j["k"] = cfg.k;
    j["n_max"] = T;
    j["values"] = ordered_json::array();
    for (long n = 0; n <= T; ++n) {
      j["values"].push_back({{"n", n}, {"value", to_string(values[static_cast<size_t>(n)])}});
    }
    write_output(cfg, j.dump(2) + "\n");
  }
  return 0;
}

int run_constants(const Config& cfg) {
  if (cfg.k_max < 0) throw std::invalid_argument("constants: --k-max is required");
  std::string fmt = resolve_format(cfg, "constants");
  if (fmt == "csv") {
    std::string text = "k,xi,xi_prime,xi_tilde,lambda_tilde,alpha,beta_coeff\n";
    for (long k = 0; k <= cfg.k_max; ++k) {
      ConstantSet s = constant_set(k);
      text += std::to_string(k) + "," + to_string(s.xi) + "," + to_string(s.xi_prime) + "," +
              to_string(s.xi_tilde) + "," + to_string(s.lambda_tilde) + "," + to_string(s.alpha) +
              "," + to_string(s.beta_coeff) + "\n";
    }
    write_output(cfg, text);
  } else {
    ordered_json arr = ordered_json::array();
    for (long k = 0; k <= cfg.k_max; ++k) {
      ConstantSet s = constant_set(k);
      arr.push_back({{"k", k},
                     {"xi", to_string(s.xi)},
                     {"xi_prime", to_string(s.xi_prime)},
                     {"xi_tilde", to_string(s.xi_tilde)},
                     {"lambda_tilde", to_string(s.lambda_tilde)},
                     {"alpha", to_string(s.alpha)},
                     {"beta_coeff", to_string(s.beta_coeff)}});
    }
    write_output(cfg, arr.dump(2) + "\n");
  }
  return 0;
}

int run_predict(const Config& cfg) {
  PredKind kind = pred_kind_from_string(cfg.kind);
  int terms = resolve_terms(cfg, kind);
  auto ns = resolve_n_list(cfg, false);
  std::string fmt = resolve_format(cfg, "predict");
  if (fmt == "csv") {
    std::string text = "n,value\n";
    for (long n : ns) {
      Prediction p = predict(kind, cfg.k, n, terms, cfg.precision_bits);
      text += std::to_string(n) + "," + p.value.str() + "\n";
    }
    write_output(cfg, text);
  } else {
    ordered_json j;
    j["kind"] = cfg.kind;
    j["k"] = cfg.k;
    j["terms"] = terms;
    j["precision_bits"] = cfg.precision_bits;
    j["values"] = ordered_json::array();
    for (long n : ns) {
      Prediction p = predict(kind, cfg.k, n, terms, cfg.precision_bits);
      j["values"].push_back({{"n", n}, {"value", p.value.str()}});
    }
    write_output(cfg, j.dump(2) + "\n");
  }
  return 0;
}

// Side-by-side exact vs predicted. Reuses the convergence metrics; the
// trend verdict is ignored here, only the rows are emitted.
int run_table(const Config& cfg) {
  PredKind kind = pred_kind_from_string(cfg.kind);
  auto ns = resolve_n_list(cfg, true);
  long max_n = *std::max_element(ns.begin(), ns.end());
  auto exact = exact_values_for(kind, cfg.k, max_n);
  VerdictReport rep = convergence_report_values(kind, cfg.k, exact, ns, cfg.precision_bits);
  std::string fmt = resolve_format(cfg, "table");
  if (fmt == "csv") {
    write_output(cfg, rep.metrics_csv());
  } else {
    ordered_json j;
    j["kind"] = cfg.kind;
    j["k"] = cfg.k;
    j["rows"] = ordered_json::array();
    for (const auto& m : rep.metrics()) {
      j["rows"].push_back({{"n", m.n},
                           {"exact", m.exact},
                           {"pred1", m.pred1},
                           {"pred2", m.pred2},
                           {"rel_err", m.rel_err},
                           {"scaled_remainder", m.scaled_remainder}});
    }
    write_output(cfg, j.dump(2) + "\n");
  }
  return 0;
}

int emit_reports(const Config& cfg, const std::vector<VerdictReport>& reports) {
  std::string fmt = resolve_format(cfg, "verify");
  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass();
  if (fmt == "json") {
    if (reports.size() == 1) {
      write_output(cfg, reports[0].to_json().dump(2) + "\n");
    } else {
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) arr.push_back(r.to_json());
      write_output(cfg, arr.dump(2) + "\n");
    }
  } else {
    // csv: metrics table when present, otherwise check,status lines
    std::string text;
    for (const auto& r : reports) {
      if (!r.metrics().empty()) {
        text += r.metrics_csv();
      } else {
        text += r.check_name() + "," + (r.pass() ? "pass" : "fail") + "\n";
      }
    }
    write_output(cfg, text);
  }
  return all_pass ? 0 : 1;
}

int run_verify_pde(const Config& cfg) {
  long k_max = (cfg.k_max >= 1) ? cfg.k_max : std::max<long>(cfg.k, 1);
  long k_min = (cfg.k >= 1 && cfg.k_max < 1) ? cfg.k : 1;
  long T = (cfg.n_max >= 0) ? cfg.n_max : 100;
  auto crank_gf = crank_moment_series_all(k_max, T);
  BiSeries rank_t = rank_bivariate(T);
  std::vector<QSeries> rank_gf;
  for (long j = 0; j <= k_max; ++j) {
    rank_gf.push_back(to_qseries(moment_from_table(rank_t, StatKind::rank, 2 * j)));
  }
  std::vector<VerdictReport> reports;
  for (long k = k_min; k <= k_max; ++k) reports.push_back(verify_pde_given(crank_gf, rank_gf, k, T));
  return emit_reports(cfg, reports);
}

int run_verify_inequality(const Config& cfg) {
  long k_max = (cfg.k_max >= 1) ? cfg.k_max : 5;
  long T = (cfg.n_max >= 0) ? cfg.n_max : 500;
  return emit_reports(cfg, {verify_inequality(k_max, T)});
}

int run_verify_identities(const Config& cfg) {
  long T = (cfg.n_max >= 0) ? cfg.n_max : 300;
  return emit_reports(cfg, {verify_exact_identities(T)});
}

int run_verify_constants(const Config& cfg) { return emit_reports(cfg, {verify_constants()}); }

int run_verify_convergence(const Config& cfg) {
  PredKind kind = pred_kind_from_string(cfg.kind);
  std::vector<long> ns = cfg.n_list.empty() ? std::vector<long>{100, 200, 400} : cfg.n_list;
  return emit_reports(cfg, {convergence_report(kind, cfg.k, ns, cfg.precision_bits)});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact partition rank/crank moment tables, their asymptotic "
               "constants and Bessel-based predictors, and verification suites."};
  app.require_subcommand(1);

  Config cfg;
  int selected = 0;  // 1 moments, 2 constants, 3 predict, 4 table, 10.. verify
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "output format: csv or json");
    cmd->add_option("--out", cfg.out, "output path (default: stdout)");
  };

  CLI::App* moments = app.add_subcommand("moments", "exact moment table M_{2k}/N_{2k}/D_{2k}");
  moments->add_option("--kind", cfg.kind, "crank|rank|diff|partition")->required();
  moments->add_option("--k", cfg.k, "half-order k (moment order 2k)");
  moments->add_option("--n-max", cfg.n_max, "table size T (default 500)");
  add_common(moments);
  moments->callback([&] { selected = 1; });

  CLI::App* constants = app.add_subcommand("constants", "asymptotic constants per k");
  constants->add_option("--k-max", cfg.k_max, "largest half-order")->required();
  add_common(constants);
  constants->callback([&] { selected = 2; });

  CLI::App* pred = app.add_subcommand("predict", "asymptotic predictor values");
  pred->add_option("--kind", cfg.kind, "crank|rank|diff|partition")->required();
  pred->add_option("--k", cfg.k, "half-order k");
  pred->add_option("--n", cfg.n, "single n");
  pred->add_option("--n-list", cfg.n_list, "comma-separated n values")->delimiter(',');
  pred->add_option("--terms", cfg.terms, "1 or 2 (default: full predictor for the kind)");
  pred->add_option("--precision-bits", cfg.precision_bits, "working precision (>= 64)");
  add_common(pred);
  pred->callback([&] { selected = 3; });

  CLI::App* table = app.add_subcommand("table", "side-by-side exact vs predicted");
  table->add_option("--kind", cfg.kind, "crank|rank|diff|partition")->required();
  table->add_option("--k", cfg.k, "half-order k");
  table->add_option("--n-list", cfg.n_list, "comma-separated n values")->delimiter(',');
  table->add_option("--n-max", cfg.n_max, "use n = 1..n_max");
  table->add_option("--precision-bits", cfg.precision_bits, "working precision (>= 64)");
  add_common(table);
  table->callback([&] { selected = 4; });

  CLI::App* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);

  CLI::App* vpde = verify->add_subcommand("pde", "rank-crank PDE, coefficientwise");
  vpde->add_option("--k-max", cfg.k_max, "check k = 1..k_max");
  vpde->add_option("--k", cfg.k, "single k");
  vpde->add_option("--n-max", cfg.n_max, "truncation order T (default 100)");
  add_common(vpde);
  vpde->callback([&] { selected = 10; });

  CLI::App* vineq = verify->add_subcommand("inequality", "M_{2k}(n) > N_{2k}(n) for n >= 2");
  vineq->add_option("--k-max", cfg.k_max, "check k = 1..k_max (default 5)");
  vineq->add_option("--n-max", cfg.n_max, "largest n (default 500)");
  add_common(vineq);
  vineq->callback([&] { selected = 11; });

  CLI::App* vident = verify->add_subcommand("identities", "exact identity suite");
  vident->add_option("--n-max", cfg.n_max, "largest n (default 300)");
  add_common(vident);
  vident->callback([&] { selected = 12; });

  CLI::App* vconst = verify->add_subcommand("constants", "recurrences vs closed forms");
  add_common(vconst);
  vconst->callback([&] { selected = 13; });

  CLI::App* vconv = verify->add_subcommand("convergence", "predictor convergence trends");
  vconv->add_option("--kind", cfg.kind, "crank|rank|diff|partition")->required();
  vconv->add_option("--k", cfg.k, "half-order k");
  vconv->add_option("--n-list", cfg.n_list, "comma-separated n values (default 100,200,400)")
      ->delimiter(',');
  vconv->add_option("--precision-bits", cfg.precision_bits, "working precision (>= 64)");
  add_common(vconv);
  vconv->callback([&] { selected = 14; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  }

  try {
    switch (selected) {
      case 1: return run_moments(cfg);
      case 2: return run_constants(cfg);
      case 3: return run_predict(cfg);
      case 4: return run_table(cfg);
      case 10: return run_verify_pde(cfg);
      case 11: return run_verify_inequality(cfg);
      case 12: return run_verify_identities(cfg);
      case 13: return run_verify_constants(cfg);
      case 14: return run_verify_convergence(cfg);
      default: break;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  std::cerr << app.help() << std::flush;
  return 2;
}
