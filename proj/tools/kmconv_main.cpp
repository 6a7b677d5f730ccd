// Command-line front end.  One subcommand per library operation; JSON job
// configs in, CSV tables or JSON reports out.  Exit codes: 0 success,
// 1 domain error (error name on stderr), 2 malformed config or usage.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kmconv/cartan.hpp"
#include "kmconv/config.hpp"
#include "kmconv/eisenstein.hpp"
#include "kmconv/errors.hpp"
#include "kmconv/lattice.hpp"
#include "kmconv/property.hpp"
#include "kmconv/report.hpp"
#include "kmconv/special.hpp"
#include "kmconv/weyl.hpp"

namespace {

using namespace kmconv;

std::string join_rationals(RatVec const& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += rational_string(v[i]);
  }
  return out;
}

std::string join_ints(IntVec const& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) {
      out += ":";
    }
    out += v[i].str();
  }
  return out;
}

std::string cone_name(ConeClass c) {
  switch (c) {
    case ConeClass::interior:
      return "interior";
    case ConeClass::boundary:
      return "boundary";
    case ConeClass::outside_presumed:
      return "outside_presumed";
  }
  return "?";
}

void emit_json(OrderedJson const& doc) { std::cout << doc.dump(2) << "\n"; }

WeightVector const& require_lambda(JobConfig const& cfg) {
  if (!cfg.lambda) {
    throw ConfigError("lambda: required by this operation");
  }
  return *cfg.lambda;
}

WeightVector const& require_mu(JobConfig const& cfg) {
  if (!cfg.mu) {
    throw ConfigError("mu: required by this operation");
  }
  return *cfg.mu;
}

PointH const& require_point(JobConfig const& cfg) {
  if (!cfg.point) {
    throw ConfigError("point: required by this operation");
  }
  return *cfg.point;
}

int resolve_max_length(std::optional<int> const& flag, JobConfig const& cfg,
                       char const* flag_name) {
  if (flag) {
    return *flag;
  }
  if (cfg.max_length) {
    return *cfg.max_length;
  }
  throw ConfigError(std::string("max_length: set it in the config or pass ") +
                    flag_name);
}

unsigned resolve_digits(std::optional<unsigned> const& flag, JobConfig const& cfg) {
  if (!flag) {
    return cfg.precision_digits;
  }
  if (*flag < 10) {
    throw ConfigError("--digits: must be at least 10");
  }
  return *flag;
}

// ---- validate ----------------------------------------------------------

void run_validate(std::string const& config_path) {
  JobConfig cfg = load_job_config(config_path);
  CartanMatrix const& cm = cfg.cartan;

  OrderedJson doc;
  doc["matrix"] = matrix_json(cm);
  doc["rank"] = cm.rank();
  OrderedJson sym = OrderedJson::array();
  for (int i = 1; i <= cm.rank(); ++i) {
    sym.push_back(cm.symmetrizer(i).str());
  }
  doc["symmetrizer"] = sym;
  doc["determinant"] = cm.det().str();
  std::vector<int> everything(cm.rank());
  for (int i = 0; i < cm.rank(); ++i) {
    everything[i] = i + 1;
  }
  doc["finite_type"] = cm.is_finite_type(everything);
  OrderedJson gram = OrderedJson::array();
  RatMat g = cm.bilinear_gram();
  for (auto const& row : g) {
    OrderedJson r = OrderedJson::array();
    for (auto const& x : row) {
      r.push_back(rational_string(x));
    }
    gram.push_back(r);
  }
  doc["gram"] = gram;

  if (cfg.lambda) {
    SpectralParameter par = SpectralParameter::make(cm, *cfg.lambda);
    OrderedJson l;
    l["coroot_pairings"] = rationals_json(par.lambda.pairings);
    l["godement"] = par.godement;
    doc["lambda"] = l;
  }
  if (cfg.point) {
    TitsReduction red = tits_reduce(cm, *cfg.point, cfg.caps.tits_cap);
    OrderedJson p;
    p["alpha_values"] = rationals_json(cfg.point->values);
    p["tits_classification"] = cone_name(red.classification);
    p["dominant_representative"] = rationals_json(red.dominant.values);
    p["reduction_length"] = static_cast<long>(red.word.size());
    doc["point"] = p;
  }
  emit_json(doc);
}

// ---- roots -------------------------------------------------------------

void run_roots(std::string const& config_path, int max_height) {
  JobConfig cfg = load_job_config(config_path);
  CartanMatrix const& cm = cfg.cartan;
  auto roots = positive_roots_up_to_height(cm, max_height);

  std::cout << "# matrix: " << matrix_json(cm).dump() << "\n";
  std::cout << "# max_height: " << max_height << "\n";
  std::cout << "# positive roots only; negatives are their mirror images\n";
  std::cout << "height,coords,class,norm\n";
  for (auto const& r : roots) {
    RootClass cls = classify_root(cm, r);
    std::cout << height(r).str() << "," << join_ints(r.coords) << ","
              << (cls == RootClass::real ? "real" : "imaginary") << ","
              << rational_string(norm(cm, r)) << "\n";
  }
}

// ---- weyl --------------------------------------------------------------

void run_weyl(std::string const& config_path, std::optional<int> max_length_flag,
              bool count_only) {
  JobConfig cfg = load_job_config(config_path);
  CartanMatrix const& cm = cfg.cartan;
  int max_length = resolve_max_length(max_length_flag, cfg, "--max-length");

  OrderedJson doc;
  doc["matrix"] = matrix_json(cm);
  doc["max_length"] = max_length;
  OrderedJson shells = OrderedJson::array();
  bool exhausted = false;
  ShellEnumerator en(cm);
  long total = 0;
  for (int l = 0; l <= max_length; ++l) {
    if (l > 0 && !en.advance()) {
      exhausted = true;
      break;
    }
    OrderedJson shell;
    shell["length"] = l;
    shell["count"] = static_cast<long>(en.shell().size());
    total += static_cast<long>(en.shell().size());
    if (!count_only) {
      OrderedJson elems = OrderedJson::array();
      for (auto const& w : en.shell()) {
        elems.push_back(word_json(w.word()));
      }
      shell["elements"] = elems;
    }
    shells.push_back(shell);
  }
  doc["shells"] = shells;
  doc["total"] = total;
  doc["exhausted"] = exhausted;
  emit_json(doc);
}

// ---- property ----------------------------------------------------------

void run_property_check(std::string const& config_path,
                        std::optional<int> max_length_flag) {
  JobConfig cfg = load_job_config(config_path);
  int max_length = resolve_max_length(max_length_flag, cfg, "--max-length");
  PropertyReport report = check_property(cfg.cartan, max_length);
  emit_json(property_report_json(cfg.cartan, report));
}

void run_property_admissible(std::string const& config_path, Word const& word) {
  JobConfig cfg = load_job_config(config_path);
  WeylElement w = WeylElement::from_word(cfg.cartan, word);
  Word adm = admissible_word(cfg.cartan, w);
  OrderedJson doc;
  doc["matrix"] = matrix_json(cfg.cartan);
  doc["word"] = word_json(word);
  doc["admissible_word"] = word_json(adm);
  emit_json(doc);
}

// ---- constant-term / dominating ----------------------------------------

void run_constant_term(std::string const& config_path,
                       std::optional<int> max_length_flag, bool force,
                       unsigned threads, std::optional<unsigned> digits_flag) {
  JobConfig cfg = load_job_config(config_path);
  CartanMatrix const& cm = cfg.cartan;
  int max_length = resolve_max_length(max_length_flag, cfg, "--max-length");
  unsigned digits = resolve_digits(digits_flag, cfg);
  PrecisionContext ctx = PrecisionContext::make(digits);

  SpectralParameter par = SpectralParameter::make(cm, require_lambda(cfg));
  PointH const& x = require_point(cfg);

  EvalOptions opts;
  opts.force = force;
  opts.threads = threads;
  opts.tits_cap = cfg.caps.tits_cap;
  ShellTable table = constant_term(cm, par, x, max_length, ctx, opts);

  std::vector<std::pair<std::string, std::string>> meta;
  meta.emplace_back("operation", "constant-term");
  meta.emplace_back("matrix", matrix_json(cm).dump());
  meta.emplace_back("lambda", join_rationals(par.lambda.pairings));
  meta.emplace_back("point", join_rationals(x.values));
  meta.emplace_back("digits", std::to_string(digits));
  meta.emplace_back("max_length", std::to_string(max_length));
  meta.emplace_back("godement", par.godement ? "yes" : "no");
  meta.emplace_back("tits", opts.tits_classification);
  if (force && !par.godement) {
    meta.emplace_back("warning",
                      "lambda is outside the Godement range; the series has no "
                      "convergence guarantee");
  }
  if (force && opts.tits_classification != "interior") {
    meta.emplace_back("warning",
                      "point not certified interior to the Tits cone");
  }
  write_shell_table_csv(std::cout, table, meta, digits);
}

void run_dominating(std::string const& config_path, std::optional<std::string> m_flag,
                    std::optional<int> max_length_flag, bool force, unsigned threads,
                    std::optional<unsigned> digits_flag) {
  JobConfig cfg = load_job_config(config_path);
  CartanMatrix const& cm = cfg.cartan;
  int max_length = resolve_max_length(max_length_flag, cfg, "--max-length");
  unsigned digits = resolve_digits(digits_flag, cfg);
  PrecisionContext ctx = PrecisionContext::make(digits);

  std::string m_text;
  if (m_flag) {
    m_text = *m_flag;
  } else if (cfg.big_m) {
    m_text = *cfg.big_m;
  } else {
    throw ConfigError("M: set it in the config or pass --M");
  }

  WeightVector const& lambda = require_lambda(cfg);
  PointH const& x = require_point(cfg);

  EvalOptions opts;
  opts.force = force;
  opts.threads = threads;
  opts.tits_cap = cfg.caps.tits_cap;

  ShellTable table;
  {
    PrecisionScope scope(ctx);
    Real M = real_from_decimal(m_text);
    table = dominating_series(cm, lambda, x, M, max_length, ctx, opts);
  }

  std::vector<std::pair<std::string, std::string>> meta;
  meta.emplace_back("operation", "dominating");
  meta.emplace_back("matrix", matrix_json(cm).dump());
  meta.emplace_back("lambda", join_rationals(lambda.pairings));
  meta.emplace_back("point", join_rationals(x.values));
  meta.emplace_back("M", m_text);
  meta.emplace_back("digits", std::to_string(digits));
  meta.emplace_back("max_length", std::to_string(max_length));
  meta.emplace_back("tits", opts.tits_classification);
  if (force && opts.tits_classification != "interior") {
    meta.emplace_back("warning",
                      "point not certified interior to the Tits cone");
  }
  write_shell_table_csv(std::cout, table, meta, digits);
}

// ---- looijenga ---------------------------------------------------------

void run_looijenga(std::string const& config_path, std::optional<std::string> n_flag,
                   std::optional<int> cap_flag) {
  JobConfig cfg = load_job_config(config_path);
  CartanMatrix const& cm = cfg.cartan;
  WeightVector const& mu = require_mu(cfg);
  PointH const& x = require_point(cfg);

  Rat N;
  if (n_flag) {
    try {
      N = parse_rational(*n_flag);
    } catch (std::invalid_argument const& e) {
      throw ConfigError(std::string("--N: ") + e.what());
    }
  } else if (cfg.big_n) {
    N = *cfg.big_n;
  } else {
    throw ConfigError("N: set it in the config or pass --N");
  }

  int cap_length = 0;
  if (cap_flag) {
    cap_length = *cap_flag;
  } else if (cfg.max_length) {
    cap_length = *cfg.max_length;
  } else {
    throw ConfigError("cap length: set max_length in the config or pass --cap-length");
  }

  OrbitCount oc = looijenga_count(cm, mu, x, N, cap_length);
  OrderedJson doc;
  doc["matrix"] = matrix_json(cm);
  doc["mu"] = rationals_json(mu.pairings);
  doc["point"] = rationals_json(x.values);
  doc["N"] = rational_string(N);
  doc["cap_length"] = cap_length;
  doc["count"] = oc.count;
  doc["max_length_reached"] = oc.max_length_reached;
  doc["exhausted"] = oc.exhausted;
  emit_json(doc);
}

// ---- analytic one-offs ---------------------------------------------------

void run_rank1(std::string const& s_text, std::string const& a_text,
               std::string const& x_text, unsigned digits) {
  PrecisionContext ctx = PrecisionContext::make(digits);
  PrecisionScope scope(ctx);
  Real s = real_from_decimal(s_text);
  Real a = real_from_decimal(a_text);
  Real x0 = real_from_decimal(x_text);
  Rank1Bound b = rank1_sum_bound(s, a, x0, ctx);
  OrderedJson doc;
  doc["s"] = s_text;
  doc["a_alpha"] = a_text;
  doc["x0"] = x_text;
  doc["digits"] = digits;
  doc["lhs"] = format_real_sci(b.lhs, digits);
  doc["rhs"] = format_real_sci(b.rhs, digits);
  doc["tail_bound"] = format_real_sci(b.tail_bound, digits);
  doc["holds"] = b.holds;
  emit_json(doc);
}

void run_zeta_ratio(std::string const& s_text, unsigned digits) {
  PrecisionContext ctx = PrecisionContext::make(digits);
  PrecisionScope scope(ctx);
  Real s = real_from_decimal(s_text);
  std::cout << format_real_gen(xi_ratio(s, ctx), digits) << "\n";
}

void run_c_infinity(std::string const& s_text, unsigned digits) {
  PrecisionContext ctx = PrecisionContext::make(digits);
  PrecisionScope scope(ctx);
  Real s = real_from_decimal(s_text);
  std::cout << format_real_gen(c_infinity(s, ctx), digits) << "\n";
}

// ---- verify-certificate --------------------------------------------------

int run_verify_certificate(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open certificate file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  CertificateVerdict verdict = verify_certificate(buf.str());
  emit_json(certificate_verdict_json(verdict));
  return verdict.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root systems, Weyl shells and convergence tables for "
               "symmetrizable Kac-Moody data"};
  app.require_subcommand(1);

  std::string config_path;
  std::string cert_path;
  int max_height = 0;
  std::optional<int> max_length_flag;
  std::optional<int> cap_flag;
  std::optional<unsigned> digits_flag;
  std::optional<std::string> m_flag;
  std::optional<std::string> n_flag;
  bool count_only = false;
  bool force = false;
  unsigned threads = 1;
  Word word;
  std::string s_text;
  std::string a_text = "1";
  std::string x_text = "0";
  unsigned digits = 30;

  int exit_code = 0;

  auto* validate = app.add_subcommand("validate", "Validate a job config");
  validate->add_option("config", config_path, "job config (JSON)")->required();
  validate->callback([&] { run_validate(config_path); });

  auto* roots = app.add_subcommand("roots", "List positive roots up to a height");
  roots->add_option("config", config_path, "job config (JSON)")->required();
  roots->add_option("--max-height", max_height, "height bound")->required();
  roots->callback([&] { run_roots(config_path, max_height); });

  auto* weyl = app.add_subcommand("weyl", "Enumerate Weyl group shells");
  weyl->add_option("config", config_path, "job config (JSON)")->required();
  weyl->add_option("--max-length", max_length_flag, "length bound");
  weyl->add_flag("--count-only", count_only, "omit element listings");
  weyl->callback([&] { run_weyl(config_path, max_length_flag, count_only); });

  auto* prop = app.add_subcommand("property", "Decomposition-property checks");
  prop->require_subcommand(1);
  auto* prop_check = prop->add_subcommand("check", "Check all elements up to a length");
  prop_check->add_option("config", config_path, "job config (JSON)")->required();
  prop_check->add_option("--max-length", max_length_flag, "length bound");
  prop_check->callback([&] { run_property_check(config_path, max_length_flag); });
  auto* prop_adm = prop->add_subcommand("admissible", "Find an admissible word");
  prop_adm->add_option("config", config_path, "job config (JSON)")->required();
  prop_adm->add_option("--word", word, "reduced word, comma separated")
      ->required()
      ->delimiter(',');
  prop_adm->callback([&] { run_property_admissible(config_path, word); });

  auto* cterm = app.add_subcommand("constant-term",
                                   "Shell table of the constant-term series");
  cterm->add_option("config", config_path, "job config (JSON)")->required();
  cterm->add_option("--max-length", max_length_flag, "length bound");
  cterm->add_flag("--force", force, "skip the convergence-domain gates");
  cterm->add_option("--threads", threads, "worker cap");
  cterm->add_option("--digits", digits_flag, "decimal digits");
  cterm->callback([&] {
    run_constant_term(config_path, max_length_flag, force, threads, digits_flag);
  });

  auto* dom = app.add_subcommand("dominating",
                                 "Shell table of the dominating series");
  dom->add_option("config", config_path, "job config (JSON)")->required();
  dom->add_option("--M", m_flag, "shell weight base (decimal)");
  dom->add_option("--max-length", max_length_flag, "length bound");
  dom->add_flag("--force", force, "skip the convergence-domain gates");
  dom->add_option("--threads", threads, "worker cap");
  dom->add_option("--digits", digits_flag, "decimal digits");
  dom->callback([&] {
    run_dominating(config_path, m_flag, max_length_flag, force, threads, digits_flag);
  });

  auto* looi = app.add_subcommand("looijenga", "Count orbit weights above a cutoff");
  looi->add_option("config", config_path, "job config (JSON)")->required();
  looi->add_option("--N", n_flag, "cutoff (rational)");
  looi->add_option("--cap-length", cap_flag, "orbit search depth cap");
  looi->callback([&] { run_looijenga(config_path, n_flag, cap_flag); });

  auto* rank1 = app.add_subcommand("rank1", "Certified rank-one series bound");
  rank1->add_option("--s", s_text, "spectral value, s > 0")->required();
  rank1->add_option("--a", a_text, "scale a^alpha > 0");
  rank1->add_option("--x", x_text, "offset x0");
  rank1->add_option("--digits", digits, "decimal digits");
  rank1->callback([&] { run_rank1(s_text, a_text, x_text, digits); });

  auto* zr = app.add_subcommand("zeta-ratio", "xi(s)/xi(s+1) for s > 1");
  zr->add_option("--s", s_text, "argument")->required();
  zr->add_option("--digits", digits, "decimal digits");
  zr->callback([&] { run_zeta_ratio(s_text, digits); });

  auto* ci = app.add_subcommand("c-infinity",
                                "sqrt(pi) Gamma(s/2) / Gamma((s+1)/2) for s > 0");
  ci->add_option("--s", s_text, "argument")->required();
  ci->add_option("--digits", digits, "decimal digits");
  ci->callback([&] { run_c_infinity(s_text, digits); });

  auto* vc = app.add_subcommand("verify-certificate",
                                "Re-validate a property-check certificate");
  vc->add_option("certificate", cert_path, "certificate file (JSON)")->required();
  vc->callback([&] { exit_code = run_verify_certificate(cert_path); });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  } catch (ConfigError const& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 2;
  } catch (Error const& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (std::invalid_argument const& e) {
    std::cerr << "ConfigError: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "InternalError: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
