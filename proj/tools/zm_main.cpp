// Command-line front end: computes z-measure tables, kernel matrices,
// correlation functions (determinantal vs brute force), draws samples,
// and runs the verification suites. Emits CSV or JSON; output is
// byte-stable for a fixed configuration.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 math-domain
// error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zm/kernel.hpp"
#include "zm/kerov.hpp"
#include "zm/measure.hpp"
#include "zm/stats.hpp"
#include "zm/verify.hpp"
#include "zm/version.hpp"

using json = nlohmann::ordered_json;
using namespace zm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMathDomain = 3;

struct CommonOpts {
  std::string z = "0.3";
  std::string zp = "0.7";
  std::string xi = "0";
  std::string mode = "float";
  std::string format = "csv";
  std::string output;
  double tol = 1e-10;
  int r = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_mode = false) {
  cmd->add_option("--z", o.z, "parameter z (scalar literal)");
  cmd->add_option("--zp", o.zp, "parameter z' (scalar literal)");
  cmd->add_option("--xi", o.xi, "mixture parameter xi in [0,1)");
  cmd->add_option("--format", o.format, "output format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", o.output, "write output to this path (atomic)");
  cmd->add_option("--tol", o.tol, "numerical tolerance");
  cmd->add_option("--r", o.r, "rim-hook length (1 = classical)")
      ->check(CLI::PositiveNumber);
  if (with_mode)
    cmd->add_option("--mode", o.mode, "arithmetic: exact|float")
        ->check(CLI::IsMember({"exact", "float"}));
}

std::vector<HalfInt> parse_points(const std::string& text) {
  std::vector<HalfInt> pts;
  if (text.empty()) return pts;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) pts.push_back(HalfInt::parse(tok));
  return pts;
}

std::string points_str(const std::vector<HalfInt>& pts) {
  std::string s;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ",";
    s += pts[i].str();
  }
  return s;
}

// All emitted text goes through one sink so --output can be atomic.
void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + tmp);
    os << text;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

json config_json(const CommonOpts& o, std::initializer_list<std::pair<std::string, json>> extra) {
  json cfg;
  cfg["tool"] = std::string(kLibraryName) + " " + kVersion;
  cfg["z"] = o.z;
  cfg["zp"] = o.zp;
  cfg["xi"] = o.xi;
  cfg["r"] = o.r;
  cfg["tol"] = o.tol;
  for (const auto& [k, v] : extra) cfg[k] = v;
  return cfg;
}

std::string csv_header(const json& cfg) {
  std::string s;
  for (const auto& [k, v] : cfg.items()) {
    s += "# " + k + "=" +
         (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  }
  return s;
}

// ---------------------------------------------------------------- measure

int cmd_measure(const CommonOpts& o, int n, bool mixed, int max_size,
                double threshold) {
  json cfg = config_json(
      o, {{"mode", o.mode}, {"command", "measure"},
          {"n", mixed ? json(nullptr) : json(n)},
          {"mixed", mixed}, {"max_size", mixed ? json(max_size) : json(nullptr)}});
  std::ostringstream body;
  json jrows = json::array();
  bool exact = o.mode == "exact";

  auto add_row = [&](const Partition& lam, const std::string& w) {
    if (o.format == "csv") body << lam.str() << ";" << w << "\n";
    jrows.push_back({{"partition", lam.str()}, {"weight", w}});
  };

  std::string total;
  if (exact) {
    measure::ExactParams p{parse_gaussian(o.z), parse_gaussian(o.zp),
                           parse_gaussian(o.xi)};
    GaussianRational sum(0);
    std::vector<Partition> lams;
    if (mixed) {
      for (int m = 0; m <= max_size; ++m)
        for (const Partition& lam : partitions_of(m)) lams.push_back(lam);
    } else {
      lams = partitions_of(n);
    }
    for (const Partition& lam : lams) {
      GaussianRational w =
          mixed ? measure::mixed_weight(lam, p) : measure::z_measure(lam, p);
      sum += w;
      if (!w.is_zero()) add_row(lam, w.str());
    }
    total = sum.str();
  } else {
    measure::FloatParams p{parse_complex(o.z), parse_complex(o.zp),
                           parse_complex(o.xi)};
    Complex sum{0, 0};
    std::vector<Partition> lams;
    if (mixed) {
      for (int m = 0; m <= max_size; ++m)
        for (const Partition& lam : partitions_of(m)) lams.push_back(lam);
    } else {
      lams = partitions_of(n);
    }
    for (const Partition& lam : lams) {
      Complex w = mixed ? measure::mixed_weight(lam, p) : measure::z_measure(lam, p);
      sum += w;
      if (std::abs(w) > threshold) add_row(lam, complex_str(w));
    }
    total = complex_str(sum);
  }

  if (o.format == "csv") {
    std::string out = csv_header(cfg) + "partition;weight\n" + body.str() +
                      "# total=" + total + "\n";
    emit(out, o.output);
  } else {
    json doc{{"config", cfg}, {"rows", jrows}, {"total", total}};
    emit(doc.dump(2) + "\n", o.output);
  }
  return kExitOk;
}

// ----------------------------------------------------------------- kernel

int cmd_kernel(const CommonOpts& o, const std::string& points,
               const std::string& method) {
  std::vector<HalfInt> pts = parse_points(points);
  kernel::KernelSpec ks{parse_complex(o.z), parse_complex(o.zp),
                        parse_complex(o.xi).real(), o.r};
  json cfg = config_json(o, {{"command", "kernel"},
                             {"points", points_str(pts)},
                             {"method", method}});

  double max_gap = 0;
  auto entry = [&](HalfInt a, HalfInt b) {
    if (method == "series") return kernel::eval_series(a, b, ks, o.tol);
    if (method == "closed") return kernel::eval_closed(a, b, ks, o.tol);
    Complex s = kernel::eval_series(a, b, ks, o.tol);
    Complex c = kernel::eval_closed(a, b, ks, o.tol);
    max_gap = std::max(max_gap, std::abs(s - c));
    return c;
  };

  std::ostringstream body;
  json jentries = json::array();
  for (HalfInt a : pts) {
    json row = json::array();
    for (HalfInt b : pts) {
      Complex v = entry(a, b);
      body << a.str() << "," << b.str() << "," << fmt_double(v.real()) << ","
           << fmt_double(v.imag()) << "\n";
      row.push_back({{"re", v.real()}, {"im", v.imag()}});
    }
    jentries.push_back(row);
  }

  if (o.format == "csv") {
    std::string out = csv_header(cfg) + "i,j,re,im\n" + body.str();
    if (method == "both") out += "# max_discrepancy=" + fmt_double(max_gap) + "\n";
    emit(out, o.output);
  } else {
    json doc{{"config", cfg}, {"points", json::array()}, {"entries", jentries}};
    for (HalfInt p : pts) doc["points"].push_back(p.str());
    if (method == "both") doc["max_discrepancy"] = max_gap;
    emit(doc.dump(2) + "\n", o.output);
  }
  return kExitOk;
}

// ------------------------------------------------------------------- corr

int cmd_corr(const CommonOpts& o, const std::string& points, int trunc,
             bool strict) {
  std::vector<HalfInt> pts = parse_points(points);
  kernel::KernelSpec ks{parse_complex(o.z), parse_complex(o.zp),
                        parse_complex(o.xi).real(), o.r};
  json cfg = config_json(o, {{"command", "corr"},
                             {"points", points_str(pts)},
                             {"trunc", trunc},
                             {"strict", strict}});

  auto det = kernel::correlation_det(pts, ks, o.tol);
  Complex brute;
  double tail;
  bool rigorous;
  if (o.r == 1) {
    measure::FloatParams mp{ks.z, ks.zp, Complex(ks.xi)};
    auto b = measure::brute_correlation(pts, mp, trunc);
    brute = b.value;
    tail = b.tail.bound;
    rigorous = b.tail.rigorous;
  } else {
    auto b = kernel::rimhook_brute(pts, ks, trunc);
    brute = b.rho;
    tail = b.tail.bound / std::abs(b.z_predicted);
    rigorous = b.tail.rigorous;
  }
  double gap = std::abs(det.value - brute);
  bool ok = gap <= tail + o.tol;

  json doc{{"config", cfg},
           {"rho_det", {{"re", det.value.real()}, {"im", det.value.imag()}}},
           {"brute", {{"re", brute.real()}, {"im", brute.imag()}}},
           {"tail", tail},
           {"tail_rigorous", rigorous},
           {"gap", gap},
           {"pass", ok},
           {"pivot_ratio", det.pivot_ratio}};

  // Per-residue factorization when the block structure applies.
  if (o.r > 1 && pts.size() > 1) {
    std::map<int, std::vector<HalfInt>> classes;
    for (HalfInt p : pts) {
      int m = p.twice % (2 * o.r);
      classes[m <= 0 ? m + 2 * o.r : m].push_back(p);
    }
    if (classes.size() > 1) {
      Complex prod{1, 0};
      json blocks = json::array();
      for (const auto& [c2, sub] : classes) {
        auto bdet = kernel::correlation_det(sub, ks, o.tol);
        prod *= bdet.value;
        blocks.push_back({{"residue", HalfInt(c2).str()},
                          {"points", points_str(sub)},
                          {"det_re", bdet.value.real()},
                          {"det_im", bdet.value.imag()}});
      }
      doc["residue_blocks"] = blocks;
      doc["block_product_gap"] = std::abs(prod - det.value);
    }
  }

  if (o.format == "csv") {
    std::ostringstream out;
    out << csv_header(cfg) << "quantity,value\n"
        << "rho_det," << fmt_double(det.value.real());
    if (det.value.imag() != 0) out << "+" << fmt_double(det.value.imag()) << "i";
    out << "\nbrute," << fmt_double(brute.real()) << "\ntail," << fmt_double(tail)
        << "\ngap," << fmt_double(gap) << "\npass," << (ok ? "1" : "0") << "\n";
    if (doc.contains("block_product_gap"))
      out << "block_product_gap," << fmt_double(doc["block_product_gap"]) << "\n";
    emit(out.str(), o.output);
  } else {
    emit(doc.dump(2) + "\n", o.output);
  }
  return (strict && !ok) ? kExitVerification : kExitOk;
}

// ----------------------------------------------------------------- sample

int cmd_sample(const CommonOpts& o, int count, int trunc, std::uint64_t seed,
               int summary_size) {
  measure::FloatParams p{parse_complex(o.z), parse_complex(o.zp),
                         parse_complex(o.xi)};
  json cfg = config_json(o, {{"command", "sample"},
                             {"count", count},
                             {"trunc", trunc},
                             {"seed", seed},
                             {"rng", "mt19937_64/53-bit"}});
  auto draws = measure::sample(p, count, trunc, seed);

  // Empirical vs exact masses over small partitions.
  auto masses = measure::mixture_masses(p, summary_size);
  std::map<Partition, long> counts;
  for (const auto& lam : draws)
    if (lam.size() <= summary_size) ++counts[lam];
  std::vector<double> probs;
  std::vector<long> observed;
  json summary = json::array();
  for (const auto& [lam, mass] : masses) {
    long c = counts.count(lam) ? counts[lam] : 0;
    probs.push_back(mass);
    observed.push_back(c);
    summary.push_back({{"partition", lam.str()},
                       {"exact", mass},
                       {"empirical", static_cast<double>(c) / count}});
  }
  auto chi = stats::chi_square_test(probs, observed, count);

  if (o.format == "csv") {
    std::ostringstream out;
    out << csv_header(cfg);
    for (const auto& lam : draws) out << lam.str() << "\n";
    out << "# chi_square=" << fmt_double(chi.statistic) << " dof=" << chi.dof
        << " p_value=" << fmt_double(chi.p_value) << "\n";
    for (const auto& row : summary)
      out << "# mass " << row["partition"].get<std::string>() << " exact="
          << fmt_double(row["exact"].get<double>())
          << " empirical=" << fmt_double(row["empirical"].get<double>()) << "\n";
    emit(out.str(), o.output);
  } else {
    json doc{{"config", cfg}, {"samples", json::array()}};
    for (const auto& lam : draws) doc["samples"].push_back(lam.str());
    doc["summary"] = summary;
    doc["chi_square"] = {{"statistic", chi.statistic},
                         {"dof", chi.dof},
                         {"p_value", chi.p_value}};
    emit(doc.dump(2) + "\n", o.output);
  }
  return kExitOk;
}

// ------------------------------------------------------------ rimhook-corr

int cmd_rimhook_corr(const CommonOpts& o, const std::string& points, int trunc) {
  std::vector<HalfInt> pts = parse_points(points);
  kernel::KernelSpec ks{parse_complex(o.z), parse_complex(o.zp),
                        parse_complex(o.xi).real(), o.r};
  json cfg = config_json(
      o, {{"command", "rimhook-corr"}, {"points", points_str(pts)}, {"trunc", trunc}});
  auto brute = kernel::rimhook_brute(pts, ks, trunc);
  auto det = kernel::correlation_det(pts, ks, o.tol);
  double rel_tail = brute.tail.bound / std::abs(brute.z_predicted);
  double gap = std::abs(det.value - brute.rho);
  double z_gap = std::abs(brute.z_truncated - brute.z_predicted);

  json doc{{"config", cfg},
           {"rho_det", {{"re", det.value.real()}, {"im", det.value.imag()}}},
           {"rho_brute", {{"re", brute.rho.real()}, {"im", brute.rho.imag()}}},
           {"gap", gap},
           {"tail", rel_tail},
           {"z_truncated", brute.z_truncated.real()},
           {"z_predicted", brute.z_predicted.real()},
           {"z_gap", z_gap},
           {"pass", gap <= rel_tail + o.tol && z_gap <= brute.tail.bound + o.tol}};
  if (o.format == "csv") {
    std::ostringstream out;
    out << csv_header(cfg) << "quantity,value\n"
        << "rho_det," << fmt_double(det.value.real()) << "\n"
        << "rho_brute," << fmt_double(brute.rho.real()) << "\n"
        << "gap," << fmt_double(gap) << "\n"
        << "tail," << fmt_double(rel_tail) << "\n"
        << "z_truncated," << fmt_double(brute.z_truncated.real()) << "\n"
        << "z_predicted," << fmt_double(brute.z_predicted.real()) << "\n"
        << "z_gap," << fmt_double(z_gap) << "\n";
    emit(out.str(), o.output);
  } else {
    emit(doc.dump(2) + "\n", o.output);
  }
  return doc["pass"].get<bool>() ? kExitOk : kExitVerification;
}

// ----------------------------------------------------------------- verify

int cmd_verify(const CommonOpts& o, const std::string& suite, int max_size,
               const std::string& alpha, const std::string& beta) {
  std::vector<verify::SuiteResult> results;
  if (suite == "all") {
    results = verify::run_all();
  } else if (suite == "comm") {
    results.push_back(verify::commutators(max_size, {1, 2, 3}));
  } else if (suite == "du") {
    results.push_back(verify::du_identity(parse_complex(alpha),
                                          parse_complex(beta), parse_complex(o.z),
                                          parse_complex(o.zp), 24, 6, 1e-10));
  } else if (suite == "prob") {
    results.push_back(verify::normalization(max_size));
  } else if (suite == "fock") {
    results.push_back(verify::fock_identification(max_size, 12));
  } else if (suite == "periodicity") {
    results.push_back(verify::periodicity(1e-12));
  } else if (suite == "qform") {
    results.push_back(verify::q_form(1e-12));
  } else if (suite == "rimhook") {
    results.push_back(verify::rimhook_factorization(max_size, {2, 3}));
  } else {
    throw CLI::ValidationError("unknown suite: " + suite);
  }

  json cfg = config_json(o, {{"command", "verify"},
                             {"suite", suite},
                             {"max_size", max_size}});
  bool all_pass = true;
  json jsuites = json::array();
  for (const auto& r : results) {
    all_pass = all_pass && r.passed;
    jsuites.push_back({{"suite", r.suite},
                       {"passed", r.passed},
                       {"max_error", r.max_error},
                       {"threshold", r.threshold},
                       {"cases", r.cases},
                       {"note", r.note}});
  }
  json doc{{"config", cfg}, {"suites", jsuites}, {"all_passed", all_pass}};
  emit(doc.dump(2) + "\n", o.output);
  return all_pass ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kLibraryName) + " " + kVersion +
               " — z-measures, SL(2) matrix elements and the hypergeometric "
               "kernel on partitions"};
  app.require_subcommand(1);

  CommonOpts o;

  auto* m = app.add_subcommand("measure", "z-measure table M_n or mixture M");
  int n = 0, max_size = 10;
  bool mixed = false;
  double threshold = 1e-12;
  add_common(m, o, /*with_mode=*/true);
  m->add_option("--n", n, "partition size for the n-point table");
  m->add_flag("--mixed", mixed, "tabulate the xi-mixture instead of M_n");
  m->add_option("--max-size", max_size, "mixture table size cap");
  m->add_option("--threshold", threshold, "suppress float rows below this");

  auto* k = app.add_subcommand("kernel", "kernel matrix over a point set");
  std::string points, method = "closed";
  add_common(k, o);
  k->add_option("--points", points, "comma-separated half-integers, e.g. -1/2,3/2")
      ->required();
  k->add_option("--method", method, "series|closed|both")
      ->check(CLI::IsMember({"series", "closed", "both"}));

  auto* c = app.add_subcommand("corr",
                               "correlation: determinant vs brute-force sum");
  int trunc = 25;
  bool strict = false;
  add_common(c, o);
  c->add_option("--points", points, "point set X");
  c->add_option("--trunc", trunc, "enumeration cap N");
  c->add_flag("--strict", strict, "exit 1 when the gap exceeds tail+tol");

  auto* s = app.add_subcommand("sample", "draw partitions from the mixture");
  int count = 100, summary_size = 6;
  std::uint64_t seed = 1;
  add_common(s, o);
  s->add_option("--count", count, "number of draws");
  s->add_option("--trunc", trunc, "size truncation of the mixture");
  s->add_option("--seed", seed, "RNG seed");
  s->add_option("--summary-size", summary_size,
                "partition size cap of the summary block");

  auto* rh = app.add_subcommand("rimhook-corr",
                                "rim-hook correlation: det[K_r] vs brute force");
  add_common(rh, o);
  rh->add_option("--points", points, "point set X")->required();
  rh->add_option("--trunc", trunc, "enumeration cap N");

  auto* v = app.add_subcommand("verify", "verification suites (JSON report)");
  std::string suite = "all", alpha = "1/4", beta = "1/4";
  add_common(v, o);
  v->add_option("--suite", suite,
                "all|comm|du|prob|fock|periodicity|qform|rimhook");
  v->add_option("--max-size", max_size, "partition size cap");
  v->add_option("--alpha", alpha, "exponential coefficient alpha");
  v->add_option("--beta", beta, "exponential coefficient beta");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (m->parsed()) return cmd_measure(o, n, mixed, max_size, threshold);
    if (k->parsed()) return cmd_kernel(o, points, method);
    if (c->parsed()) return cmd_corr(o, points, trunc, strict);
    if (s->parsed()) return cmd_sample(o, count, trunc, seed, summary_size);
    if (rh->parsed()) return cmd_rimhook_corr(o, points, trunc);
    if (v->parsed()) return cmd_verify(o, suite, max_size, alpha, beta);
  } catch (const std::domain_error& e) {
    std::cerr << "math-domain error: " << e.what() << "\n";
    return kExitMathDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathDomain;
  }
  return kExitUsage;
}
