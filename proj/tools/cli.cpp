#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "elitist/census.hpp"
#include "elitist/charsum.hpp"
#include "elitist/elite.hpp"
#include "elitist/errors.hpp"
#include "elitist/fermat.hpp"

namespace elitist::cli {

namespace {

using json = nlohmann::ordered_json;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

uint64_t sieve_limit_from_env() {
  if (const char* env = std::getenv("ELITIST_SIEVE_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v >= 3) return v;
  }
  return 10'000'000;
}

// Writes the payload to --out when given, stdout otherwise.
void emit(const std::string& payload, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << payload;
}

std::string census_csv(const std::vector<census::CensusRow>& rows) {
  std::string s = "x,E,A,ratio_thm1,ratio_thm2,recip_sum\n";
  for (const auto& r : rows) {
    s += std::to_string(r.x) + ',' + std::to_string(r.elite_count) + ',' +
         std::to_string(r.anti_count) + ',' + fmt_double(r.ratio_thm1) + ',' +
         fmt_double(r.ratio_thm2) + ',' + fmt_double(r.recip_sum) + '\n';
  }
  return s;
}

json census_json(const std::vector<census::CensusRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"x", r.x},
                   {"E", r.elite_count},
                   {"A", r.anti_count},
                   {"ratio_thm1", r.ratio_thm1},
                   {"ratio_thm2", r.ratio_thm2},
                   {"recip_sum", r.recip_sum}});
  }
  return arr;
}

std::string charsum_csv(const std::vector<charsum::CharSumRecord>& recs) {
  std::string s = "a,x,S,q_eff,grh_ratio\n";
  for (const auto& r : recs) {
    s += std::to_string(r.a) + ',' + std::to_string(r.x) + ',' + std::to_string(r.sum) + ',' +
         std::to_string(r.q_eff) + ',' + fmt_double(r.grh_ratio) + '\n';
  }
  return s;
}

json charsum_json(const std::vector<charsum::CharSumRecord>& recs) {
  json arr = json::array();
  for (const auto& r : recs) {
    arr.push_back({{"a", r.a},
                   {"x", r.x},
                   {"S", r.sum},
                   {"q_eff", r.q_eff},
                   {"grh_ratio", r.grh_ratio},
                   {"principal_like", r.principal_like},
                   {"informal_ratio", r.informal_ratio}});
  }
  return arr;
}

json classification_json(const elite::PrimeClassification& c) {
  json j{{"p", c.p},        {"base", c.base},     {"e", c.two_adic_exp},
         {"k", c.odd_part}, {"f", c.period},      {"label", std::string(to_string(c.label))},
         {"scanned", c.scanned}};
  json window = json::array();
  for (const auto s : c.window) window.push_back(static_cast<int>(s));
  j["window"] = window;
  if (c.witness) {
    j["witness"] = {{"residue_index", c.witness->residue_index},
                    {"nonresidue_index", c.witness->nonresidue_index}};
  }
  return j;
}

struct Args {
  uint64_t prime = 0;
  uint64_t base = 2;
  uint64_t limit = 0;
  unsigned index = 0;
  unsigned n = 0;
  unsigned t = 0;
  unsigned big_t = 0;
  int64_t a = 0;
  uint64_t max_bits = uint64_t{1} << 14;
  unsigned threads = 0;
  std::vector<uint64_t> checkpoints;
  std::string format = "csv";
  std::string out_path;
  bool use_defaults = false;
};

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"elite / anti-elite prime census toolkit"};
  app.require_subcommand(1);
  Args a;
  const uint64_t sieve_limit = sieve_limit_from_env();

  auto* classify = app.add_subcommand("classify", "classify one odd prime");
  classify->add_option("--prime", a.prime, "odd prime to classify")->required();
  classify->add_option("--base", a.base, "generalized Fermat base (default 2)");

  auto* census_cmd = app.add_subcommand("census", "elite/anti-elite counts up to a limit");
  census_cmd->add_option("--limit", a.limit, "census upper bound")->required();
  census_cmd->add_option("--base", a.base, "generalized Fermat base (default 2)");
  census_cmd->add_option("--checkpoints", a.checkpoints, "ascending checkpoints")->delimiter(',');
  census_cmd->add_option("--threads", a.threads, "worker threads (0 = auto)");
  census_cmd->add_option("--format", a.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  census_cmd->add_option("--out", a.out_path, "write output to a file");

  auto* progression = app.add_subcommand("progression", "primes = 1 mod 2^t up to a limit");
  progression->add_option("--limit", a.limit, "upper bound x")->required();
  progression->add_option("--t", a.t, "power-of-two modulus exponent")->required();
  progression->add_option("--threads", a.threads, "worker threads (0 = auto)");

  auto* charsum_cmd = app.add_subcommand("charsum", "Kronecker character sums over primes");
  charsum_cmd->add_option("--a", a.a, "character parameter (nonzero)")->required();
  charsum_cmd->add_option("--limit", a.limit, "sum over primes <= limit")->required();
  charsum_cmd->add_option("--checkpoints", a.checkpoints, "ascending checkpoints")->delimiter(',');
  charsum_cmd->add_option("--threads", a.threads, "worker threads (0 = auto)");
  charsum_cmd->add_option("--format", a.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  charsum_cmd->add_option("--out", a.out_path, "write output to a file");

  auto* sandwich = app.add_subcommand("sandwich", "sandwich-bound component report");
  sandwich->add_option("--limit", a.limit, "upper bound x")->required();
  auto* t_opt = sandwich->add_option("--t", a.t, "lower window parameter");
  auto* big_t_opt = sandwich->add_option("--bigT", a.big_t, "number of window indices minus one");
  sandwich->add_flag("--defaults", a.use_defaults, "use t = T = floor(ln x / (6 ln 2))");
  sandwich->add_option("--threads", a.threads, "worker threads (0 = auto)");
  sandwich->add_option("--out", a.out_path, "write output to a file");

  auto* pepin = app.add_subcommand("pepin", "Pepin primality test for F_n");
  pepin->add_option("--index", a.index, "Fermat index n >= 1")->required();
  pepin->add_option("--max-bits", a.max_bits, "cap on 2^n (default 16384)");

  auto* identity = app.add_subcommand("identity", "check prod F_i = 2^(2^(n+1)) - 1");
  identity->add_option("--n", a.n, "largest Fermat index in the product")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  }

  if (classify->parsed()) {
    const auto record = elite::classify(a.prime, a.base);
    emit(classification_json(record).dump() + "\n", a.out_path, out);
    return 0;
  }

  if (census_cmd->parsed()) {
    census::Options options;
    options.base = a.base;
    options.threads = a.threads;
    options.sieve_limit = sieve_limit;
    const auto checkpoints =
        a.checkpoints.empty() ? census::default_checkpoints(a.limit) : a.checkpoints;
    const auto rows = census::run_census(a.limit, checkpoints, options);
    emit(a.format == "json" ? census_json(rows).dump() + "\n" : census_csv(rows), a.out_path, out);
    return 0;
  }

  if (progression->parsed()) {
    census::Options options;
    options.threads = a.threads;
    options.sieve_limit = sieve_limit;
    const auto r = census::progression_count(a.limit, a.t, options);
    const json j{{"x", r.x}, {"t", r.t}, {"count", r.count}, {"bt_bound", r.bt_bound}};
    emit(j.dump() + "\n", a.out_path, out);
    return 0;
  }

  if (charsum_cmd->parsed()) {
    charsum::Options options;
    options.threads = a.threads;
    options.sieve_limit = sieve_limit;
    const auto checkpoints =
        a.checkpoints.empty() ? std::vector<uint64_t>{a.limit} : a.checkpoints;
    const auto records = charsum::char_sum(a.a, checkpoints, options);
    if (!records.empty() && records.front().principal_like)
      err << "warning: a = " << a.a
          << " is a perfect square; the character is principal-like and the conditional bound "
             "does not apply\n";
    if (!records.empty() && records.front().informal_ratio)
      err << "warning: a = 3 mod 4 is outside the Dirichlet-character setup; grh_ratio is "
             "informal\n";
    emit(a.format == "json" ? charsum_json(records).dump() + "\n" : charsum_csv(records),
         a.out_path, out);
    return 0;
  }

  if (sandwich->parsed()) {
    charsum::Options options;
    options.threads = a.threads;
    options.sieve_limit = sieve_limit;
    unsigned t = a.t, big_t = a.big_t;
    if (a.use_defaults || (t_opt->count() == 0 && big_t_opt->count() == 0)) {
      t = big_t = charsum::default_parameter(a.limit);
    } else if (t_opt->count() == 0 || big_t_opt->count() == 0) {
      throw CLI::RequiredError("sandwich needs both --t and --bigT (or neither/--defaults)");
    }
    const auto r = charsum::sandwich_report(t, big_t, a.limit, options);
    const json j{{"t", r.t},
                 {"T", r.T},
                 {"x", r.x},
                 {"N_sandwich", r.n_sandwich},
                 {"n_numerator", r.n_numerator},
                 {"omega_A", r.omega_a},
                 {"omega_exact", r.omega_exact},
                 {"bt_term", r.bt_term},
                 {"E_low", r.e_low},
                 {"inequality_holds", r.inequality_holds},
                 {"bound_terms",
                  {{"sqrtx_logx", r.bound_terms[0]},
                   {"sqrtx_2_tT", r.bound_terms[1]},
                   {"x_over_2T", r.bound_terms[2]},
                   {"x_over_2t", r.bound_terms[3]}}}};
    emit(j.dump() + "\n", a.out_path, out);
    return 0;
  }

  if (pepin->parsed()) {
    fermat::PepinOptions options;
    options.max_bits = a.max_bits;
    const auto v = fermat::pepin_test(a.index, options);
    const json j{{"index", v.index},
                 {"verdict", v.is_prime ? "prime" : "composite"},
                 {"residue", v.residue.str()}};
    emit(j.dump() + "\n", a.out_path, out);
    return 0;
  }

  if (identity->parsed()) {
    const auto r = fermat::product_identity_check(a.n);
    const json j{{"n", a.n}, {"lhs", r.lhs.str()}, {"rhs", r.rhs.str()}, {"equal", r.equal}};
    emit(j.dump() + "\n", a.out_path, out);
    return 0;
  }

  return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run(args, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    err << "error: resource-limit: " << e.what() << "\n";
    return 4;
  } catch (const std::logic_error& e) {
    err << "error: precondition: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace elitist::cli
