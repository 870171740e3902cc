// Command-line driver: seeded experiments over subsets of F2^n, theorem
// checks at desk scale, and JSON/CSV reports.
//
// Exit codes: 0 all assertions passed, 1 an assertion failed, 2 usage or
// capacity error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "f2/concentration.hpp"
#include "f2/dense_set.hpp"
#include "f2/increment.hpp"
#include "f2/niveau.hpp"
#include "f2/report_io.hpp"
#include "f2/rng.hpp"
#include "f2/set_io.hpp"
#include "f2/subspace.hpp"
#include "f2/walsh.hpp"

namespace {

using f2::json;

struct Options {
  std::string command;
  int n = 0;
  std::string alpha;    // rational "p/q"
  std::string epsilon;  // rational "p/q"
  int trials = 1;
  std::uint64_t seed = 0;
  std::string stopping = "plain";
  std::string mode = "exact";  // exact | bernoulli
  int d = 2;                   // metsch command dimension
  std::uint64_t card = 0;      // metsch |S| override (0 = bound - 1)
  std::string c_grid = "1/4,1/2,1,2,4";
  std::string in_path;
  std::string out_path;
  std::string save_set;
  std::string format;  // json | csv
};

mpq_class parse_rational(const std::string& text, const char* what) {
  try {
    return f2::mpq_from_string(text);
  } catch (const std::exception&) {
    throw CLI::ValidationError(std::string(what) + ": expected a rational like 3/8");
  }
}

// smallest cardinality with |A|/2^n strictly above the rational threshold
std::uint64_t card_above(int n, const mpq_class& threshold) {
  mpz_class scaled = (threshold.get_num() << n) / threshold.get_den();  // floor
  mpz_class card = scaled + 1;
  if (card < 0) card = 0;
  if (card > (mpz_class(1) << n))
    throw std::domain_error("threshold density leaves no admissible cardinality");
  return card.get_ui();
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

f2::DenseSet draw_set(const Options& opt, const mpq_class& alpha, f2::SplitMix64& rng) {
  if (opt.mode == "bernoulli") return f2::sample_bernoulli(opt.n, alpha, rng);
  mpz_class card_z = (alpha.get_num() << opt.n) / alpha.get_den();
  return f2::sample_exact_card(opt.n, card_z.get_ui(), rng);
}

json config_json(const Options& opt) {
  json j;
  j["command"] = opt.command;
  j["n"] = opt.n;
  if (!opt.alpha.empty()) j["alpha"] = opt.alpha;
  if (!opt.epsilon.empty()) j["epsilon"] = opt.epsilon;
  j["trials"] = opt.trials;
  j["seed"] = opt.seed;
  if (opt.command == "find") j["stopping"] = f2::Stopping::parse(opt.stopping).to_string();
  if (opt.command == "find") j["mode"] = opt.mode;
  if (!opt.in_path.empty()) j["in"] = opt.in_path;
  return j;
}

// ---------------------------------------------------------------- find

int cmd_find(const Options& opt) {
  f2::Stopping stopping = f2::Stopping::parse(opt.stopping);
  f2::SplitMix64 rng(opt.seed);

  json out;
  out["config"] = config_json(opt);
  json trials = json::array();
  bool all_ok = true;

  std::optional<f2::DenseSet> fixed;
  if (!opt.in_path.empty()) fixed = f2::read_set_file(opt.in_path);

  const int rounds = fixed ? 1 : opt.trials;
  mpq_class alpha = fixed ? mpq_class(0) : parse_rational(opt.alpha, "--alpha");
  for (int t = 0; t < rounds; ++t) {
    f2::DenseSet a = fixed ? *fixed : draw_set(opt, alpha, rng);
    if (!opt.save_set.empty() && t == 0) f2::write_set_file(opt.save_set, a);
    f2::FinderReport report = f2::find_subspace(a, stopping);
    json tj = f2::report_to_json(report);
    tj["trial"] = t;
    bool ok = report.verified &&
              (stopping.rule != f2::Stopping::Rule::plain ||
               report.achieved_codim <= report.theorem_bound);
    all_ok &= ok;
    trials.push_back(std::move(tj));
  }
  out["trials"] = trials;
  out["all_verified"] = all_ok;

  std::ofstream file;
  std::ostream& os = open_out(file, opt.out_path);
  if (opt.format == "csv") {
    os << "trial,n,alpha,stopping,achieved_codim,theorem_bound,final_dim,verified\n";
    for (const auto& tj : out["trials"])
      os << tj["trial"] << ',' << tj["n"] << ',' << tj["alpha"].get<std::string>() << ','
         << tj["stopping_rule"].get<std::string>() << ',' << tj["achieved_codim"] << ','
         << tj["theorem_bound"] << ',' << tj["final_subspace"]["dim"] << ','
         << (tj["verified"].get<bool>() ? 1 : 0) << "\n";
  } else {
    os << out.dump(2) << "\n";
  }
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------- hyperplane check

int cmd_hyperplane(const Options& opt) {
  const mpq_class eps = parse_rational(opt.epsilon, "--epsilon");
  if (eps <= 0) throw CLI::ValidationError("--epsilon must be positive");
  if (opt.n > 24) throw CLI::ValidationError("hyperplane scan needs n <= 24");
  // regime of the codimension-1 theorem: eps <= 1/(2^9 sqrt(n)), exactly
  // eps^2 * 2^18 * n <= 1
  const bool regime_ok = eps * eps * (1 << 18) * opt.n <= 1;

  mpq_class threshold = mpq_class(1, 2) - eps;
  const std::uint64_t card = card_above(opt.n, threshold);

  f2::SplitMix64 rng(opt.seed);
  json out;
  out["config"] = config_json(opt);
  out["regime_ok"] = regime_ok;
  out["card"] = card;
  if (!regime_ok)
    std::cerr << "warning: epsilon is outside (0, 1/2^9 sqrt(n)]; "
                 "results are observations, not theorem checks\n";

  json trials = json::array();
  std::uint64_t subspace_successes = 0;
  std::uint64_t coset_successes = 0;
  for (int t = 0; t < opt.trials; ++t) {
    f2::DenseSet a = f2::sample_exact_card(opt.n, card, rng);
    f2::HyperplaneScan scan = f2::hyperplane_scan(f2::sumset(a, a));
    json tj;
    tj["trial"] = t;
    tj["subspace_gamma"] =
        scan.subspace_gamma ? f2::mask_hex(*scan.subspace_gamma) : "none";
    tj["coset_gamma"] = scan.coset_gamma ? f2::mask_hex(*scan.coset_gamma) : "none";
    tj["subspace_hits"] = scan.subspace_hits;
    tj["coset_hits"] = scan.coset_hits;
    subspace_successes += scan.subspace_gamma.has_value();
    coset_successes += scan.coset_gamma.has_value();
    trials.push_back(std::move(tj));
  }
  out["trials"] = trials;
  out["subspace_successes"] = subspace_successes;
  out["coset_successes"] = coset_successes;

  const bool all_found = subspace_successes == static_cast<std::uint64_t>(opt.trials) &&
                         coset_successes == static_cast<std::uint64_t>(opt.trials);
  out["all_found"] = all_found;

  std::ofstream file;
  std::ostream& os = open_out(file, opt.out_path);
  os << out.dump(2) << "\n";
  return (all_found || !regime_ok) ? 0 : 1;
}

// -------------------------------------------------------------- niveau

int cmd_niveau(const Options& opt) {
  const mpq_class eps = parse_rational(opt.epsilon, "--epsilon");
  f2::NiveauParams params = f2::NiveauParams::make(opt.n, eps);
  f2::DensityBounds bounds = f2::density_bounds_check(params);

  json out;
  out["config"] = config_json(opt);
  out["eta"] = f2::mpq_to_string(params.eta);
  out["w_star"] = params.w_star;
  out["d"] = params.d;
  out["exact_density"] = bounds.exact.to_string();
  {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12e", bounds.berry_esseen_lower);
    out["berry_esseen_lower"] = buf;
  }
  out["target_density"] = f2::mpq_to_string(bounds.target_density);
  out["density_holds"] = bounds.holds;
  out["regime_ok"] = bounds.regime_ok;

  bool ok = bounds.holds || !bounds.regime_ok;

  if (opt.n <= 20) {
    f2::DenseSet a = f2::niveau_set(params);
    f2::DenseSet aa = f2::sumset(a, a);
    int min_zeros = params.n;
    bool weight_ok = true;
    aa.for_each([&](f2::GroupElement x) {
      weight_ok &= f2::sumset_weight_bound_check(params, x);
      min_zeros = std::min(min_zeros, f2::zero_count(params.n, x));
    });
    out["sumset_min_zeros"] = min_zeros;
    out["sumset_weight_bound_holds"] = weight_ok;
    ok &= weight_ok;

    // witness sweep over random subspaces of codimension <= d
    if (params.d >= 1) {
      f2::SplitMix64 rng(opt.seed);
      int witnesses = 0;
      int inconclusive = 0;
      int sound = 0;
      for (int t = 0; t < opt.trials; ++t) {
        int c = 1 + static_cast<int>(rng.next_below(params.d));
        f2::Subspace v = f2::random_subspace_of_codim(params.n, c, rng);
        auto w = f2::codim_witness(params, v);
        if (w) {
          ++witnesses;
          sound += v.contains(*w) && !aa.contains(*w);
        } else {
          ++inconclusive;
        }
      }
      out["witness_trials"] = opt.trials;
      out["witnesses"] = witnesses;
      out["witnesses_sound"] = sound;
      out["inconclusive"] = inconclusive;
      ok &= (sound == witnesses);
    }

    if (opt.n <= 14) {  // empirical gap against the oracle; observation only
      f2::Subspace best = f2::max_subspace_in(aa);
      out["oracle_max_dim"] = best.dim();
      out["n_minus_d"] = params.n - params.d;
    }
  }

  std::ofstream file;
  std::ostream& os = open_out(file, opt.out_path);
  os << out.dump(2) << "\n";
  return ok ? 0 : 1;
}

// -------------------------------------------------------- concentration

int cmd_concentration(const Options& opt) {
  f2::SplitMix64 rng(opt.seed);
  json out;
  out["config"] = config_json(opt);
  std::uint64_t holds = 0;
  std::uint64_t growth_ok = 0;
  for (int t = 0; t < opt.trials; ++t) {
    f2::DenseSet a =
        f2::sample_exact_card(opt.n, 1 + rng.next_below((std::uint64_t(1) << opt.n) - 1), rng);
    int r = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(opt.n) + 2));
    f2::BasisSet e = (t % 2 == 0) ? f2::BasisSet::standard(opt.n) : f2::random_basis(opt.n, rng);
    holds += f2::basis_concentration_check(a, e, r).holds;
    growth_ok += f2::basis_growth_check(a, e, r).covers;
  }
  out["holds"] = holds;
  out["growth_containment"] = growth_ok;
  const bool ok = holds == static_cast<std::uint64_t>(opt.trials) &&
                  growth_ok == static_cast<std::uint64_t>(opt.trials);
  out["all_ok"] = ok;

  std::ofstream file;
  std::ostream& os = open_out(file, opt.out_path);
  os << out.dump(2) << "\n";
  return ok ? 0 : 1;
}

// -------------------------------------------------------------- metsch

int cmd_metsch(const Options& opt) {
  if (opt.d < 1 || opt.d > opt.n) throw CLI::ValidationError("--d must be in [1, n]");
  const std::uint64_t bound = f2::metsch_bound(opt.n, opt.d);
  const std::uint64_t card = opt.card ? opt.card : bound - 1;
  if (card >= bound)
    std::cerr << "warning: |S| >= 2^{n+1-d} - 1; a witness is no longer guaranteed\n";

  f2::SplitMix64 rng(opt.seed);
  json out;
  out["config"] = config_json(opt);
  out["d"] = opt.d;
  out["blocking_bound"] = bound;
  out["card"] = card;
  std::uint64_t found = 0;
  json trials = json::array();
  for (int t = 0; t < opt.trials; ++t) {
    f2::DenseSet s = f2::sample_exact_card_nonzero(opt.n, card, rng);
    auto witness = f2::metsch_witness(s, opt.d);
    json tj;
    tj["trial"] = t;
    if (witness) {
      ++found;
      tj["witness"] = f2::subspace_to_json(*witness);
      tj["disjoint"] = (witness->members() & s).empty();
    } else {
      tj["witness"] = "blocking";
    }
    trials.push_back(std::move(tj));
  }
  out["trials"] = trials;
  out["witnesses_found"] = found;
  const bool ok = card >= bound || found == static_cast<std::uint64_t>(opt.trials);
  out["all_found"] = found == static_cast<std::uint64_t>(opt.trials);

  std::ofstream file;
  std::ostream& os = open_out(file, opt.out_path);
  os << out.dump(2) << "\n";
  return ok ? 0 : 1;
}

// ------------------------------------------------------ question sweep

// floor(C * 2^n / sqrt(n)) via integer square roots, exact
mpz_class floor_c_scaled(const mpq_class& c, int n) {
  // value^2 = c^2 * 2^{2n} / n; take isqrt of the floor and fix up
  mpz_class num = c.get_num() * c.get_num() * (mpz_class(1) << (2 * n));
  mpz_class den = c.get_den() * c.get_den() * n;
  mpz_class k = sqrt(num / den);
  while (k * k * den > num) --k;
  while ((k + 1) * (k + 1) * den <= num) ++k;
  return k;
}

int cmd_sweep(const Options& opt) {
  if (opt.n > 14) throw CLI::ValidationError("sweep is oracle-bound; need n <= 14");
  f2::SplitMix64 rng(opt.seed);

  std::ofstream file;
  std::ostream& os = open_out(file, opt.out_path);
  os << "n,C,trial,card,achieved_codim\n";

  std::vector<mpq_class> grid;
  {
    std::stringstream ss(opt.c_grid);
    std::string item;
    while (std::getline(ss, item, ',')) grid.push_back(parse_rational(item, "--c-grid"));
  }

  for (const mpq_class& c : grid) {
    // alpha > 1/2 - C/sqrt(n): card = 2^{n-1} - ceil(C 2^n / sqrt(n)) + 1
    mpz_class t = floor_c_scaled(c, opt.n);
    mpz_class num = c.get_num() * c.get_num() * (mpz_class(1) << (2 * opt.n));
    mpz_class den = c.get_den() * c.get_den() * opt.n;
    mpz_class ceil_t = (t * t * den == num) ? t : t + 1;
    mpz_class card_z = (mpz_class(1) << (opt.n - 1)) - ceil_t + 1;
    if (card_z < 1) card_z = 1;
    if (card_z > (mpz_class(1) << opt.n)) card_z = mpz_class(1) << opt.n;
    const std::uint64_t card = card_z.get_ui();

    for (int t2 = 0; t2 < opt.trials; ++t2) {
      f2::DenseSet a = f2::sample_exact_card(opt.n, card, rng);
      f2::DenseSet aa = f2::sumset(a, a);
      f2::Subspace best = f2::max_subspace_in(aa);
      os << opt.n << ',' << f2::mpq_to_string(c) << ',' << t2 << ',' << card << ','
         << (opt.n - best.dim()) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"computations with sumsets, spectra and subspaces over F2^n"};
  app.add_option("--command", opt.command, "find | hyperplane | niveau | concentration | metsch | sweep")
      ->required();
  app.add_option("--n", opt.n, "ambient dimension")->check(CLI::Range(1, 28));
  app.add_option("--alpha", opt.alpha, "target density as a rational p/q");
  app.add_option("--epsilon", opt.epsilon, "density slack as a rational p/q");
  app.add_option("--trials", opt.trials, "number of seeded trials")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "64-bit seed");
  app.add_option("--stopping", opt.stopping, "plain | metsch:<d>");
  app.add_option("--mode", opt.mode, "random set mode: exact | bernoulli")
      ->check(CLI::IsMember({"exact", "bernoulli"}));
  app.add_option("--d", opt.d, "target dimension for the metsch command");
  app.add_option("--card", opt.card, "cardinality override for the metsch command");
  app.add_option("--c-grid", opt.c_grid, "comma-separated C values for the sweep");
  app.add_option("--in", opt.in_path, "input set file (text or binary)");
  app.add_option("--out", opt.out_path, "output path (default stdout)");
  app.add_option("--save-set", opt.save_set, "write the first drawn set to this path");
  app.add_option("--format", opt.format, "json | csv")
      ->check(CLI::IsMember({"", "json", "csv"}));

  try {
    app.parse(argc, argv);
    if (opt.command == "find") return cmd_find(opt);
    if (opt.command == "hyperplane") return cmd_hyperplane(opt);
    if (opt.command == "niveau") return cmd_niveau(opt);
    if (opt.command == "concentration") return cmd_concentration(opt);
    if (opt.command == "metsch") return cmd_metsch(opt);
    if (opt.command == "sweep") return cmd_sweep(opt);
    std::cerr << "unknown command: " << opt.command << "\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {  // I/O and malformed-input failures
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
