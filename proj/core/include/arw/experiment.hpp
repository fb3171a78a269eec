#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arw/direction.hpp"
#include "arw/lattice.hpp"

namespace arw {

// Monte Carlo ensembles of segment zero counts, reproducible by contract:
// sample i is always drawn from seed seed_base + i, so results are bitwise
// identical for any worker count, and the variance uses divisor R - 1.

struct ExperimentConfig {
  std::vector<long long> m_list;
  Direction direction = Direction::angle(1.0);
  double length = 0.5;
  long long samples = 2000;
  std::uint64_t seed_base = 1;
  int workers = 1;
  int oversampling = 64;
  std::string output_path;     // empty = stdout (CLI concern)
  std::string format = "csv";  // "csv" or "json"
};

struct EnsembleResult {
  long long m = 0;
  long long n_points = 0;
  long long samples = 0;
  std::vector<long long> z_counts;
  double mean_z = 0.0;
  double var_z = 0.0;   // unbiased, divisor R - 1
  double se_mean = 0.0; // sqrt(var_z / R)
  double theory_mean = 0.0;
  // Keyed "rational", "irrational", "conjectural_or_gapped"; the last shares
  // the rational shape m/N.
  std::map<std::string, double> bound_values;
  std::map<std::string, double> ratio_var_to_bound;
  std::uint64_t seed_base = 0;
};

EnsembleResult run_ensemble(const ExperimentConfig& config, long long m);

// Level sequence generators, truncated to the budget N_m <= 256, m <= 1e8
// (a truncation note lands in *warning when given).
struct SweepSpec {
  enum class Kind { Powers, PrimeProducts, Explicit };
  Kind kind = Kind::Explicit;
  long long base = 65;           // Powers: base^1 .. base^k_max
  int k_max = 3;
  long long bound = 100000000;   // PrimeProducts: cumulative products <= bound
  std::vector<long long> levels; // Explicit

  static SweepSpec powers(long long base, int k_max);
  static SweepSpec prime_products(long long bound);
  static SweepSpec explicit_list(std::vector<long long> m_values);
};

std::vector<long long> generate_sweep_levels(const SweepSpec& spec,
                                             std::string* warning = nullptr);

std::vector<EnsembleResult> sweep_sequence(const SweepSpec& spec,
                                           const ExperimentConfig& config,
                                           std::string* warning = nullptr);

// Byte-stable serializations.  CSV columns, in order: m, N, R, mean_Z,
// se_mean, theory_mean, var_Z, bound_rational, bound_irrational,
// ratio_rational, ratio_irrational, seed_base.  JSON mirrors EnsembleResult
// including z_counts.
std::string export_results_csv(const std::vector<EnsembleResult>& results);
std::string export_results_json(const std::vector<EnsembleResult>& results);
std::vector<EnsembleResult> import_results_json(const std::string& text);

}  // namespace arw
