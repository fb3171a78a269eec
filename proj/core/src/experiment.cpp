#include "arw/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include <json.hpp>  // vendored nlohmann/json single header

#include "arw/theory.hpp"
#include "arw/wave.hpp"

namespace arw {

namespace {

constexpr long long kBudgetMaxM = 100000000;  // 1e8, desk-scale factorization
constexpr long long kBudgetMaxN = 256;

// Shortest round-trip decimal form; keeps exports byte-stable without
// locale or stream-state surprises.
std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

EnsembleResult run_ensemble(const ExperimentConfig& config, long long m) {
  if (config.samples < 2) {
    throw std::invalid_argument("ensemble needs at least 2 samples");
  }
  const EnergyLevel level = enumerate_lattice_points(m);
  const Segment segment{config.direction, config.length, {0.0, 0.0}};
  const long long R = config.samples;

  EnsembleResult res;
  res.m = m;
  res.n_points = level.n_points;
  res.samples = R;
  res.seed_base = config.seed_base;
  res.z_counts.assign(R, 0);

  // Sample i depends only on seed_base + i, so any thread may take any
  // index; results land by index and the aggregation below is sequential.
  const int workers = std::clamp<long long>(
      std::min<long long>(config.workers, R), 1, 64);
  std::atomic<long long> cursor{0};
  auto body = [&]() {
    for (;;) {
      const long long i = cursor.fetch_add(1);
      if (i >= R) break;
      const WaveSample sample =
          sample_wave(level, config.seed_base + static_cast<std::uint64_t>(i));
      res.z_counts[i] =
          count_nodal_intersections(sample, segment, config.oversampling).count;
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();

  long long sum = 0;
  for (long long z : res.z_counts) sum += z;
  res.mean_z = static_cast<double>(sum) / static_cast<double>(R);
  double ss = 0.0;
  for (long long z : res.z_counts) {
    const double dev = static_cast<double>(z) - res.mean_z;
    ss += dev * dev;
  }
  res.var_z = ss / static_cast<double>(R - 1);
  res.se_mean = std::sqrt(res.var_z / static_cast<double>(R));
  res.theory_mean = expected_intersections(m, config.length);

  const double b_rat = bound_rational_value(m, level.n_points);
  const double b_irr = bound_irrational_value(m, level.n_points);
  res.bound_values = {{"rational", b_rat},
                      {"irrational", b_irr},
                      {"conjectural_or_gapped", b_rat}};
  res.ratio_var_to_bound = {{"rational", res.var_z / b_rat},
                            {"irrational", res.var_z / b_irr},
                            {"conjectural_or_gapped", res.var_z / b_rat}};
  return res;
}

SweepSpec SweepSpec::powers(long long base, int k_max) {
  SweepSpec s;
  s.kind = Kind::Powers;
  s.base = base;
  s.k_max = k_max;
  return s;
}

SweepSpec SweepSpec::prime_products(long long bound) {
  SweepSpec s;
  s.kind = Kind::PrimeProducts;
  s.bound = bound;
  return s;
}

SweepSpec SweepSpec::explicit_list(std::vector<long long> m_values) {
  SweepSpec s;
  s.kind = Kind::Explicit;
  s.levels = std::move(m_values);
  return s;
}

std::vector<long long> generate_sweep_levels(const SweepSpec& spec,
                                             std::string* warning) {
  std::vector<long long> out;
  auto within_budget = [](long long m) {
    return m <= kBudgetMaxM && count_representations(m) <= kBudgetMaxN;
  };
  auto note_truncation = [&](const std::string& what) {
    if (warning) {
      *warning =
          "sweep truncated: " + what + " (budget: m <= 1e8, N_m <= 256)";
    }
  };
  switch (spec.kind) {
    case SweepSpec::Kind::Powers: {
      if (spec.k_max < 1) throw std::invalid_argument("k_max must be >= 1");
      if (!classify_sum_of_two_squares(spec.base).is_member) {
        throw std::domain_error("powers base " + std::to_string(spec.base) +
                                " is not representable");
      }
      long long m = 1;
      for (int k = 1; k <= spec.k_max; ++k) {
        if (m > kBudgetMaxM / spec.base) {
          note_truncation(std::to_string(spec.base) + "^" + std::to_string(k) +
                          " exceeds the m budget");
          break;
        }
        m *= spec.base;
        if (!within_budget(m)) {
          note_truncation("m = " + std::to_string(m));
          break;
        }
        out.push_back(m);
      }
      break;
    }
    case SweepSpec::Kind::PrimeProducts: {
      const long long cap = std::min(spec.bound, kBudgetMaxM);
      long long m = 1;
      for (long long p = 5;; p += 4) {
        // advance to the next prime = 1 (mod 4); stepping by 4 keeps the
        // residue class
        while (true) {
          bool prime = true;
          for (long long q = 2; q * q <= p; ++q) {
            if (p % q == 0) {
              prime = false;
              break;
            }
          }
          if (prime) break;
          p += 4;
        }
        if (m > cap / p) {
          note_truncation("next factor " + std::to_string(p) +
                          " exceeds the m bound " + std::to_string(cap));
          break;
        }
        m *= p;
        if (count_representations(m) > kBudgetMaxN) {
          note_truncation("m = " + std::to_string(m) + " exceeds the N budget");
          break;
        }
        out.push_back(m);
      }
      break;
    }
    case SweepSpec::Kind::Explicit: {
      for (long long m : spec.levels) {
        if (!classify_sum_of_two_squares(m).is_member) {
          throw std::domain_error("m = " + std::to_string(m) +
                                  " is not representable");
        }
        if (!within_budget(m)) {
          note_truncation("m = " + std::to_string(m) + " skipped");
          continue;
        }
        out.push_back(m);
      }
      break;
    }
  }
  return out;
}

std::vector<EnsembleResult> sweep_sequence(const SweepSpec& spec,
                                           const ExperimentConfig& config,
                                           std::string* warning) {
  std::vector<EnsembleResult> results;
  for (long long m : generate_sweep_levels(spec, warning)) {
    results.push_back(run_ensemble(config, m));
  }
  return results;
}

std::string export_results_csv(const std::vector<EnsembleResult>& results) {
  std::string out =
      "m,N,R,mean_Z,se_mean,theory_mean,var_Z,bound_rational,"
      "bound_irrational,ratio_rational,ratio_irrational,seed_base\n";
  for (const auto& r : results) {
    out += std::to_string(r.m);
    out += ',';
    out += std::to_string(r.n_points);
    out += ',';
    out += std::to_string(r.samples);
    out += ',';
    out += format_double(r.mean_z);
    out += ',';
    out += format_double(r.se_mean);
    out += ',';
    out += format_double(r.theory_mean);
    out += ',';
    out += format_double(r.var_z);
    out += ',';
    out += format_double(r.bound_values.at("rational"));
    out += ',';
    out += format_double(r.bound_values.at("irrational"));
    out += ',';
    out += format_double(r.ratio_var_to_bound.at("rational"));
    out += ',';
    out += format_double(r.ratio_var_to_bound.at("irrational"));
    out += ',';
    out += std::to_string(r.seed_base);
    out += '\n';
  }
  return out;
}

std::string export_results_json(const std::vector<EnsembleResult>& results) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["m"] = r.m;
    j["N"] = r.n_points;
    j["R"] = r.samples;
    j["z_counts"] = r.z_counts;
    j["mean_Z"] = r.mean_z;
    j["var_Z"] = r.var_z;
    j["se_mean"] = r.se_mean;
    j["theory_mean"] = r.theory_mean;
    j["bound_values"] = r.bound_values;
    j["ratio_var_to_bound"] = r.ratio_var_to_bound;
    j["seed_base"] = r.seed_base;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::vector<EnsembleResult> import_results_json(const std::string& text) {
  const auto arr = nlohmann::json::parse(text);
  if (!arr.is_array()) {
    throw std::invalid_argument("results JSON must be an array");
  }
  std::vector<EnsembleResult> out;
  out.reserve(arr.size());
  for (const auto& j : arr) {
    EnsembleResult r;
    r.m = j.at("m").get<long long>();
    r.n_points = j.at("N").get<long long>();
    r.samples = j.at("R").get<long long>();
    r.z_counts = j.at("z_counts").get<std::vector<long long>>();
    r.mean_z = j.at("mean_Z").get<double>();
    r.var_z = j.at("var_Z").get<double>();
    r.se_mean = j.at("se_mean").get<double>();
    r.theory_mean = j.at("theory_mean").get<double>();
    for (const auto& [key, val] : j.at("bound_values").items()) {
      r.bound_values[key] = val.is_null()
                                ? std::numeric_limits<double>::infinity()
                                : val.get<double>();
    }
    for (const auto& [key, val] : j.at("ratio_var_to_bound").items()) {
      r.ratio_var_to_bound[key] = val.is_null()
                                      ? std::numeric_limits<double>::infinity()
                                      : val.get<double>();
    }
    r.seed_base = j.at("seed_base").get<std::uint64_t>();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace arw
