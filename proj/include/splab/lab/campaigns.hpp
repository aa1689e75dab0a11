#pragma once

#include "splab/lab/genus_one.hpp"
#include "splab/lab/json_io.hpp"
#include "splab/lab/sampling.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace splab::lab {

struct CampaignParams {
  std::size_t g = 2;
  std::size_t trials = 500;
  std::uint64_t seed = 1;
  std::size_t word_length = 12;
  long entry_bound = 2;
  /// Minimum hits per genus-one case (genus1_* campaigns only).
  std::size_t min_case_count = 10;
  /// 0 = hardware concurrency. Results do not depend on this.
  unsigned threads = 0;
};

struct Failure {
  std::size_t trial = 0;
  Json inputs = Json::array();
  std::string expected;
  std::string actual;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct Report {
  std::string campaign;
  CampaignParams params;
  std::string field;  // "Z", "Q" or "Z+Q"
  bool conjecture = false;
  std::size_t trials = 0;
  std::vector<Failure> failures;  // sorted by trial, then emission order
  std::map<std::string, std::size_t> coverage;
  long long elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
  Json to_json() const;
  /// The failures array alone; byte-identical across reruns.
  Json failures_json() const;
};

std::span<const std::string_view> campaign_names();
bool is_campaign(std::string_view name);
/// Campaigns whose identity is open over Q; their counterexamples are
/// evidence, not errors.
bool is_conjecture_campaign(std::string_view name);

/// Throws std::invalid_argument for an unknown campaign name or invalid
/// parameters. Counterexamples and internal assertion failures inside a trial
/// are recorded, never rethrown.
Report run_campaign(std::string_view name, const CampaignParams& params);

using Cochain = std::function<long(const SymplecticMap&)>;

/// (delta c)(f1, f2) = c(f1) + c(f2) - c(f1 f2).
long coboundary1(const Cochain& c, const SymplecticMap& f1, const SymplecticMap& f2);

/// phi(f1,f2) - nu(f1,f2) + Sig *_{f1 f2, l0} - Sig *_{f1, l0} - Sig *_{f2, l0}.
long walker_sum(const SymplecticMap& f1, const SymplecticMap& f2);

/// Genus-one trial sampler: trial t targets case t mod 6, where 5 means a
/// plain random rational word.
SymplecticMap genus_one_trial_map(std::size_t trial, Rng& rng, const CampaignParams& params);

}  // namespace splab::lab
