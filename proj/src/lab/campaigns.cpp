#include "splab/lab/campaigns.hpp"

#include "splab/maslov.hpp"
#include "splab/mix.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <thread>

namespace splab::lab {

long coboundary1(const Cochain& c, const SymplecticMap& f1, const SymplecticMap& f2) {
  return c(f1) + c(f2) - c(f1 * f2);
}

long walker_sum(const SymplecticMap& f1, const SymplecticMap& f2) {
  // Sig(*_{f, lambda0}) = -j(f)
  return phi(f1, f2) - nu_cocycle(f1, f2) - j_of_map(f1 * f2) + j_of_map(f1) + j_of_map(f2);
}

SymplecticMap genus_one_trial_map(std::size_t trial, Rng& rng, const CampaignParams& params) {
  const std::size_t slot = trial % 6;
  if (slot < kAllSl2Cases.size()) return sample_sl2_case(kAllSl2Cases[slot], rng, params.entry_bound);
  SampleParams sp{1, params.word_length, params.entry_bound, 0, false};
  return random_sp(sp, rng);
}

namespace {

struct TrialOutcome {
  std::vector<Failure> failures;
  std::optional<Sl2Case> label;
};

using TrialFn = TrialOutcome (*)(std::size_t trial, Rng& rng, const CampaignParams& p);

struct CampaignDef {
  std::string_view name;
  std::string_view field;
  bool conjecture;
  bool genus_one;
  TrialFn run;
};

SampleParams sample_params(const CampaignParams& p, bool integral) {
  return SampleParams{p.g, p.word_length, p.entry_bound, 0, integral};
}

ExtElement random_ext(const CampaignParams& p, bool integral, Rng& rng) {
  SymplecticMap f = random_sp(sample_params(p, integral), rng);
  return {std::move(f), Integer(rng.uniform(-10, 10))};
}

Failure make_failure(std::size_t trial, Json inputs, std::string expected, std::string actual) {
  return Failure{trial, std::move(inputs), std::move(expected), std::move(actual)};
}

std::string str(long v) { return std::to_string(v); }

// --- s(f) i^{n(f)} = 1 ------------------------------------------------------

TrialOutcome theorem_trial(std::size_t t, Rng& rng, const CampaignParams& p, bool integral) {
  TrialOutcome out;
  const SymplecticMap f = random_sp(sample_params(p, integral), rng);
  const FourthRoot product = s_of_map(f) * FourthRoot::i_pow(n_of_map(f));
  if (!product.is_one())
    out.failures.push_back(make_failure(t, Json::array({matrix_to_json(f)}), "1", product.str()));
  return out;
}

TrialOutcome main_theorem(std::size_t t, Rng& rng, const CampaignParams& p) {
  return theorem_trial(t, rng, p, true);
}

TrialOutcome conjecture_real(std::size_t t, Rng& rng, const CampaignParams& p) {
  return theorem_trial(t, rng, p, false);
}

// --- genus one --------------------------------------------------------------

TrialOutcome genus1_table(std::size_t t, Rng& rng, const CampaignParams& p) {
  TrialOutcome out;
  const SymplecticMap f = genus_one_trial_map(t, rng, p);
  out.label = classify_sl2(f);
  const long expected = predicted_n_sl2(f);
  const long actual = n_of_map(f);
  if (expected != actual)
    out.failures.push_back(make_failure(t, Json::array({matrix_to_json(f)}),
                                        "n=" + str(expected) + " (" +
                                            std::string(to_string(*out.label)) + ")",
                                        "n=" + str(actual)));
  return out;
}

TrialOutcome genus1_s(std::size_t t, Rng& rng, const CampaignParams& p) {
  TrialOutcome out;
  const SymplecticMap f = genus_one_trial_map(t, rng, p);
  out.label = classify_sl2(f);
  const FourthRoot expected = predicted_s_sl2(f);
  const FourthRoot actual = s_of_map(f);
  if (expected != actual)
    out.failures.push_back(
        make_failure(t, Json::array({matrix_to_json(f)}), expected.str(), actual.str()));
  return out;
}

// --- squared identity and its parity form -----------------------------------

TrialOutcome square_identity(std::size_t t, Rng& rng, const CampaignParams& p) {
  TrialOutcome out;
  const SymplecticMap f = random_sp(sample_params(p, false), rng);
  const FourthRoot s = s_of_map(f);
  const FourthRoot lhs = s * s;
  const FourthRoot rhs = FourthRoot::i_pow(2 * n_of_map(f));
  if (lhs != rhs)
    out.failures.push_back(make_failure(t, Json::array({matrix_to_json(f)}), rhs.str(), lhs.str()));
  return out;
}

TrialOutcome parity(std::size_t t, Rng& rng, const CampaignParams& p) {
  TrialOutcome out;
  const SymplecticMap f = random_sp(sample_params(p, false), rng);
  const auto l0 = standard_lagrangian(p.g);
  const long lhs = static_cast<long>(p.g) +
                   static_cast<long>(intersect(l0.subspace(), pushforward(f, l0).subspace()).dim());
  const long rhs = signature(star_lambda(f, l0)).signature() -
                   static_cast<long>(image_basis(f.minus_identity()).dim());
  if ((lhs - rhs) % 2 != 0)
    out.failures.push_back(make_failure(t, Json::array({matrix_to_json(f)}),
                                        "g + dim(l0 ∩ f l0) ≡ Sig - dim(f-1)V (mod 2)",
                                        "lhs=" + str(lhs) + " rhs=" + str(rhs)));
  return out;
}

// --- 2-cochain identities ---------------------------------------------------

TrialOutcome turaev_mod4(std::size_t t, Rng& rng, const CampaignParams& p) {
  TrialOutcome out;
  for (const bool integral : {true, false}) {
    const SymplecticMap f1 = random_sp(sample_params(p, integral), rng);
    const SymplecticMap f2 = random_sp(sample_params(p, integral), rng);
    const long dk = coboundary1(k_of_map, f1, f2);
    const long ph = phi(f1, f2);
    if (mod_floor(Integer(dk - ph), 4) != 0)
      out.failures.push_back(make_failure(t, Json::array({matrix_to_json(f1), matrix_to_json(f2)}),
                                          "delta k ≡ phi (mod 4)",
                                          "delta k=" + str(dk) + " phi=" + str(ph)));
  }
  return out;
}

TrialOutcome walker_trial(std::size_t t, Rng& rng, const CampaignParams& p, bool integral) {
  TrialOutcome out;
  const SymplecticMap f1 = random_sp(sample_params(p, integral), rng);
  const SymplecticMap f2 = random_sp(sample_params(p, integral), rng);
  const long w = walker_sum(f1, f2);
  const bool ok = integral ? w == 0 : mod_floor(Integer(w), 4) == 0;
  if (!ok)
    out.failures.push_back(make_failure(t, Json::array({matrix_to_json(f1), matrix_to_json(f2)}),
                                        integral ? "0" : "0 (mod 4)", str(w)));
  return out;
}

TrialOutcome walker_exact(std::size_t t, Rng& rng, const CampaignParams& p) {
  return walker_trial(t, rng, p, true);
}

TrialOutcome walker_mod4_real(std::size_t t, Rng& rng, const CampaignParams& p) {
  return walker_trial(t, rng, p, false);
}

// --- extension --------------------------------------------------------------

TrialOutcome cocycle_assoc(std::size_t t, Rng& rng, const CampaignParams& p) {
  TrialOutcome out;
  const bool integral = t % 2 == 0;
  const ExtElement e1 = random_ext(p, integral, rng);
  const ExtElement e2 = random_ext(p, integral, rng);
  const ExtElement e3 = random_ext(p, integral, rng);
  const ExtElement lhs = ext_mul(ext_mul(e1, e2), e3);
  const ExtElement rhs = ext_mul(e1, ext_mul(e2, e3));
  if (!(lhs == rhs))
    out.failures.push_back(make_failure(t, Json::array({ext_to_json(e1), ext_to_json(e2), ext_to_json(e3)}),
                                        "level " + rhs.m.get_str(), "level " + lhs.m.get_str()));
  return out;
}

template <FourthRoot (*Chi)(const ExtElement&)>
TrialOutcome character_trial(std::size_t t, Rng& rng, const CampaignParams& p, bool integral) {
  TrialOutcome out;
  const ExtElement e1 = random_ext(p, integral, rng);
  const ExtElement e2 = random_ext(p, integral, rng);
  const FourthRoot lhs = Chi(ext_mul(e1, e2));
  const FourthRoot rhs = Chi(e1) * Chi(e2);
  if (lhs != rhs)
    out.failures.push_back(
        make_failure(t, Json::array({ext_to_json(e1), ext_to_json(e2)}), rhs.str(), lhs.str()));
  return out;
}

TrialOutcome character_s(std::size_t t, Rng& rng, const CampaignParams& p) {
  return character_trial<chi_s>(t, rng, p, false);
}

TrialOutcome character_r_int(std::size_t t, Rng& rng, const CampaignParams& p) {
  return character_trial<chi_r>(t, rng, p, true);
}

TrialOutcome character_r_real(std::size_t t, Rng& rng, const CampaignParams& p) {
  return character_trial<chi_r>(t, rng, p, false);
}

// --- stabilization ----------------------------------------------------------

TrialOutcome stabilization(std::size_t t, Rng& rng, const CampaignParams& p) {
  TrialOutcome out;
  const SymplecticMap f = random_sp(sample_params(p, t % 2 == 0), rng);
  const SymplecticMap big = stabilize(f);
  const FourthRoot s0 = s_of_map(f), s1 = s_of_map(big);
  const long n0 = n_of_map(f), n1 = n_of_map(big);
  if (s0 != s1 || n0 != n1)
    out.failures.push_back(make_failure(t, Json::array({matrix_to_json(f)}),
                                        "s=" + s0.str() + " n=" + str(n0),
                                        "s=" + s1.str() + " n=" + str(n1)));
  return out;
}

// --- well-definedness -------------------------------------------------------

TrialOutcome well_definedness(std::size_t t, Rng& rng, const CampaignParams& p) {
  TrialOutcome out;
  const bool integral = t % 2 == 0;
  const SampleParams sp = sample_params(p, integral);
  const std::size_t g = p.g;

  const OrientedLagrangian l1 = random_lagrangian(sp, rng);
  OrientedLagrangian l2 = l1;
  switch (t % 3) {
    case 0: l2 = random_lagrangian(sp, rng); break;
    case 1: {
      Vec v(2 * g);
      do {
        for (auto& x : v) x = rng.rational(p.entry_bound, integral);
      } while (is_zero(v));
      l2 = pushforward(transvection(v, rng.nonzero_rational(p.entry_bound, integral)), l1);
      break;
    }
    default: l2 = OrientedLagrangian(g, rebase(l1.basis(), random_invertible(g, rng, rng.coin())));
  }
  const Json lag_inputs = Json::array({lagrangian_to_json(l1), lagrangian_to_json(l2)});
  auto report = [&](Json inputs, std::string what, std::string expected, std::string actual) {
    out.failures.push_back(
        make_failure(t, std::move(inputs), what + ": " + expected, what + ": " + actual));
  };

  const int e = epsilon(l1, l2);
  for (const bool positive : {true, false}) {
    const int want = positive ? e : -e;
    const OrientedLagrangian r1(g, rebase(l1.basis(), random_invertible(g, rng, true)));
    QMatrix c = random_invertible(g, rng, true);
    if (!positive)
      for (std::size_t i = 0; i < g; ++i) c(i, 0) = -c(i, 0);
    const OrientedLagrangian r2(g, rebase(l2.basis(), c));
    const int got = epsilon(r1, r2);
    if (got != want) report(lag_inputs, positive ? "epsilon positive rebase" : "epsilon negative rebase",
                            str(want), str(got));
  }

  const auto kappa = intersect(l1.subspace(), l2.subspace()).basis();
  if (!kappa.empty()) {
    const auto other = rebase(kappa, random_invertible(kappa.size(), rng, rng.coin()));
    const int got = epsilon_with_kappa(l1, l2, other);
    if (got != e) report(lag_inputs, "epsilon kappa orientation", str(e), str(got));
  }

  const SymplecticMap f1 = random_sp(sp, rng);
  const SymplecticMap f2 = random_sp(sp, rng);
  const Json map_inputs = Json::array({matrix_to_json(f1), matrix_to_json(f2)});
  const auto l0 = standard_lagrangian(g);
  const PreimagePolicy shifted{rng.next() | 1U};

  const StarMatrix star = star_matrix(f1);
  if (!(star_matrix(f1, shifted).gram == star.gram))
    report(map_inputs, "star preimage choice", "equal", "differs");

  const SymBilinearForm restricted = star_lambda(f1, l0);
  if (!restricted.gram().is_symmetric()) report(map_inputs, "star_lambda symmetry", "symmetric", "asymmetric");
  if (!(star_lambda(f1, l0, shifted).gram() == restricted.gram()))
    report(map_inputs, "star_lambda preimage choice", "equal", "differs");

  const SymBilinearForm pair = pair_form(f1, f2);
  if (!pair.gram().is_symmetric()) report(map_inputs, "pair_form symmetry", "symmetric", "asymmetric");
  if (!(pair_form(f1, f2, shifted).gram() == pair.gram()))
    report(map_inputs, "pair_form preimage choice", "equal", "differs");

  const auto m1 = maslov_form(l0, pushforward(f1, l0), pushforward(f1 * f2, l0));
  if (!(maslov_form(l0, pushforward(f1, l0), pushforward(f1 * f2, l0), shifted).gram() == m1.gram()))
    report(map_inputs, "maslov_form decomposition choice", "equal", "differs");

  if (!star.basis.empty()) {
    const auto rebased = rebase(star.basis, random_invertible(star.basis.size(), rng, false));
    const int got = sign(det(star_gram_on(f1, rebased, shifted)));
    const int want = det_sign_star(f1);
    if (got != want) report(map_inputs, "det_sign_star basis", str(want), str(got));
  }

  const FourthRoot s = s_of_map(f1);
  const FourthRoot s_flipped = s_of_map(f1, l0.reversed());
  if (s != s_flipped) report(map_inputs, "s orientation of lambda0", s.str(), s_flipped.str());
  return out;
}

constexpr std::array<CampaignDef, 15> kCampaigns = {{
    {"main_theorem", "Z", false, false, main_theorem},
    {"genus1_table", "Q", false, true, genus1_table},
    {"genus1_s", "Q", false, true, genus1_s},
    {"conjecture_real", "Q", true, false, conjecture_real},
    {"square_identity", "Q", false, false, square_identity},
    {"parity", "Q", false, false, parity},
    {"turaev_mod4", "Z+Q", false, false, turaev_mod4},
    {"walker_exact", "Z", false, false, walker_exact},
    {"walker_mod4_real", "Q", true, false, walker_mod4_real},
    {"cocycle_assoc", "Z+Q", false, false, cocycle_assoc},
    {"character_s", "Q", false, false, character_s},
    {"character_r_int", "Z", false, false, character_r_int},
    {"character_r_real", "Q", true, false, character_r_real},
    {"stabilization", "Z+Q", false, false, stabilization},
    {"well_definedness", "Z+Q", false, false, well_definedness},
}};

constexpr auto kNames = [] {
  std::array<std::string_view, kCampaigns.size()> names{};
  for (std::size_t i = 0; i < kCampaigns.size(); ++i) names[i] = kCampaigns[i].name;
  return names;
}();

const CampaignDef* find_campaign(std::string_view name) {
  for (const auto& c : kCampaigns)
    if (c.name == name) return &c;
  return nullptr;
}

TrialOutcome run_one(const CampaignDef& def, std::size_t trial, const CampaignParams& p) {
  Rng rng(mix_seed(p.seed, trial));
  try {
    return def.run(trial, rng, p);
  } catch (const std::exception& e) {
    TrialOutcome out;
    out.failures.push_back(make_failure(trial, Json::array(), "no exception",
                                        std::string("exception: ") + e.what()));
    return out;
  }
}

// Evaluates trials [begin, end) into outcomes[begin, end). Each trial depends
// only on its index, so scheduling cannot change the results.
void run_range(const CampaignDef& def, const CampaignParams& p, std::size_t begin,
               std::size_t end, std::vector<TrialOutcome>& outcomes) {
  outcomes.resize(end);
  unsigned workers = p.threads != 0 ? p.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, end - begin));
  std::atomic<std::size_t> next{begin};
  auto work = [&] {
    for (std::size_t i = next++; i < end; i = next++) outcomes[i] = run_one(def, i, p);
  };
  if (workers <= 1) {
    work();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
}

}  // namespace

std::span<const std::string_view> campaign_names() { return kNames; }

bool is_campaign(std::string_view name) { return find_campaign(name) != nullptr; }

bool is_conjecture_campaign(std::string_view name) {
  const auto* c = find_campaign(name);
  return c != nullptr && c->conjecture;
}

Report run_campaign(std::string_view name, const CampaignParams& params) {
  const CampaignDef* def = find_campaign(name);
  if (def == nullptr) throw std::invalid_argument("unknown campaign: " + std::string(name));
  CampaignParams p = params;
  if (def->genus_one) p.g = 1;
  sample_params(p, true).validate();

  const auto start = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> outcomes;
  run_range(*def, p, 0, p.trials, outcomes);

  Report report;
  if (def->genus_one) {
    // Top up until every case has min_case_count hits; each block of six
    // trials visits every case at least once.
    auto count = [&](Sl2Case c) {
      return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(),
                                                    [c](const auto& o) { return o.label == c; }));
    };
    auto short_of_coverage = [&] {
      return std::any_of(kAllSl2Cases.begin(), kAllSl2Cases.end(),
                         [&](Sl2Case c) { return count(c) < p.min_case_count; });
    };
    while (short_of_coverage()) {
      const std::size_t begin = outcomes.size();
      run_range(*def, p, begin, begin + 6, outcomes);
    }
    for (Sl2Case c : kAllSl2Cases) report.coverage[std::string(to_string(c))] = count(c);
  }

  report.campaign = std::string(def->name);
  report.params = p;
  report.field = std::string(def->field);
  report.conjecture = def->conjecture;
  report.trials = outcomes.size();
  for (auto& o : outcomes)
    for (auto& f : o.failures) report.failures.push_back(std::move(f));
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

Json Report::failures_json() const {
  Json out = Json::array();
  for (const auto& f : failures)
    out.push_back(Json{{"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual},
                       {"trial", f.trial}});
  return out;
}

Json Report::to_json() const {
  Json j{{"campaign", campaign},
         {"params",
          {{"g", params.g},
           {"trials", params.trials},
           {"seed", params.seed},
           {"word_length", params.word_length},
           {"entry_bound", params.entry_bound},
           {"field", field}}},
         {"conjecture", conjecture},
         {"trials", trials},
         {"failures", failures_json()},
         {"elapsed_ms", elapsed_ms}};
  if (!coverage.empty()) j["coverage"] = coverage;
  return j;
}

}  // namespace splab::lab
