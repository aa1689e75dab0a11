// splab: exact invariants of symplectic matrices and verification campaigns.

#include "splab/extension.hpp"
#include "splab/invariants.hpp"
#include "splab/lab/campaigns.hpp"
#include "splab/lab/json_io.hpp"
#include "splab/maslov.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace splab;
using splab::lab::Json;

std::vector<SymplecticMap> load_matrices(const std::vector<std::string>& files) {
  std::vector<SymplecticMap> out;
  for (const auto& f : files) out.push_back(lab::matrix_from_json(lab::read_json_file(f)));
  return out;
}

std::vector<OrientedLagrangian> load_lagrangians(const std::vector<std::string>& files) {
  std::vector<OrientedLagrangian> out;
  for (const auto& f : files) out.push_back(lab::lagrangian_from_json(lab::read_json_file(f)));
  return out;
}

template <typename T>
const std::vector<T>& require_count(const std::vector<T>& items, std::size_t n,
                                    const std::string& what) {
  if (items.size() != n)
    throw CLI::ValidationError(what, "expected " + std::to_string(n) + " input file(s), got " +
                                         std::to_string(items.size()));
  return items;
}

std::string compute(const std::string& quantity, const std::vector<std::string>& matrix_files,
                    const std::vector<std::string>& lagrangian_files) {
  if (quantity == "eps" || quantity == "mu") {
    const auto ls = load_lagrangians(lagrangian_files);
    if (quantity == "eps") {
      require_count(ls, 2, "--lagrangians");
      return std::to_string(epsilon(ls[0], ls[1]));
    }
    require_count(ls, 3, "--lagrangians");
    return std::to_string(maslov_index(ls[0], ls[1], ls[2]));
  }

  const auto fs = load_matrices(matrix_files);
  if (quantity == "phi" || quantity == "nu") {
    require_count(fs, 2, "--matrices");
    return std::to_string(quantity == "phi" ? phi(fs[0], fs[1]) : nu_cocycle(fs[0], fs[1]));
  }
  require_count(fs, 1, "--matrix");
  const SymplecticMap& f = fs.front();
  if (quantity == "s") return s_of_map(f).str();
  if (quantity == "n") return std::to_string(n_of_map(f));
  if (quantity == "j") return std::to_string(j_of_map(f));
  return std::to_string(k_of_map(f));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Maslov-index invariants on the symplectic group"};
  app.require_subcommand(1);

  // compute
  auto* compute_cmd = app.add_subcommand("compute", "Evaluate one invariant");
  std::string quantity;
  std::string matrix_file;
  std::vector<std::string> matrix_files;
  std::vector<std::string> lagrangian_files;
  compute_cmd->add_option("quantity", quantity, "s | n | j | k | eps | mu | phi | nu")
      ->required()
      ->check(CLI::IsMember({"s", "n", "j", "k", "eps", "mu", "phi", "nu"}));
  auto* matrix_opt = compute_cmd->add_option("--matrix", matrix_file, "Matrix JSON file");
  compute_cmd->add_option("--matrices", matrix_files, "Matrix JSON files")
      ->excludes(matrix_opt);
  compute_cmd->add_option("--lagrangians", lagrangian_files, "Lagrangian JSON files");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run a randomized verification campaign");
  std::string campaign;
  lab::CampaignParams params;
  std::string out_file;
  verify_cmd->add_option("campaign", campaign, "Campaign name")->required();
  verify_cmd->add_option("--g", params.g, "Genus")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--trials", params.trials, "Number of trials")->required();
  verify_cmd->add_option("--seed", params.seed, "Master seed")->required();
  verify_cmd->add_option("--len", params.word_length, "Transvections per sample")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--bound", params.entry_bound, "Entry bound for transvection data")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--threads", params.threads, "Worker threads (0 = all cores)");
  verify_cmd->add_option("--out", out_file, "Write the JSON report here");

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "Emit a random symplectic matrix");
  lab::SampleParams sample;
  bool rational = false;
  sample_cmd->add_option("--g", sample.g, "Genus")->required()->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", sample.seed, "Seed")->required();
  sample_cmd->add_flag("--rational", rational, "Sample Q-points instead of Sp(g, Z)");
  sample_cmd->add_option("--len", sample.word_length, "Transvections per sample")
      ->check(CLI::PositiveNumber);
  sample_cmd->add_option("--bound", sample.entry_bound, "Entry bound")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute_cmd) {
      if (!matrix_file.empty()) matrix_files = {matrix_file};
      std::cout << compute(quantity, matrix_files, lagrangian_files) << '\n';
      return 0;
    }

    if (*sample_cmd) {
      sample.integral = !rational;
      std::cout << lab::matrix_to_json(lab::random_sp(sample)).dump() << '\n';
      return 0;
    }

    if (!lab::is_campaign(campaign)) {
      std::cerr << "unknown campaign '" << campaign << "'; available:";
      for (auto name : lab::campaign_names()) std::cerr << ' ' << name;
      std::cerr << '\n';
      return 2;
    }
    const lab::Report report = lab::run_campaign(campaign, params);
    const Json j = report.to_json();
    if (out_file.empty()) {
      std::cout << j.dump(2) << '\n';
    } else {
      std::ofstream out(out_file);
      if (!out) throw std::runtime_error("cannot write " + out_file);
      out << j.dump(2) << '\n';
      std::cout << report.campaign << ": g=" << report.params.g << " trials=" << report.trials
                << " failures=" << report.failures.size() << " elapsed_ms=" << report.elapsed_ms
                << '\n';
    }
    if (!report.passed()) {
      std::cerr << (report.conjecture ? "counterexample(s) to an open identity"
                                      : "identity violated")
                << " in " << report.campaign << ":\n";
      for (const auto& f : report.failures)
        std::cerr << "  trial " << f.trial << ": expected " << f.expected << ", got " << f.actual
                  << '\n';
    }
    return report.passed() || report.conjecture ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
