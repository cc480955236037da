#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wrm/matrix.hpp"
#include "wrm/rng.hpp"
#include "wrm/sequence.hpp"

namespace wrm::verify {

// Independent determinant oracle: expansion along the first row. Exponential,
// meant for cross-checks at small n only.
Rational det_cofactor(const RatMatrix& a);

struct TrialFailure {
  std::uint64_t trial_seed;
  std::string detail;
};

struct CheckResult {
  std::string name;
  int trials = 0;
  std::uint64_t rejections = 0;
  std::vector<TrialFailure> failures;  // at most a handful are kept

  bool passed() const { return failures.empty(); }
};

// One randomized trial of an exact identity; returns a counterexample
// description on failure.
using TrialFn = std::function<std::optional<std::string>(Rng&)>;

struct Check {
  std::string name;
  TrialFn trial;
  bool deterministic = false;  // runs once regardless of the trial count
};

// Registry of every module invariant, in a fixed order.
const std::vector<Check>& all_checks();

const Check* find_check(std::string_view name);

// Trial t runs on its own seed derived from (master_seed, name, t), so a
// failure reproduces from the printed per-trial seed alone.
CheckResult run_check(const Check& check, std::uint64_t master_seed, int trials);

std::optional<std::string> run_single_trial(const Check& check, std::uint64_t trial_seed);

// Generators shared with the acceptance suite.
RecurrenceParams random_params(Rng& rng);
BoundaryPair random_boundary(Rng& rng, Index n);
// Random generator spec whose first term is `start` (so alpha/beta pairs are
// compatible); kind is sampled across all five spec forms.
SequenceSpec random_spec(Rng& rng, Index n, const Rational& start);

}  // namespace wrm::verify
