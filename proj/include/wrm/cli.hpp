#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wrm/group.hpp"
#include "wrm/matrix.hpp"
#include "wrm/sequence.hpp"

namespace wrm::cli {

// Default master seed for `verify`; override with --seed or the WRM_SEED
// environment variable (the effective seed and its source are echoed in the
// report header).
inline constexpr std::uint64_t kDefaultSeed = 1729;

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kHypothesisViolation = 2,
  kVerificationFailure = 3,
};

// Matrix selection shared by gen/factor/det/act: recurrence parameters,
// boundary generator specs, and the order n.
struct MatrixSpec {
  RecurrenceParams params;
  SequenceSpec alpha = ConstantSpec{Rational(1)};
  SequenceSpec beta = ConstantSpec{Rational(1)};
  Index n = 1;

  WrmDescriptor materialize() const;

  // act's one-flag descriptor grammar: "x,y,z;<alpha spec>;<beta spec>".
  // n is left untouched.
  static MatrixSpec parse_desc(std::string_view text);
};

struct RunConfig {
  enum class Command { kGen, kFactor, kDet, kAct, kVerify };

  Command command = Command::kGen;
  std::optional<MatrixSpec> matrix;
  std::string out;  // json | csv | latex; empty picks the command default

  // factor
  std::string mode = "toeplitz";  // unifying | toeplitz | tan | mp
  std::optional<std::array<Rational, 4>> rsvw;

  // det
  std::string method = "bareiss";  // bareiss | toeplitz | closed
  bool report = false;

  // act
  std::string side = "left";  // left | right
  std::optional<std::pair<Rational, Rational>> element;
  bool check = false;
  bool raw = false;  // plain multiplication instead of the action twist

  // verify
  int trials = 100;
  std::uint64_t seed = kDefaultSeed;
  std::string seed_source = "default";  // default | flag | env
  std::string only_check;               // restrict to one named check
  std::optional<std::uint64_t> trial_seed;  // rerun a single trial (needs only_check)
};

// Execute a command, writing the document to `out` and diagnostics to `err`.
// Identical configs produce byte-identical documents.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace wrm::cli
