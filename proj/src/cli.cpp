#include "wrm/cli.hpp"

#include <sstream>

#include "wrm/determinants.hpp"
#include "wrm/factorization.hpp"
#include "wrm/io.hpp"
#include "wrm/verify.hpp"

namespace wrm::cli {

namespace {

// ---- det --method closed: formula selection ------------------------------

bool is_power_prefix(const RatVector& s, const Rational& base) {
  Rational expected(1);
  for (Index i = 0; i < s.size(); ++i) {
    if (s(i) != expected) return false;
    expected *= base;
  }
  return true;
}

bool is_index_prefix(const RatVector& s, int step) {
  for (Index i = 0; i < s.size(); ++i)
    if (s(i) != Rational(step * static_cast<long>(i))) return false;
  return true;
}

struct ClosedForm {
  Rational value;
  std::string formula;
};

ClosedForm closed_form_det(const WrmDescriptor& d) {
  const auto& [x, y, z] = d.params;
  const RatVector& alpha = d.boundary.alpha();
  const RatVector& beta = d.boundary.beta();
  const bool unit_params = x == Rational(1) && z == Rational(1);

  if (!(y + x * z).is_zero() && is_middle_diagonal(d))
    return {det_matched_geometric(d.boundary.gamma(), d.params, d.n()), "matched_geometric"};

  if (unit_params && y != Rational(-1) && alpha(0) == Rational(1)) {
    const Rational a = d.n() >= 2 ? alpha(1) : Rational(1);
    const Rational b = d.n() >= 2 ? beta(1) : Rational(1);
    if (is_power_prefix(alpha, a) && is_power_prefix(beta, b))
      return {det_unit_geometric(a, b, y, d.n()), "unit_geometric"};
  }

  if (unit_params && y != Rational(-1) && d.n() % 2 == 0 && is_index_prefix(alpha, 1) &&
      is_index_prefix(beta, -1))
    return {det_arithmetic_pm(y, d.n() / 2), "arithmetic_pm"};

  throw hypothesis_error("no closed determinant form applies to this matrix");
}

// ---- subcommands ----------------------------------------------------------

int run_gen(const RunConfig& config, std::ostream& out) {
  const RatMatrix m = build_wrm(config.matrix->materialize());
  const std::string format = config.out.empty() ? "csv" : config.out;
  if (format == "csv")
    out << to_csv(m);
  else if (format == "json")
    out << to_json(m).dump(2) << '\n';
  else if (format == "latex")
    out << to_latex(m);
  else
    throw parse_error("unknown output format '" + format + "'");
  return kOk;
}

int run_factor(const RunConfig& config, std::ostream& out) {
  const WrmDescriptor d = config.matrix->materialize();
  Factorization f = [&] {
    if (config.mode == "unifying") {
      if (config.rsvw) {
        const auto& [r, s, v, w] = *config.rsvw;
        return unifying_factorization(d, r, s, v, w);
      }
      // default group elements: the choice that flattens the middle to a
      // plain Toeplitz factor
      const auto& [x, y, z] = d.params;
      return unifying_factorization(d, Rational(1), z, y + x * z, x);
    }
    if (config.mode == "toeplitz") {
      const auto& [x, y, z] = d.params;
      if ((y + x * z).is_zero())
        throw hypothesis_error(
            "toeplitz factorization requires y + xz != 0; use --mode unifying with --rsvw");
      return toeplitz_factorization(d);
    }
    if (config.mode == "tan") return tan_factorization(d);
    if (config.mode == "mp") return mp_factorization(d);
    throw parse_error("unknown factor mode '" + config.mode + "'");
  }();

  const bool verified = verify_factorization(f);
  const std::string format = config.out.empty() ? "json" : config.out;
  if (format == "json") {
    Json doc{{"mode", config.mode},
             {"claimed", to_json(f.claimed)},
             {"middle_descriptor", to_json(f.middle_descriptor)},
             {"left", to_json(f.left)},
             {"middle", to_json(f.middle)},
             {"right", to_json(f.right)},
             {"verified", verified}};
    out << doc.dump(2) << '\n';
  } else if (format == "latex") {
    out << to_latex(build_wrm(f.claimed)) << "=\n"
        << to_latex(f.left) << "\\cdot\n"
        << to_latex(f.middle) << "\\cdot\n"
        << to_latex(f.right);
  } else {
    throw parse_error("unknown output format '" + format + "'");
  }
  return verified ? kOk : kVerificationFailure;
}

int run_det(const RunConfig& config, std::ostream& out) {
  const WrmDescriptor d = config.matrix->materialize();

  Rational value;
  std::string formula;
  if (config.method == "bareiss") {
    value = det_bareiss(build_wrm(d));
    formula = "bareiss";
  } else if (config.method == "toeplitz" || config.method == "eq11") {
    value = det_via_toeplitz(d);
    formula = "toeplitz_reduction";
  } else if (config.method == "closed") {
    const ClosedForm cf = closed_form_det(d);
    value = cf.value;
    formula = cf.formula;
  } else {
    throw parse_error("unknown det method '" + config.method + "'");
  }

  if (!config.report) {
    out << value << '\n';
    return kOk;
  }

  DetReport report;
  report.n = d.n();
  report.closed_form = value;
  report.bareiss = det_bareiss(build_wrm(d));
  report.agrees = report.closed_form == report.bareiss;
  report.formula = formula;
  Json doc{{"n", report.n},
           {"formula", report.formula},
           {"closed_form", report.closed_form.str()},
           {"bareiss", report.bareiss.str()},
           {"agrees", report.agrees}};
  out << doc.dump(2) << '\n';
  return report.agrees ? kOk : kVerificationFailure;
}

int run_act(const RunConfig& config, std::ostream& out) {
  const WrmDescriptor d = config.matrix->materialize();
  if (!config.element) throw parse_error("act requires --g v,w");
  const GroupElement g(config.element->first, config.element->second);

  WrmDescriptor transformed = [&] {
    if (config.side == "left") return config.raw ? left_mul_descriptor(g, d) : group_action_left(g, d);
    if (config.side == "right")
      return config.raw ? right_mul_descriptor(g, d) : group_action_right(g, d);
    throw parse_error("unknown side '" + config.side + "'");
  }();

  Json doc{{"side", config.side},
           {"raw", config.raw},
           {"g", Json{{"v", g.v().str()}, {"w", g.w().str()}}},
           {"input", to_json(d)},
           {"result", to_json(transformed)}};

  bool verified = true;
  if (config.check) {
    const RatMatrix before = build_wrm(d);
    const RatMatrix after = build_wrm(transformed);
    RatMatrix expected;
    if (config.side == "left") {
      const GroupElement eff = config.raw ? g : inverse(g);
      expected = mat_mul(to_matrix(eff, d.n()), before);
    } else {
      expected = mat_mul(before, mat_transpose(to_matrix(g, d.n())));
    }
    verified = mat_eq(after, expected);
    doc["check"] = Json{{"verified", verified}};
  }

  out << doc.dump(2) << '\n';
  return verified ? kOk : kVerificationFailure;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  out << "# wrm verify\n";
  out << "# seed=" << config.seed << " source=" << config.seed_source
      << " trials=" << config.trials << '\n';

  if (config.trial_seed) {
    if (config.only_check.empty()) throw parse_error("--trial-seed requires --check");
    const verify::Check* check = verify::find_check(config.only_check);
    if (!check) throw parse_error("unknown check '" + config.only_check + "'");
    const auto detail = verify::run_single_trial(*check, *config.trial_seed);
    if (detail) {
      out << "FAIL " << check->name << " trial_seed=" << *config.trial_seed << '\n';
      out << "  counterexample " << *detail << '\n';
      return kVerificationFailure;
    }
    out << "PASS " << check->name << " trial_seed=" << *config.trial_seed << '\n';
    return kOk;
  }

  if (config.trials < 1) throw parse_error("--trials must be >= 1");

  int passed = 0, total = 0;
  std::vector<verify::CheckResult> failed;
  for (const auto& check : verify::all_checks()) {
    if (!config.only_check.empty() && check.name != config.only_check) continue;
    const verify::CheckResult result = verify::run_check(check, config.seed, config.trials);
    ++total;
    if (result.passed()) {
      ++passed;
      out << "PASS " << result.name << " trials=" << result.trials
          << " rejections=" << result.rejections << '\n';
    } else {
      out << "FAIL " << result.name << " trials=" << result.trials
          << " rejections=" << result.rejections << " failures=" << result.failures.size()
          << '\n';
      for (const auto& failure : result.failures)
        out << "  counterexample trial_seed=" << failure.trial_seed << " " << failure.detail
            << '\n';
      failed.push_back(result);
    }
  }
  if (total == 0) throw parse_error("unknown check '" + config.only_check + "'");
  out << "# result: " << passed << "/" << total << " checks passed\n";
  return failed.empty() ? kOk : kVerificationFailure;
}

}  // namespace

WrmDescriptor MatrixSpec::materialize() const {
  if (n < 1) throw parse_error("--n must be >= 1");
  return WrmDescriptor{params, BoundaryPair(eval_sequence(alpha, n), eval_sequence(beta, n))};
}

MatrixSpec MatrixSpec::parse_desc(std::string_view text) {
  const auto first = text.find(';');
  const auto second = first == std::string_view::npos ? first : text.find(';', first + 1);
  if (second == std::string_view::npos)
    throw parse_error("descriptor must look like x,y,z;<alpha spec>;<beta spec>");
  MatrixSpec spec;
  spec.params = parse_params(text.substr(0, first));
  spec.alpha = parse_sequence_spec(text.substr(first + 1, second - first - 1));
  spec.beta = parse_sequence_spec(text.substr(second + 1));
  return spec;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case RunConfig::Command::kGen:
        return run_gen(config, out);
      case RunConfig::Command::kFactor:
        return run_factor(config, out);
      case RunConfig::Command::kDet:
        return run_det(config, out);
      case RunConfig::Command::kAct:
        return run_act(config, out);
      case RunConfig::Command::kVerify:
        return run_verify(config, out);
    }
    err << "error: unknown command\n";
    return kParseError;
  } catch (const hypothesis_error& e) {
    err << "hypothesis violation: " << e.what() << '\n';
    return kHypothesisViolation;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
}

}  // namespace wrm::cli
