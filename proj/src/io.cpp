#include "wrm/io.hpp"

#include <sstream>

namespace wrm {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

std::vector<Rational> parse_fields(std::string_view text, std::size_t expected,
                                   std::string_view what) {
  auto parts = split(text, ',');
  if (parts.size() != expected)
    throw parse_error(std::string(what) + ": expected " + std::to_string(expected) +
                      " comma-separated rationals, got '" + std::string(text) + "'");
  std::vector<Rational> out;
  out.reserve(parts.size());
  for (auto p : parts) out.push_back(Rational::parse(p));
  return out;
}

}  // namespace

SequenceSpec parse_sequence_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw parse_error("sequence spec must look like kind:args, got '" + std::string(text) + "'");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view args = text.substr(colon + 1);

  if (kind == "geom") {
    auto f = parse_fields(args, 2, "geom");
    return GeometricSpec{f[0], f[1]};
  }
  if (kind == "arith") {
    auto f = parse_fields(args, 2, "arith");
    return ArithmeticSpec{f[0], f[1]};
  }
  if (kind == "const") {
    auto f = parse_fields(args, 1, "const");
    return ConstantSpec{f[0]};
  }
  if (kind == "list") {
    auto values = parse_rational_list(args);
    if (values.empty()) throw parse_error("list spec must be non-empty");
    return ExplicitSpec{std::move(values)};
  }
  if (kind == "delta") {
    auto parts = split(args, ',');
    if (parts.size() != 1) throw parse_error("delta spec takes one index");
    const Rational k = Rational::parse(parts[0]);
    if (!k.is_integer() || k.sign() < 0 || !k.numerator().fits_slong_p())
      throw parse_error("delta index must be a small nonnegative integer");
    return DeltaSpec{static_cast<Index>(k.numerator().get_si())};
  }
  throw parse_error("unknown sequence spec kind '" + std::string(kind) + "'");
}

std::string format_sequence_spec(const SequenceSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GeometricSpec>) {
          return "geom:" + s.scale.str() + "," + s.ratio.str();
        } else if constexpr (std::is_same_v<T, ArithmeticSpec>) {
          return "arith:" + s.start.str() + "," + s.step.str();
        } else if constexpr (std::is_same_v<T, ConstantSpec>) {
          return "const:" + s.value.str();
        } else if constexpr (std::is_same_v<T, ExplicitSpec>) {
          std::string out = "list:";
          for (std::size_t i = 0; i < s.values.size(); ++i) {
            if (i) out += ',';
            out += s.values[i].str();
          }
          return out;
        } else {
          static_assert(std::is_same_v<T, DeltaSpec>);
          return "delta:" + std::to_string(s.index);
        }
      },
      spec);
}

RecurrenceParams parse_params(std::string_view text) {
  auto f = parse_fields(text, 3, "params");
  return RecurrenceParams{f[0], f[1], f[2]};
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (auto p : split(text, ',')) out.push_back(Rational::parse(p));
  return out;
}

Json to_json(const RatVector& v) {
  Json arr = Json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(v(i).str());
  return arr;
}

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const RecurrenceParams& p) {
  return Json{{"x", p.x.str()}, {"y", p.y.str()}, {"z", p.z.str()}};
}

Json to_json(const WrmDescriptor& d) {
  return Json{{"params", to_json(d.params)},
              {"alpha", to_json(d.boundary.alpha())},
              {"beta", to_json(d.boundary.beta())},
              {"n", d.n()}};
}

std::string to_csv(const RatMatrix& m) {
  std::ostringstream os;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

std::string to_latex(const RatMatrix& m) {
  std::ostringstream os;
  os << "\\begin{pmatrix}\n";
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) os << " & ";
      const Rational& r = m(i, j);
      if (r.is_integer())
        os << r;
      else
        os << (r.sign() < 0 ? "-" : "") << "\\frac{" << abs(r).numerator() << "}{"
           << r.denominator() << "}";
    }
    os << (i + 1 < m.rows() ? " \\\\" : "") << '\n';
  }
  os << "\\end{pmatrix}\n";
  return os.str();
}

}  // namespace wrm
