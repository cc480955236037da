#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wrm/matrix.hpp"
#include "wrm/sequence.hpp"

namespace wrm {

using Json = nlohmann::ordered_json;

// Sequence spec grammar:
//   geom:c,q | arith:a,d | const:c | list:v0,v1,... | delta:k
// with rationals written as "p" or "p/q".
SequenceSpec parse_sequence_spec(std::string_view text);
std::string format_sequence_spec(const SequenceSpec& spec);

// "x,y,z" with rational components.
RecurrenceParams parse_params(std::string_view text);

// Comma-split of rational literals ("2,3/4,-1" -> {2, 3/4, -1}).
std::vector<Rational> parse_rational_list(std::string_view text);

Json to_json(const RatVector& v);
Json to_json(const RatMatrix& m);
Json to_json(const RecurrenceParams& p);
Json to_json(const WrmDescriptor& d);

std::string to_csv(const RatMatrix& m);
std::string to_latex(const RatMatrix& m);  // pmatrix environment

}  // namespace wrm
