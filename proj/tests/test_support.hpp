#pragma once

#include <initializer_list>

#include "wrm/dense.hpp"

// Literal builders for expected values.
inline wrm::RatVector vec(std::initializer_list<wrm::Rational> entries) {
  wrm::RatVector v(static_cast<wrm::Index>(entries.size()));
  wrm::Index i = 0;
  for (const auto& e : entries) v(i++) = e;
  return v;
}

inline wrm::RatMatrix mat(std::initializer_list<std::initializer_list<wrm::Rational>> rows) {
  const auto n = static_cast<wrm::Index>(rows.size());
  const auto m = static_cast<wrm::Index>(rows.begin()->size());
  wrm::RatMatrix a(n, m);
  wrm::Index i = 0;
  for (const auto& row : rows) {
    wrm::Index j = 0;
    for (const auto& e : row) a(i, j++) = e;
    ++i;
  }
  return a;
}
