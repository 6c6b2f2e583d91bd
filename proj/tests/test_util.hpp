#pragma once

#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "suptrop/suptrop.hpp"

namespace suptrop::test {

inline TropElem t(std::int64_t v) { return TropElem::tangible(v); }
inline TropElem g(std::int64_t v) { return TropElem::ghost(v); }
inline TropElem t(std::int64_t num, std::int64_t den) { return TropElem::tangible(Rational(num, den)); }
inline const TropElem Z{};

/// Matrix literal in the text format, rows separated by ';'.
inline Matrix M(std::string rows) {
  for (auto& c : rows)
    if (c == ';') c = '\n';
  return parse_matrix(rows);
}

/// Runs a registered property and reports the first failure.
inline void expect_property(const char* id, std::size_t trials, std::uint64_t seed = 1) {
  const oracle::PropertyReport r = oracle::property_run(id, trials, seed);
  EXPECT_TRUE(r.passed()) << id << ": " << r.failures.size() << " failures; first (seed "
                          << r.failures.front().seed << "): " << r.failures.front().detail;
  EXPECT_LT(r.skipped, r.trials) << id << ": every trial skipped";
}

}  // namespace suptrop::test
