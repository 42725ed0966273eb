// Shared helpers for the unit tests.

#ifndef LPM_TESTS_TEST_UTIL_HPP_
#define LPM_TESTS_TEST_UTIL_HPP_

#include <gtest/gtest.h>

#include <optional>
#include <string>
#include <vector>

#include "lpm/error.hpp"
#include "lpm/lattice_path.hpp"
#include "lpm/matroid.hpp"

namespace lpm::testing {

// Runs `body` and returns the code of the lpm::Error it throws, failing the
// test if it throws nothing.
template <typename Body>
std::optional<ErrorCode> ErrorOf(Body body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no lpm::Error thrown";
  return std::nullopt;
}

inline Region R(std::string_view lower, std::string_view upper) {
  return MakeRegion(lower, upper);
}

inline std::vector<std::string> VectorStrings(const std::vector<BasisVector>& bases) {
  std::vector<std::string> out;
  for (const auto& b : bases) out.push_back(b.str());
  return out;
}

}  // namespace lpm::testing

#endif  // LPM_TESTS_TEST_UTIL_HPP_
