#ifndef ALMOSTSTABLE_TESTS_GTEST_HELPERS_H_
#define ALMOSTSTABLE_TESTS_GTEST_HELPERS_H_

#include <gtest/gtest.h>

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "almoststable/error.h"
#include "almoststable/instance.h"
#include "almoststable/matching.h"

namespace almoststable::testing {

// Runs |f| and returns the code of the Error it throws.
inline ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::kEmpty;
}

inline std::vector<AgentPair> pairs1(std::initializer_list<AgentPair> pairs) {
  std::vector<AgentPair> out;
  for (auto [a, b] : pairs) out.emplace_back(a - 1, b - 1);
  return out;
}

inline std::string fixture(const std::string& name) {
  return std::string(ALMOSTSTABLE_FIXTURES) + "/" + name;
}

}  // namespace almoststable::testing

#endif  // ALMOSTSTABLE_TESTS_GTEST_HELPERS_H_
