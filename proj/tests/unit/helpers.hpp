#pragma once

#include <string>
#include <vector>

#include "doctest.h"
#include "esakia/error.hpp"
#include "esakia/poset.hpp"

namespace testing_support {

using esakia::Cover;
using esakia::FinitePoset;
using esakia::PointSet;

/// r < a
inline FinitePoset chain2() { return FinitePoset::from_covers(2, {{0, 1}}, {"r", "a"}); }
/// r < a, r < b
inline FinitePoset fork() { return FinitePoset::from_covers(3, {{0, 1}, {0, 2}}, {"r", "a", "b"}); }

/// Runs `f` and returns the error code it throws; fails the test otherwise.
template <typename F>
esakia::ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const esakia::Error& e) {
    return e.code();
  }
  FAIL("expected an esakia::Error");
  return esakia::ErrorCode::InternalInvariant;
}

}  // namespace testing_support
