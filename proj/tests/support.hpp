#pragma once

#include <doctest.h>

#include "webfold/error.hpp"

namespace webfold::test {

// The code of the Error raised by f, failing the test when none is raised.
template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

}  // namespace webfold::test
