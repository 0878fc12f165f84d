#pragma once

#include <gtest/gtest.h>

#include "lpwan/error.hpp"

namespace lpwan::test {

/// Runs `fn` and returns the ErrorCode of the lpwan::Error it throws.
template <class Fn> ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an lpwan::Error";
  return static_cast<ErrorCode>(-1);
}

} // namespace lpwan::test
