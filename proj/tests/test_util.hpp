#pragma once

#include <functional>

#include <doctest.h>

#include "idiomlab/error.hpp"

// Runs f, which must throw idiomlab::Error, and returns the error kind so
// the caller can assert on it.
inline idiomlab::Err thrown_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const idiomlab::Error& e) {
    return e.kind;
  }
  FAIL("expected an idiomlab::Error");
  return idiomlab::Err::bad_input;
}
