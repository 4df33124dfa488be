#pragma once

#include <gtest/gtest.h>

#include "projlab/error.hpp"

template <class F>
void expect_error(F&& f, projlab::ErrorCode code) {
  try {
    f();
    ADD_FAILURE() << "expected " << projlab::to_string(code);
  } catch (const projlab::Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}
