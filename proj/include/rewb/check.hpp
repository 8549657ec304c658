#pragma once

#include <cstdio>
#include <cstdlib>

// Always-on invariant check; violations are programming errors.
#define REWB_CHECK(cond)                                                              \
  ((cond) ? static_cast<void>(0)                                                      \
          : (std::fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond), \
             std::abort()))
