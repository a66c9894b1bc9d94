#pragma once

#include <doctest.h>

#include "posetops/error.hpp"

// Expects expr to throw posetops::Error with the given code. The FAIL throws
// doctest's own exception, which the Error handler does not catch.
#define CHECK_FAILS(expr, errc)                                        \
  do {                                                                 \
    try {                                                              \
      (void)(expr);                                                    \
      FAIL("no failure from " #expr);                                  \
    } catch (const posetops::Error& e_) {                              \
      CHECK_MESSAGE(e_.code() == posetops::Errc::errc,                 \
                    #expr " failed with ", posetops::errc_name(e_.code()), \
                    ": ", e_.what());                                  \
    }                                                                  \
  } while (0)
