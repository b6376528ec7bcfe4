// Shared helpers for the unit tests.
#pragma once

#include <random>

#include <catch_amalgamated.hpp>

#include "hypermod/error.hpp"

#define REQUIRE_ERROR_CODE(expr, ec)                      \
    do {                                                  \
        bool thrown_ = false;                             \
        try {                                             \
            (void)(expr);                                 \
        } catch (const hypermod::Error& e_) {             \
            thrown_ = true;                               \
            REQUIRE(e_.code() == (ec));                   \
        }                                                 \
        REQUIRE(thrown_);                                 \
    } while (0)

namespace testsupport {

inline std::mt19937_64& rng() {
    static std::mt19937_64 r(20240613);
    return r;
}

}  // namespace testsupport
