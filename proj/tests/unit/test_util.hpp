#pragma once

#include <optional>

#include <gtest/gtest.h>

#include "arbocoh/error.hpp"
#include "arbocoh/tree.hpp"

namespace arbocoh {

inline void PrintTo(const Vertex& v, std::ostream* os) { *os << v.to_string(); }
inline void PrintTo(const RayPrefix& r, std::ostream* os) { *os << r.end().to_string() << "..."; }

}  // namespace arbocoh

namespace arbocoh::testing {

/// Kind of the arbocoh::Error thrown by f, or nullopt when f returns normally.
template <class F>
std::optional<ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace arbocoh::testing

#define EXPECT_ERROR_KIND(expr, kind) \
  EXPECT_EQ(::arbocoh::testing::error_kind([&] { (void)(expr); }), std::optional<::arbocoh::ErrorKind>(kind))
