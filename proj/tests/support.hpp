#pragma once

#include "mocklab/arith.hpp"
#include "mocklab/precision.hpp"
#include "oracles/oracles.hpp"

#include <string_view>

namespace testing {

/// Reference configuration: 256 bits, eps 1e-40.
inline mocklab::PrecisionContext ref_ctx() { return mocklab::PrecisionContext::with_default_eps(256); }

inline mocklab::Real R(std::string_view s) { return mocklab::real_from_string(std::string(s)); }

inline mocklab::Complex C(const oracle::CValue& v) { return {R(v.re), R(v.im)}; }

inline double dist(const mocklab::Complex& a, const mocklab::Complex& b) {
  return static_cast<double>(mocklab::abs(a - b));
}

inline double dist(const mocklab::Real& a, const mocklab::Real& b) {
  return static_cast<double>(boost::multiprecision::abs(a - b));
}

}  // namespace testing
