#pragma once

#include <boost/multiprecision/float128.hpp>

namespace besselhit {

// IEEE quad precision (113-bit significand, ~34 decimal digits). Used where
// the Gaver-Stehfest weights amplify rounding beyond what double can absorb.
using Extended = boost::multiprecision::float128;

enum class Precision { Double, Extended };

}  // namespace besselhit
