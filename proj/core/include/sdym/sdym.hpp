#pragma once

#include "sdym/chain.hpp"
#include "sdym/errors.hpp"
#include "sdym/form.hpp"
#include "sdym/gauge.hpp"
#include "sdym/lattice.hpp"
#include "sdym/quaternion.hpp"
#include "sdym/random.hpp"
#include "sdym/rational.hpp"
#include "sdym/solutions.hpp"

namespace sdym {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sdym
