// Umbrella header.
#pragma once

#include "quadrature.hpp"
#include "rates.hpp"
#include "region_oracle.hpp"
#include "special_functions.hpp"
#include "spinor.hpp"
#include "sweep.hpp"
#include "transition.hpp"
#include "types.hpp"
#include "units.hpp"
#include "verify.hpp"
#include "version.hpp"
