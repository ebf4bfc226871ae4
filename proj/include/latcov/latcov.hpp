#pragma once

// Umbrella header.

#include "arith.hpp"
#include "congruence.hpp"
#include "covering.hpp"
#include "enumerate.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "projline.hpp"
