#pragma once

// Umbrella header for the whole invariant engine.

#include "toric4/applications.hpp"
#include "toric4/arith.hpp"
#include "toric4/census.hpp"
#include "toric4/charpair.hpp"
#include "toric4/checked.hpp"
#include "toric4/cohomology.hpp"
#include "toric4/contraction.hpp"
#include "toric4/io.hpp"
#include "toric4/selfcheck.hpp"
#include "toric4/steenrod.hpp"
