#pragma once

// Exact computation of jet generation for line bundles on smooth complete
// toric varieties: fans, invariant divisors, wall intersection numbers,
// support function convexity, section polytopes, and a brute-force jet
// matrix oracle over the torus-fixed points.

#include "toric/errors.hpp"
#include "toric/lattice.hpp"
#include "toric/rational.hpp"
#include "toric/fan.hpp"
#include "toric/divisor.hpp"
#include "toric/intersection.hpp"
#include "toric/polytope.hpp"
#include "toric/jets.hpp"
#include "toric/surface.hpp"
#include "toric/fan_io.hpp"
#include "toric/render.hpp"
#include "toric/report.hpp"
