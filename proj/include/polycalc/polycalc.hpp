#pragma once

// Convex-body calculus: parallel bodies and Wulff families of polytopes
// relative to an arbitrary polytopal gauge, with relative quermassintegrals
// and executable monotonicity/equivalence diagnostics.

#include "algebra.hpp"
#include "diagnostics.hpp"
#include "families.hpp"
#include "generators.hpp"
#include "metrics.hpp"
#include "shapes.hpp"
