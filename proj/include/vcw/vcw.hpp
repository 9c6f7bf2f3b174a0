#pragma once

// Umbrella header for the set-system combinatorics workbench: finite
// universes with bit-mask members, independence dimension, convexity
// witness orders, type counting and the rank-1 reconstruction scheme,
// plus seeded generators for the standard example structures.

#include "vcw/bitset.hpp"
#include "vcw/boolean_expr.hpp"
#include "vcw/convex_order.hpp"
#include "vcw/core.hpp"
#include "vcw/generators.hpp"
#include "vcw/independence.hpp"
#include "vcw/json_io.hpp"
#include "vcw/type_density.hpp"
#include "vcw/udtfs.hpp"
