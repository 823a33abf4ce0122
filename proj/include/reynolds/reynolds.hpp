#pragma once

// Umbrella header: exact invariant-integral and Reynolds-operator toolkit for
// finite monoids over Q, F_p and Z.

#include "reynolds/scalar.hpp"
#include "reynolds/matrix.hpp"
#include "reynolds/linalg.hpp"
#include "reynolds/monoid.hpp"
#include "reynolds/bialgebra.hpp"
#include "reynolds/integrals.hpp"
#include "reynolds/repr.hpp"
#include "reynolds/bgmodule.hpp"
#include "reynolds/polynomial.hpp"
#include "reynolds/polyinv.hpp"
#include "reynolds/omega.hpp"
#include "reynolds/catalog.hpp"
