#pragma once

// Umbrella header: exact arithmetic in Q(√5), golden polynomials, the
// binomial matrix R = (C(i−1, n−j)), its closed-form eigenstructure, and the
// exact verification/decomposition built on top.

#include "golden/decompose.hpp"
#include "golden/eigen.hpp"
#include "golden/matrix.hpp"
#include "golden/number.hpp"
#include "golden/pascal.hpp"
#include "golden/poly.hpp"
#include "golden/rational.hpp"
#include "golden/verify.hpp"
