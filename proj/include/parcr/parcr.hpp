#pragma once

// Umbrella header: exact combinatorics of the twisted-sector structure of
// parabolic moduli orbifolds, with a brute-force oracle for every closed
// form.

#include "parcr/rational.hpp"
#include "parcr/unity.hpp"
#include "parcr/parabolic.hpp"
#include "parcr/geometry.hpp"
#include "parcr/spectrum.hpp"
#include "parcr/sectors.hpp"
#include "parcr/shifts.hpp"
#include "parcr/cohomology.hpp"
#include "parcr/io.hpp"
#include "parcr/verify.hpp"
#include "parcr/cli.hpp"
