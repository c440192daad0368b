#pragma once

#include "dimlift/functionals/carleman.hpp"
#include "dimlift/functionals/frequency.hpp"
#include "dimlift/functionals/harmonic_maps.hpp"
#include "dimlift/functionals/monotonicity.hpp"
#include "dimlift/functionals/surfaces.hpp"
#include "dimlift/functionals/two_phase.hpp"
