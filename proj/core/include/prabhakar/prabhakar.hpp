#pragma once

// Umbrella header for the prabhakar library: evaluation of the
// three-parameter Mittag--Leffler (Prabhakar) function by series, spectral
// quadrature and contour inversion of the Laplace transform, together with
// its spectral distribution, complete-monotonicity diagnostics, large-t
// asymptotics and the non-Debye dielectric relaxation models built on it.

#include "prabhakar/asymptotics.hpp"
#include "prabhakar/errors.hpp"
#include "prabhakar/eval.hpp"
#include "prabhakar/gamma.hpp"
#include "prabhakar/ilt.hpp"
#include "prabhakar/params.hpp"
#include "prabhakar/relaxation.hpp"
#include "prabhakar/series.hpp"
#include "prabhakar/spectral.hpp"
