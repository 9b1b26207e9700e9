#pragma once

// Umbrella header for the whole library.

#include "rcgen/brackets.hpp"
#include "rcgen/cli_spec.hpp"
#include "rcgen/contour.hpp"
#include "rcgen/covariance.hpp"
#include "rcgen/domain.hpp"
#include "rcgen/genop.hpp"
#include "rcgen/hardy.hpp"
#include "rcgen/holo2.hpp"
#include "rcgen/holography.hpp"
#include "rcgen/jet.hpp"
#include "rcgen/legendre.hpp"
#include "rcgen/pde.hpp"
#include "rcgen/quadrature.hpp"
#include "rcgen/residues.hpp"
#include "rcgen/types.hpp"
#include "rcgen/verify.hpp"
