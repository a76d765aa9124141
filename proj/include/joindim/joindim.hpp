#pragma once

// Umbrella header for the joindim library.

#include "joindim/series.hpp"    // IWYU pragma: export
#include "joindim/formulas.hpp"  // IWYU pragma: export
#include "joindim/oracle.hpp"    // IWYU pragma: export
#include "joindim/verifier.hpp"  // IWYU pragma: export
