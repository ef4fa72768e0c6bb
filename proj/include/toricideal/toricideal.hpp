#pragma once

/// Umbrella header for the toricideal library.

#include "toricideal/rational.hpp"
#include "toricideal/linalg.hpp"
#include "toricideal/errors.hpp"
#include "toricideal/double_description.hpp"
#include "toricideal/cones.hpp"
#include "toricideal/newton.hpp"
#include "toricideal/divisors.hpp"
#include "toricideal/fourier_motzkin.hpp"
#include "toricideal/region.hpp"
#include "toricideal/test_ideals.hpp"
#include "toricideal/resolution.hpp"
#include "toricideal/cohomology_oracle.hpp"
#include "toricideal/problem_io.hpp"
#include "toricideal/svg_plot.hpp"
#include "toricideal/commands.hpp"
