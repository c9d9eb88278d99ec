#pragma once

#include "shg/analytic.hpp"
#include "shg/errors.hpp"
#include "shg/evolve.hpp"
#include "shg/functionals.hpp"
#include "shg/grid.hpp"
#include "shg/init.hpp"
#include "shg/io.hpp"
#include "shg/minimizer.hpp"
#include "shg/params.hpp"
#include "shg/petviashvili.hpp"
