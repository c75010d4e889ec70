#pragma once

#include "numrad/bounds.hpp"
#include "numrad/errors.hpp"
#include "numrad/extremal.hpp"
#include "numrad/linalg.hpp"
#include "numrad/matrix_io.hpp"
#include "numrad/numrange.hpp"
#include "numrad/random.hpp"
#include "numrad/svg.hpp"
#include "numrad/sweep.hpp"
