#pragma once

// Umbrella header.

#include "xpm/cavity.hpp"
#include "xpm/constants.hpp"
#include "xpm/ladder.hpp"
#include "xpm/optimizer.hpp"
#include "xpm/oracle.hpp"
#include "xpm/preset.hpp"
#include "xpm/sweep.hpp"
#include "xpm/table_io.hpp"
#include "xpm/units.hpp"
