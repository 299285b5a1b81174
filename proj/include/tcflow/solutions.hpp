#pragma once

#include "tcflow/solutions/cut_potential.hpp"
#include "tcflow/solutions/field.hpp"
#include "tcflow/solutions/geometry.hpp"
#include "tcflow/solutions/profile.hpp"
#include "tcflow/solutions/stokes.hpp"
#include "tcflow/solutions/taylor_couette.hpp"
