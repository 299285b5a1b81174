#pragma once

#include "tcflow/verify/audits.hpp"
#include "tcflow/verify/convergence.hpp"
#include "tcflow/verify/grid.hpp"
#include "tcflow/verify/limits.hpp"
#include "tcflow/verify/residual.hpp"
