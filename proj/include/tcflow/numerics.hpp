#pragma once

#include "tcflow/numerics/bessel.hpp"
#include "tcflow/numerics/interval.hpp"
#include "tcflow/numerics/ode.hpp"
#include "tcflow/numerics/quadrature.hpp"
#include "tcflow/numerics/roots.hpp"
