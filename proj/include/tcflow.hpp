#pragma once

#include "tcflow/errors.hpp"
#include "tcflow/numerics.hpp"
#include "tcflow/report.hpp"
#include "tcflow/solutions.hpp"
#include "tcflow/spectral.hpp"
#include "tcflow/verify.hpp"
