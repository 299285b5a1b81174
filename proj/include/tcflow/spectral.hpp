#pragma once

#include "tcflow/spectral/eigen.hpp"
#include "tcflow/spectral/shooting.hpp"
#include "tcflow/spectral/sobolev.hpp"
