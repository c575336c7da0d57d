#pragma once

#include "mocklab/arith.hpp"
#include "mocklab/errors.hpp"
#include "mocklab/identities.hpp"
#include "mocklab/matrix.hpp"
#include "mocklab/modpoint.hpp"
#include "mocklab/mordell.hpp"
#include "mocklab/precision.hpp"
#include "mocklab/qseries.hpp"
#include "mocklab/quadrature.hpp"
#include "mocklab/report.hpp"
