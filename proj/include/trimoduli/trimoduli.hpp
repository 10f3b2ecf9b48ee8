#pragma once

#include "trimoduli/chart_angle.hpp"
#include "trimoduli/chart_sideratio.hpp"
#include "trimoduli/error.hpp"
#include "trimoduli/json_io.hpp"
#include "trimoduli/montecarlo.hpp"
#include "trimoduli/rng.hpp"
#include "trimoduli/svg.hpp"
#include "trimoduli/tolerance.hpp"
#include "trimoduli/triangle.hpp"
