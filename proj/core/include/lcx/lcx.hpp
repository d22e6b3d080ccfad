#pragma once

#include "lcx/approximant.hpp"
#include "lcx/bochner.hpp"
#include "lcx/checks.hpp"
#include "lcx/cover.hpp"
#include "lcx/error.hpp"
#include "lcx/integrand.hpp"
#include "lcx/linear_map.hpp"
#include "lcx/measure.hpp"
#include "lcx/oracle.hpp"
#include "lcx/problem.hpp"
#include "lcx/properties.hpp"
#include "lcx/quadrature.hpp"
#include "lcx/report.hpp"
#include "lcx/scenarios.hpp"
#include "lcx/seminorm.hpp"
#include "lcx/simple_function.hpp"
#include "lcx/space.hpp"
