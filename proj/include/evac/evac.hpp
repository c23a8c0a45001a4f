#pragma once

#include "evac/bounds.hpp"
#include "evac/chase.hpp"
#include "evac/errors.hpp"
#include "evac/evaluator.hpp"
#include "evac/geometry.hpp"
#include "evac/io.hpp"
#include "evac/numeric.hpp"
#include "evac/strategy.hpp"
