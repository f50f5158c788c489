#pragma once

#include "staircase/checked.hpp"
#include "staircase/cli.hpp"
#include "staircase/closure.hpp"
#include "staircase/equigen.hpp"
#include "staircase/format.hpp"
#include "staircase/ideal.hpp"
#include "staircase/json_io.hpp"
#include "staircase/monomial.hpp"
#include "staircase/parse.hpp"
#include "staircase/powers.hpp"
#include "staircase/reduction.hpp"
#include "staircase/survey.hpp"
