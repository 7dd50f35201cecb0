#pragma once

#include "picwalk/constructions.hpp"
#include "picwalk/error.hpp"
#include "picwalk/experiments.hpp"
#include "picwalk/grid.hpp"
#include "picwalk/languages.hpp"
#include "picwalk/machine.hpp"
#include "picwalk/simulator.hpp"
