#pragma once

#include "maco/benchgen.hpp"
#include "maco/colony.hpp"
#include "maco/graph.hpp"
#include "maco/localsolve.hpp"
#include "maco/metrics.hpp"
#include "maco/partition.hpp"
#include "maco/pheromone.hpp"
#include "maco/walk.hpp"
