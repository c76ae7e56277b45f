#pragma once

// Umbrella header.

#include "p4tract/decomposition.hpp"
#include "p4tract/generators.hpp"
#include "p4tract/graph.hpp"
#include "p4tract/hitting_set.hpp"
#include "p4tract/instance_io.hpp"
#include "p4tract/obstructions.hpp"
#include "p4tract/oracle.hpp"
#include "p4tract/scan.hpp"
#include "p4tract/search.hpp"
#include "p4tract/solve.hpp"
#include "p4tract/spider_solvers.hpp"
