#pragma once

#include "contagion/error.hpp"
#include "contagion/generators.hpp"
#include "contagion/graph.hpp"
#include "contagion/percolation.hpp"
#include "contagion/rational.hpp"
#include "contagion/rng.hpp"
#include "contagion/solvers.hpp"
#include "contagion/verify.hpp"
#include "contagion/vertex_set.hpp"
