#pragma once

// Minimum label cut toolkit: find a smallest (or lightest) set of edge
// labels whose removal disconnects a source from a sink.

#include "labelcut/bench.hpp"
#include "labelcut/discretize.hpp"
#include "labelcut/gen.hpp"
#include "labelcut/graph.hpp"
#include "labelcut/io.hpp"
#include "labelcut/layering.hpp"
#include "labelcut/max_flow.hpp"
#include "labelcut/multigraph.hpp"
#include "labelcut/oracle.hpp"
#include "labelcut/shortest_path.hpp"
#include "labelcut/solution.hpp"
#include "labelcut/solve_multigraph.hpp"
#include "labelcut/solve_unweighted.hpp"
#include "labelcut/solve_weighted.hpp"
#include "labelcut/types.hpp"
