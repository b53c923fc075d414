#pragma once

#include "edp/vertex.hpp"
#include "edp/demand_graph.hpp"
#include "edp/labeled_multigraph.hpp"
#include "edp/realization.hpp"
#include "edp/coloring.hpp"
#include "edp/oracle.hpp"
#include "edp/report.hpp"
#include "edp/realize_degree.hpp"
#include "edp/realize_edge.hpp"
#include "edp/maxedp.hpp"
#include "edp/io.hpp"
#include "edp/generators.hpp"
