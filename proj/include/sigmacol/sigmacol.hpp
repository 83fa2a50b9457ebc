#pragma once

// Umbrella header: Σ-coloring of graphs with neighborhood systems.

#include "sigmacol/arrangeability.hpp"
#include "sigmacol/coloring.hpp"
#include "sigmacol/errors.hpp"
#include "sigmacol/extraction.hpp"
#include "sigmacol/families.hpp"
#include "sigmacol/graph.hpp"
#include "sigmacol/graph_algorithms.hpp"
#include "sigmacol/hypergraph.hpp"
#include "sigmacol/io.hpp"
#include "sigmacol/max_density.hpp"
#include "sigmacol/neighborhood_system.hpp"
#include "sigmacol/ordering.hpp"
#include "sigmacol/rational.hpp"
#include "sigmacol/realizer.hpp"
#include "sigmacol/rng.hpp"
#include "sigmacol/sigma_coloring.hpp"
#include "sigmacol/sigma_graph.hpp"
#include "sigmacol/star_coloring.hpp"
