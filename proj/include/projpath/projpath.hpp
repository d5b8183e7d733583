// Convenience umbrella: the whole library in one include.
#pragma once

#include "projpath/bench.hpp"
#include "projpath/bracket.hpp"
#include "projpath/graph.hpp"
#include "projpath/graph_io.hpp"
#include "projpath/oracle.hpp"
#include "projpath/path_query.hpp"
#include "projpath/projection.hpp"
#include "projpath/refined.hpp"
