#pragma once

#include "p3vc/crucial.hpp"
#include "p3vc/decomposition.hpp"
#include "p3vc/dimacs.hpp"
#include "p3vc/graph.hpp"
#include "p3vc/kernel.hpp"
#include "p3vc/live_graph.hpp"
#include "p3vc/matching.hpp"
#include "p3vc/oracle.hpp"
#include "p3vc/packing_search.hpp"
#include "p3vc/random.hpp"
#include "p3vc/recurrence.hpp"
#include "p3vc/solver.hpp"
#include "p3vc/structures.hpp"
