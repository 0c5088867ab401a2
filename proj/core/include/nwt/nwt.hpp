#pragma once

// Umbrella header for the node-weighted triangle toolkit.

#include "nwt/bitlinalg.hpp"
#include "nwt/bitmatrix.hpp"
#include "nwt/config.hpp"
#include "nwt/count.hpp"
#include "nwt/count_breakdown.hpp"
#include "nwt/detect.hpp"
#include "nwt/frequency.hpp"
#include "nwt/graph.hpp"
#include "nwt/ledger.hpp"
#include "nwt/minimize.hpp"
#include "nwt/oracle.hpp"
#include "nwt/rational.hpp"
#include "nwt/sparse.hpp"
#include "nwt/slice.hpp"
#include "nwt/weight.hpp"
