#pragma once

#include "grid.hpp"
#include "binomial.hpp"
#include "groebner.hpp"
#include "interval_graph.hpp"
#include "toric.hpp"
#include "zigzag.hpp"
#include "pathclass.hpp"
#include "classify.hpp"
#include "enumerate.hpp"
#include "sweep.hpp"
#include "io.hpp"
