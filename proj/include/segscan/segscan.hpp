#pragma once

#include "segscan/core.hpp"
#include "segscan/density.hpp"
#include "segscan/heaps.hpp"
#include "segscan/hull.hpp"
#include "segscan/io.hpp"
#include "segscan/matrix.hpp"
#include "segscan/oracle.hpp"
#include "segscan/stats.hpp"
#include "segscan/sum.hpp"
#include "segscan/threshold.hpp"
#include "segscan/topk.hpp"
