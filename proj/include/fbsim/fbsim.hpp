#pragma once

#include "fbsim/baselines.hpp"
#include "fbsim/config.hpp"
#include "fbsim/error.hpp"
#include "fbsim/eval/linkpred.hpp"
#include "fbsim/eval/metrics.hpp"
#include "fbsim/eval/synthetic.hpp"
#include "fbsim/fbs.hpp"
#include "fbsim/graph.hpp"
#include "fbsim/measures.hpp"
#include "fbsim/ppr.hpp"
#include "fbsim/ranking.hpp"
#include "fbsim/stats.hpp"
