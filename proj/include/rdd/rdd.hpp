#pragma once

// Umbrella header.

#include "rdd/analysis.hpp"
#include "rdd/backend.hpp"
#include "rdd/benchmarks.hpp"
#include "rdd/errors.hpp"
#include "rdd/experiment.hpp"
#include "rdd/fault.hpp"
#include "rdd/graph.hpp"
#include "rdd/http_backend.hpp"
#include "rdd/manifest.hpp"
#include "rdd/oracle.hpp"
#include "rdd/parser.hpp"
#include "rdd/prompts.hpp"
#include "rdd/replay.hpp"
#include "rdd/scheduler.hpp"
#include "rdd/self_consistency.hpp"
