#pragma once

// Umbrella header for the whole engine.

#include "ravenlab/background.hpp"
#include "ravenlab/category.hpp"
#include "ravenlab/event.hpp"
#include "ravenlab/generate.hpp"
#include "ravenlab/measure.hpp"
#include "ravenlab/measure_spec.hpp"
#include "ravenlab/mixture.hpp"
#include "ravenlab/parallel.hpp"
#include "ravenlab/parser.hpp"
#include "ravenlab/permutation.hpp"
#include "ravenlab/proposition.hpp"
#include "ravenlab/rational.hpp"
#include "ravenlab/report.hpp"
#include "ravenlab/rng.hpp"
#include "ravenlab/rules.hpp"
#include "ravenlab/sweep.hpp"
#include "ravenlab/world.hpp"
