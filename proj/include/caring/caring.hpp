#pragma once
// Umbrella header for the whole library.

#include "caring/coloring.hpp"
#include "caring/constructions.hpp"
#include "caring/designs.hpp"
#include "caring/extremal.hpp"
#include "caring/graph.hpp"
#include "caring/parallel.hpp"
#include "caring/patterns.hpp"
#include "caring/shannon.hpp"
#include "caring/verify.hpp"
