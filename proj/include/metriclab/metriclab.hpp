#pragma once

// Umbrella header for the metriclab toolkit.

#include "metriclab/core.hpp"
#include "metriclab/special_functions.hpp"
#include "metriclab/kernels.hpp"
#include "metriclab/spaces.hpp"
#include "metriclab/axioms.hpp"
#include "metriclab/partition.hpp"
#include "metriclab/path.hpp"
#include "metriclab/path_length.hpp"
#include "metriclab/intrinsic.hpp"
#include "metriclab/similarity.hpp"
#include "metriclab/composition.hpp"
#include "metriclab/spec_string.hpp"
#include "metriclab/serialize.hpp"
#include "metriclab/reproduce.hpp"
