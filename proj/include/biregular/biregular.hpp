#pragma once

#include "biregular/feasibility.hpp"
#include "biregular/generators.hpp"
#include "biregular/graph.hpp"
#include "biregular/homogeneity.hpp"
#include "biregular/numeric.hpp"
#include "biregular/regularity.hpp"
#include "biregular/report.hpp"
#include "biregular/scalars.hpp"
#include "biregular/search.hpp"
