#pragma once

#include "elhs/degree.hpp"
#include "elhs/design_io.hpp"
#include "elhs/discrepancy.hpp"
#include "elhs/expansion.hpp"
#include "elhs/lhs.hpp"
#include "elhs/parallel.hpp"
#include "elhs/rng.hpp"
#include "elhs/sample_set.hpp"
