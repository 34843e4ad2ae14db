#ifndef MZL_MZL_HPP
#define MZL_MZL_HPP

// Umbrella header for the whole library.

#include "mzl/arceval.hpp"
#include "mzl/basis.hpp"
#include "mzl/bounds.hpp"
#include "mzl/models.hpp"
#include "mzl/polynomial.hpp"
#include "mzl/rational.hpp"
#include "mzl/real.hpp"
#include "mzl/series.hpp"
#include "mzl/version.hpp"
#include "mzl/zeros.hpp"

#endif
