#ifndef PVALKIT_PVALKIT_HPP
#define PVALKIT_PVALKIT_HPP

#include "pvalkit/design.hpp"
#include "pvalkit/dist.hpp"
#include "pvalkit/errors.hpp"
#include "pvalkit/evidence.hpp"
#include "pvalkit/multiplicity.hpp"
#include "pvalkit/rng.hpp"
#include "pvalkit/simulate.hpp"
#include "pvalkit/ttest.hpp"
#include "pvalkit/version.hpp"

#endif  // PVALKIT_PVALKIT_HPP
