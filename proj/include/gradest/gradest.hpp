#pragma once

// Umbrella header: the whole library except the CLI front end
// (include gradest/cli.hpp separately; it pulls in CLI11).

#include "gradest/corpus.hpp"
#include "gradest/deriv.hpp"
#include "gradest/directions.hpp"
#include "gradest/error_map.hpp"
#include "gradest/errors.hpp"
#include "gradest/estimators.hpp"
#include "gradest/field.hpp"
#include "gradest/format.hpp"
#include "gradest/frames.hpp"
#include "gradest/pgm.hpp"
#include "gradest/rng.hpp"
#include "gradest/rotation.hpp"
#include "gradest/sweep.hpp"
#include "gradest/vec.hpp"
