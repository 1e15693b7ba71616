#pragma once

/// Umbrella header for the generalized Fermat curve toolkit.

#include "gfc/error.hpp"
#include "gfc/group.hpp"
#include "gfc/bigfloat.hpp"
#include "gfc/polynomial.hpp"
#include "gfc/scalar.hpp"
#include "gfc/mobius.hpp"
#include "gfc/genus.hpp"
#include "gfc/curves.hpp"
#include "gfc/hyperelliptic.hpp"
#include "gfc/kani_rosen.hpp"
#include "gfc/decompose.hpp"
#include "gfc/conjecture.hpp"
#include "gfc/report.hpp"
