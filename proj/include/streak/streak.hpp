#pragma once

#include "streak/axioms.hpp"
#include "streak/basic.hpp"
#include "streak/cauchy.hpp"
#include "streak/core.hpp"
#include "streak/dense.hpp"
#include "streak/errors.hpp"
#include "streak/expr.hpp"
#include "streak/one_sided.hpp"
#include "streak/rational.hpp"
#include "streak/real_streak.hpp"
#include "streak/refined_real.hpp"
#include "streak/reflections/arch.hpp"
#include "streak/reflections/field.hpp"
#include "streak/reflections/finset.hpp"
#include "streak/reflections/halved.hpp"
#include "streak/reflections/pos_part.hpp"
#include "streak/reflections/ring.hpp"
#include "streak/registry.hpp"
