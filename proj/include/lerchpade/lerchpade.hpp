#pragma once

#include "lerchpade/arith.hpp"
#include "lerchpade/bigfloat.hpp"
#include "lerchpade/criterion.hpp"
#include "lerchpade/determinant.hpp"
#include "lerchpade/eps_poly.hpp"
#include "lerchpade/errors.hpp"
#include "lerchpade/matrix.hpp"
#include "lerchpade/numeric.hpp"
#include "lerchpade/operators.hpp"
#include "lerchpade/pade.hpp"
#include "lerchpade/poly.hpp"
#include "lerchpade/rat.hpp"
#include "lerchpade/series.hpp"
