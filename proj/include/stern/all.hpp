#pragma once

#include "stern/bipoly.hpp"
#include "stern/checked_arith.hpp"
#include "stern/digits.hpp"
#include "stern/hyperbinary.hpp"
#include "stern/stern_poly.hpp"
#include "stern/verify.hpp"
