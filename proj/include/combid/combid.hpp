#pragma once

#include "combid/errors.hpp"
#include "combid/rational.hpp"
#include "combid/exact_arith.hpp"
#include "combid/polynomial.hpp"
#include "combid/expr.hpp"
#include "combid/eval.hpp"
#include "combid/descriptor.hpp"
#include "combid/dsl.hpp"
#include "combid/grid.hpp"
#include "combid/catalog.hpp"
#include "combid/schemes.hpp"
#include "combid/report.hpp"
