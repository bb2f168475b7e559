#pragma once

#include "grassmann/calculus.hpp"
#include "grassmann/element.hpp"
#include "grassmann/expression.hpp"
#include "grassmann/free_polynomial.hpp"
#include "grassmann/grading.hpp"
#include "grassmann/identity.hpp"
#include "grassmann/monomial.hpp"
#include "grassmann/scalar.hpp"
