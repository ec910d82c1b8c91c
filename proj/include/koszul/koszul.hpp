#pragma once

#include "koszul/errors.hpp"
#include "koszul/field.hpp"
#include "koszul/monomial.hpp"
#include "koszul/polynomial.hpp"
#include "koszul/parse.hpp"
#include "koszul/free_module.hpp"
#include "koszul/groebner.hpp"
#include "koszul/presented_module.hpp"
#include "koszul/multilinear.hpp"
#include "koszul/koszul_complex.hpp"
#include "koszul/ideal.hpp"
#include "koszul/verify.hpp"
