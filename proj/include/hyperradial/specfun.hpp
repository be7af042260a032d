#pragma once

#include "hyperradial/specfun/bessel.hpp"
#include "hyperradial/specfun/bessel_zeros.hpp"
#include "hyperradial/specfun/gamma.hpp"
#include "hyperradial/specfun/hypergeometric.hpp"
#include "hyperradial/specfun/polynomials.hpp"
