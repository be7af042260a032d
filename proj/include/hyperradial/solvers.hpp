#pragma once

#include "hyperradial/solvers/common.hpp"
#include "hyperradial/solvers/delta_shell.hpp"
#include "hyperradial/solvers/finite_well.hpp"
#include "hyperradial/solvers/free.hpp"
#include "hyperradial/solvers/infinite_well.hpp"
#include "hyperradial/solvers/oscillator.hpp"
#include "hyperradial/solvers/transmission.hpp"
