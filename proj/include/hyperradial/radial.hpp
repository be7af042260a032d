#pragma once

#include "hyperradial/radial/export.hpp"
#include "hyperradial/radial/integrals.hpp"
#include "hyperradial/radial/model.hpp"
#include "hyperradial/radial/wavefunction.hpp"
