#pragma once

#include "hyperradial/oracle/discrepancies.hpp"
#include "hyperradial/oracle/finite_difference.hpp"
#include "hyperradial/oracle/series_reference.hpp"
#include "hyperradial/oracle/shooting.hpp"
#include "hyperradial/oracle/validation.hpp"
