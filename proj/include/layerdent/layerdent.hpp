#pragma once

#include "layerdent/errors.hpp"
#include "layerdent/hemisphere.hpp"
#include "layerdent/kernel.hpp"
#include "layerdent/materials.hpp"
#include "layerdent/oracle.hpp"
#include "layerdent/powerlaw.hpp"
#include "layerdent/quadrature.hpp"
#include "layerdent/validate.hpp"
