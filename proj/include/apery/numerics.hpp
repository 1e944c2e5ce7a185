#pragma once

#include "bigfloat.hpp"
#include "closed_forms.hpp"
#include "constants.hpp"
#include "sigma.hpp"
#include "zeta_tail.hpp"
