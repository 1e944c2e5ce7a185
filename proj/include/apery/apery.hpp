#pragma once

#include "compositions.hpp"
#include "delta.hpp"
#include "lincomb.hpp"
#include "linalg.hpp"
#include "numerics.hpp"
#include "ring.hpp"
#include "stuffle.hpp"
