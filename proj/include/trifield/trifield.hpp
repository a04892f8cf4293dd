#pragma once

#include "ffcore.hpp"
#include "trinom.hpp"
#include "lucas.hpp"
#include "matfp.hpp"
#include "checks.hpp"
#include "sweep.hpp"
