#pragma once

#include "mills/cf_engine.hpp"
#include "mills/errors.hpp"
#include "mills/gamma_mills.hpp"
#include "mills/gauss_mills.hpp"
#include "mills/jet.hpp"
#include "mills/laplace.hpp"
#include "mills/max_error.hpp"
#include "mills/oracle.hpp"
#include "mills/tail_family.hpp"
