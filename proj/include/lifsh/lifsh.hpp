#pragma once

#include "lifsh/core.hpp"
#include "lifsh/hyper_core.hpp"
#include "lifsh/acceleration.hpp"
#include "lifsh/quadrature.hpp"
#include "lifsh/multivar_hyper.hpp"
#include "lifsh/complex_expansion.hpp"
#include "lifsh/feynman_integral.hpp"
#include "lifsh/oracle.hpp"
#include "lifsh/verify.hpp"
