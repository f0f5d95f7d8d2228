#pragma once

#include "unirank/asymptotics.hpp"
#include "unirank/complex.hpp"
#include "unirank/enumerate.hpp"
#include "unirank/errors.hpp"
#include "unirank/family.hpp"
#include "unirank/genfun.hpp"
#include "unirank/kernels.hpp"
#include "unirank/laurent.hpp"
#include "unirank/pi_poly.hpp"
#include "unirank/qseries.hpp"
#include "unirank/quadrature.hpp"
#include "unirank/real.hpp"
#include "unirank/specfun.hpp"
#include "unirank/table.hpp"
#include "unirank/verify.hpp"
