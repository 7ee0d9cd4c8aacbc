#pragma once

#include "acidzeta/core.hpp"
#include "acidzeta/quadrature.hpp"
#include "acidzeta/gammafn.hpp"
#include "acidzeta/zetafn.hpp"
#include "acidzeta/specfun.hpp"
#include "acidzeta/zeroset.hpp"
#include "acidzeta/counting.hpp"
#include "acidzeta/zerofind.hpp"
#include "acidzeta/acid.hpp"
#include "acidzeta/adjoint.hpp"
#include "acidzeta/relation.hpp"
#include "acidzeta/report.hpp"
#include "acidzeta/verify.hpp"
