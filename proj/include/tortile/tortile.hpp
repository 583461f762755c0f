#pragma once

#include "tortile/bundle.hpp"
#include "tortile/bundle_io.hpp"
#include "tortile/catalog.hpp"
#include "tortile/category.hpp"
#include "tortile/diagram.hpp"
#include "tortile/evaluator.hpp"
#include "tortile/group.hpp"
#include "tortile/matrix.hpp"
#include "tortile/mutation.hpp"
#include "tortile/pointed_io.hpp"
#include "tortile/report.hpp"
#include "tortile/scalar.hpp"
#include "tortile/suites.hpp"
#include "tortile/surface.hpp"
#include "tortile/sx.hpp"
#include "tortile/sx_io.hpp"
#include "tortile/terms.hpp"
