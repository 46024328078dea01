#pragma once

#include "alphag/catalog.hpp"
#include "alphag/density.hpp"
#include "alphag/error.hpp"
#include "alphag/group.hpp"
#include "alphag/number_theory.hpp"
#include "alphag/rational.hpp"
#include "alphag/report.hpp"
#include "alphag/subgroup.hpp"
#include "alphag/sweep.hpp"
#include "alphag/theorem.hpp"
