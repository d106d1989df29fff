#pragma once

#include "lrk/common.hpp"
#include "lrk/kostant.hpp"
#include "lrk/lr.hpp"
#include "lrk/partition.hpp"
#include "lrk/schur_expansion.hpp"
#include "lrk/symfunc.hpp"
#include "lrk/tableaux.hpp"
