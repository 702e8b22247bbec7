#pragma once

#include "ribbon/qpoly.hpp"
#include "ribbon/partition.hpp"
#include "ribbon/partition_core.hpp"
#include "ribbon/fock.hpp"
#include "ribbon/operators.hpp"
#include "ribbon/symfunc.hpp"
#include "ribbon/tableaux.hpp"
#include "ribbon/qlr.hpp"
#include "ribbon/positive.hpp"
#include "ribbon/verify.hpp"
#include "ribbon/dimension.hpp"
#include "ribbon/io.hpp"
