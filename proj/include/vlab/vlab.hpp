#pragma once

#include "vlab/core/combinatorics.hpp"
#include "vlab/core/error.hpp"
#include "vlab/core/poly.hpp"
#include "vlab/core/scalar.hpp"
#include "vlab/core/sequences.hpp"
#include "vlab/decomp.hpp"
#include "vlab/diagnostics.hpp"
#include "vlab/ehrhart.hpp"
#include "vlab/hecke.hpp"
#include "vlab/roots.hpp"
#include "vlab/series.hpp"
