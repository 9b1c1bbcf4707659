#pragma once

#include "butterfly/bijections.hpp"
#include "butterfly/chain.hpp"
#include "butterfly/colored.hpp"
#include "butterfly/core.hpp"
#include "butterfly/counting.hpp"
#include "butterfly/involutions.hpp"
#include "butterfly/lattice_path.hpp"
#include "butterfly/series.hpp"
#include "butterfly/tree.hpp"
#include "butterfly/verify.hpp"
