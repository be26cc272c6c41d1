#pragma once

#include "holey/cell.hpp"
#include "holey/grid.hpp"
#include "holey/lee_code.hpp"
#include "holey/pattern.hpp"
#include "holey/polyomino.hpp"
#include "holey/builder.hpp"
#include "holey/enumerate.hpp"
#include "holey/bounds.hpp"
#include "holey/lattice.hpp"
#include "holey/torus.hpp"
#include "holey/cell_io.hpp"
#include "holey/obj.hpp"
