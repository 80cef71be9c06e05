#pragma once

// Umbrella header.

#include "zonotile/exact.hpp"
#include "zonotile/lattice.hpp"
#include "zonotile/spectral.hpp"
#include "zonotile/structure.hpp"
#include "zonotile/tiling.hpp"
#include "zonotile/weird.hpp"
#include "zonotile/zonotope.hpp"
