#pragma once

// Umbrella header for the wignerff library: discrete Wigner functions on
// N x N phase spaces coordinatized by the finite field F_N.

#include "wignerff/classify.hpp"
#include "wignerff/errors.hpp"
#include "wignerff/geometry.hpp"
#include "wignerff/gf.hpp"
#include "wignerff/io.hpp"
#include "wignerff/linalg.hpp"
#include "wignerff/mub.hpp"
#include "wignerff/net.hpp"
#include "wignerff/weylops.hpp"
#include "wignerff/wigner.hpp"
