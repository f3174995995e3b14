#pragma once

#include "heis/angles.hpp"
#include "heis/boundary.hpp"
#include "heis/equidistant.hpp"
#include "heis/error.hpp"
#include "heis/heisenberg.hpp"
#include "heis/io.hpp"
#include "heis/similarity.hpp"
#include "heis/surface_mesh.hpp"
