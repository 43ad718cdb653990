#pragma once

#include "shapetile/certify.hpp"
#include "shapetile/decide.hpp"
#include "shapetile/exact_solve.hpp"
#include "shapetile/formats.hpp"
#include "shapetile/laurent.hpp"
#include "shapetile/rational.hpp"
#include "shapetile/render.hpp"
#include "shapetile/slope.hpp"
#include "shapetile/tile.hpp"
