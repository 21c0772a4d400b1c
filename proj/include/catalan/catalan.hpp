#pragma once

#include "catalan/bigint.hpp"
#include "catalan/chords.hpp"
#include "catalan/counting.hpp"
#include "catalan/error.hpp"
#include "catalan/expressions.hpp"
#include "catalan/hub.hpp"
#include "catalan/lattice.hpp"
#include "catalan/polygons.hpp"
#include "catalan/sequence.hpp"
#include "catalan/trees.hpp"
