#pragma once

#include "lattice_loom/bits.hpp"
#include "lattice_loom/claims.hpp"
#include "lattice_loom/completion.hpp"
#include "lattice_loom/digraph.hpp"
#include "lattice_loom/dl.hpp"
#include "lattice_loom/errors.hpp"
#include "lattice_loom/families.hpp"
#include "lattice_loom/fields.hpp"
#include "lattice_loom/graph.hpp"
#include "lattice_loom/intervals.hpp"
#include "lattice_loom/io.hpp"
#include "lattice_loom/morphisms.hpp"
#include "lattice_loom/perm.hpp"
#include "lattice_loom/poset.hpp"
#include "lattice_loom/reach.hpp"
#include "lattice_loom/transitivity.hpp"
