#ifndef TORIC_TORIC_HPP
#define TORIC_TORIC_HPP

#include "cohomology.hpp"
#include "complex.hpp"
#include "corpus.hpp"
#include "fan.hpp"
#include "isosearch.hpp"
#include "json_io.hpp"
#include "polyhedral.hpp"
#include "quasitoric.hpp"
#include "zlattice.hpp"

#endif
