#ifndef SPHCRYS_SPHCRYS_HPP
#define SPHCRYS_SPHCRYS_HPP

#include "sphcrys/rational.hpp"
#include "sphcrys/lattice.hpp"
#include "sphcrys/spherical.hpp"
#include "sphcrys/catalog.hpp"
#include "sphcrys/crystal.hpp"
#include "sphcrys/xcrystal.hpp"
#include "sphcrys/series.hpp"
#include "sphcrys/harmonic.hpp"
#include "sphcrys/io.hpp"
#include "sphcrys/properties.hpp"
#include "sphcrys/cli.hpp"

#endif  // SPHCRYS_SPHCRYS_HPP
