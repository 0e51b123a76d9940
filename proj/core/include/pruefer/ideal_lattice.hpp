#pragma once

#include "pruefer/ideal_lattice/ideal.hpp"
#include "pruefer/ideal_lattice/lattice.hpp"
#include "pruefer/ideal_lattice/localization.hpp"
