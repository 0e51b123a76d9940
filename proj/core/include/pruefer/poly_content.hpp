#pragma once

#include "pruefer/poly_content/gaussian.hpp"
#include "pruefer/poly_content/poly.hpp"
