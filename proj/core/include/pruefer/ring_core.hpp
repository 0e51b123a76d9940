#pragma once

#include "pruefer/errors.hpp"
#include "pruefer/ring_core/axioms.hpp"
#include "pruefer/ring_core/constructions.hpp"
#include "pruefer/ring_core/element.hpp"
#include "pruefer/ring_core/elements.hpp"
#include "pruefer/ring_core/finite_module.hpp"
#include "pruefer/ring_core/finite_ring.hpp"
#include "pruefer/ring_core/literal.hpp"
#include "pruefer/ring_core/notation.hpp"
#include "pruefer/ring_core/ring_hom.hpp"
#include "pruefer/ring_core/spec.hpp"
