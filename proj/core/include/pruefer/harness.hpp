#pragma once

#include "pruefer/harness/corpus.hpp"
#include "pruefer/harness/pool.hpp"
