#pragma once

#include "pruefer/classifier/classify.hpp"
#include "pruefer/classifier/replay.hpp"
#include "pruefer/classifier/report.hpp"
#include "pruefer/classifier/theorem_checks.hpp"
