#pragma once

#include "exactcat/linalg/json.hpp"
#include "exactcat/linalg/matrix.hpp"
#include "exactcat/linalg/normal_form.hpp"
#include "exactcat/linalg/rational.hpp"

#include "exactcat/core/category.hpp"
#include "exactcat/core/constructions.hpp"
#include "exactcat/core/serialize.hpp"

#include "exactcat/instances/finvectq.hpp"
#include "exactcat/instances/latticez.hpp"
#include "exactcat/instances/monopairsq.hpp"
#include "exactcat/instances/samplers.hpp"

#include "exactcat/engine/oracles.hpp"
#include "exactcat/engine/report.hpp"
#include "exactcat/engine/semistability.hpp"
#include "exactcat/engine/suites.hpp"
#include "exactcat/engine/verdict.hpp"
