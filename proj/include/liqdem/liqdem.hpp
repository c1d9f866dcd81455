#pragma once

#include "liqdem/agenda.hpp"
#include "liqdem/bdp.hpp"
#include "liqdem/bigint.hpp"
#include "liqdem/combinatorics.hpp"
#include "liqdem/common.hpp"
#include "liqdem/default_proxy.hpp"
#include "liqdem/formula.hpp"
#include "liqdem/graph.hpp"
#include "liqdem/json_io.hpp"
#include "liqdem/opinion.hpp"
#include "liqdem/properties.hpp"
#include "liqdem/proxy.hpp"
#include "liqdem/quota.hpp"
#include "liqdem/rational.hpp"
#include "liqdem/rng.hpp"
#include "liqdem/semantics.hpp"
