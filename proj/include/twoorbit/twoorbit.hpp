#pragma once

#include "twoorbit/rational.hpp"
#include "twoorbit/rootsys.hpp"
#include "twoorbit/flagvar.hpp"
#include "twoorbit/catalog.hpp"
#include "twoorbit/report.hpp"
#include "twoorbit/fixtures.hpp"
