#pragma once

#include "spantree/canonical.hpp"
#include "spantree/certificates.hpp"
#include "spantree/checkers.hpp"
#include "spantree/enumerate.hpp"
#include "spantree/extremal.hpp"
#include "spantree/graph.hpp"
#include "spantree/graph_io.hpp"
#include "spantree/report.hpp"
#include "spantree/spectra.hpp"
