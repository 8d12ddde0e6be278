#pragma once

// Umbrella header.
#include "orthoscope/errors.hpp"
#include "orthoscope/algebra/rational.hpp"
#include "orthoscope/algebra/unipoly.hpp"
#include "orthoscope/algebra/resultant.hpp"
#include "orthoscope/algebra/number_field.hpp"
#include "orthoscope/algebra/factor.hpp"
#include "orthoscope/algebra/bipoly.hpp"
#include "orthoscope/ratfunc/ratfunc.hpp"
#include "orthoscope/ratfunc/hermite.hpp"
#include "orthoscope/ratfunc/residues.hpp"
#include "orthoscope/ratfunc/dlog_witness.hpp"
#include "orthoscope/criteria/criteria.hpp"
#include "orthoscope/planar/biratfunc.hpp"
#include "orthoscope/planar/planar.hpp"
#include "orthoscope/cli/parser.hpp"
#include "orthoscope/cli/report.hpp"
#include "orthoscope/cli/fixtures.hpp"
