#pragma once

#include "facon/algebra.hpp"
#include "facon/cli.hpp"
#include "facon/curves.hpp"
#include "facon/errors.hpp"
#include "facon/facons.hpp"
#include "facon/parser.hpp"
#include "facon/random.hpp"
#include "facon/strata.hpp"
#include "facon/verify.hpp"
