#pragma once

/// Umbrella header.

#include "weq/cover.hpp"
#include "weq/dsl.hpp"
#include "weq/equations.hpp"
#include "weq/errors.hpp"
#include "weq/integer.hpp"
#include "weq/json_io.hpp"
#include "weq/lhp.hpp"
#include "weq/nielsen.hpp"
#include "weq/oracle.hpp"
#include "weq/periodicity.hpp"
#include "weq/polyring.hpp"
#include "weq/words.hpp"
