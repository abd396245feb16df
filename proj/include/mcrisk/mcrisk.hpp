#pragma once

#include "mcrisk/canonical_registry.hpp"
#include "mcrisk/dsl.hpp"
#include "mcrisk/error.hpp"
#include "mcrisk/model.hpp"
#include "mcrisk/registry.hpp"
#include "mcrisk/report.hpp"
#include "mcrisk/rules.hpp"
#include "mcrisk/scoring.hpp"
#include "mcrisk/surface.hpp"
#include "mcrisk/version.hpp"
