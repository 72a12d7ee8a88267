#pragma once

#include "heron/arith.hpp"
#include "heron/catalog.hpp"
#include "heron/decomposition.hpp"
#include "heron/errors.hpp"
#include "heron/generator.hpp"
#include "heron/paper_tables.hpp"
#include "heron/quad.hpp"
#include "heron/report.hpp"
#include "heron/triangle.hpp"
#include "heron/verify.hpp"
