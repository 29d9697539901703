#pragma once

#include "pebbling/distribution.hpp"
#include "pebbling/engine.hpp"
#include "pebbling/error.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/graph_spec.hpp"
#include "pebbling/numbers.hpp"
#include "pebbling/surgery.hpp"
