#pragma once

#include "k4bip/cut_engine.hpp"
#include "k4bip/edge_list_io.hpp"
#include "k4bip/errors.hpp"
#include "k4bip/generators.hpp"
#include "k4bip/graph.hpp"
#include "k4bip/harness.hpp"
#include "k4bip/oracle.hpp"
#include "k4bip/rational.hpp"
#include "k4bip/regularity.hpp"
#include "k4bip/serialize.hpp"
#include "k4bip/vertex_set.hpp"
