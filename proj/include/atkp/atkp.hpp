#pragma once

#include "atkp/graph.hpp"
#include "atkp/io.hpp"
#include "atkp/catalog.hpp"
#include "atkp/alon_tarsi.hpp"
#include "atkp/kernel.hpp"
#include "atkp/paint.hpp"
#include "atkp/structure.hpp"
#include "atkp/discharging.hpp"
