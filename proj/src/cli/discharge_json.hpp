#pragma once

#include <optional>

#include "atkp/discharging.hpp"
#include "cli/cli.hpp"

namespace atkp::cli {

json ledger_json(const ChargeLedger& led);
json witness_json(const BipartiteWitness& w);
Item discharge_item(const MultiGraph& h, std::optional<int> delta);

}  // namespace atkp::cli
