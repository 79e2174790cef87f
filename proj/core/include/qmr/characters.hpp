#pragma once

#include <cstdint>

#include "qmr/partition.hpp"

namespace qmr {

/// Irreducible character of S_k: chi_lambda evaluated on the conjugacy class
/// of the given cycle type, by the Murnaghan-Nakayama rule (recursive
/// border-strip removal, sign (-1)^(strip height - 1)).
std::int64_t character_mn(const Partition& lambda, const Partition& cycle_type);

}  // namespace qmr
