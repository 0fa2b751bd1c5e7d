#pragma once

#include <string>

#include "hidtreat/dataset.hpp"

namespace hidtreat {

/// Reads a dataset from CSV with header `y,a,z,x1,...,xd` (UTF-8, '.' decimal
/// separator).  Throws ParseError on a malformed header or non-numeric cell,
/// ValidationError on domain violations or an empty data section.
ObservedDataset load_csv(const std::string& path, OutcomeKind outcome, int k = 2);

/// Writes the matching CSV; load_csv(save_csv(ds)) is the identity on values.
void save_csv(const std::string& path, const ObservedDataset& ds);

} // namespace hidtreat
