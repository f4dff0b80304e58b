#pragma once

#include "twolevel/rational.hpp"

namespace twolevel::dd {

/// Extreme rays of the pointed polyhedral cone {y : r . y >= 0 for every row r}.
///
/// Incremental double description with the combinatorial adjacency test,
/// fraction-free over the integers. A row that has no current ray strictly
/// on one of its sides is inserted first (it creates no rays); otherwise rows
/// go in the order given, which callers keep canonical (lexicographic). The rows must span the whole space, i.e. the cone must be
/// pointed; Error(AssertionFailed) otherwise.
///
/// Rays come back as primitive integer vectors in lexicographic order.
IntMatrix extreme_rays(const IntMatrix& rows);

}  // namespace twolevel::dd
