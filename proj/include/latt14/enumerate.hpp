#pragma once

#include <functional>

#include "latt14/matrix.hpp"

namespace latt {

// Enumerates all nonzero vectors v with v^T G v <= bound, one per antipodal
// pair, for a positive definite integer Gram matrix G. Pruning runs in
// floating point with a slack margin; every emitted vector's norm is
// recomputed exactly, so results are exact. With `exact_cholesky` the
// pruning itself uses rational arithmetic (slow path, used for
// cross-validation).
//
// The callback receives (coords, exact norm). Coordinates are emitted with
// the last nonzero coordinate positive; callers wanting the canonical
// first-nonzero-positive convention flip signs afterwards.
void enumerate_short_vectors(const ZMat& G, const Int& bound,
                             const std::function<void(const std::vector<long>&, const Int&)>& cb,
                             bool exact_cholesky = false);

}  // namespace latt
