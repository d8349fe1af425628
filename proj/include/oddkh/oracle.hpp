#pragma once

// Independent checks: Kauffman state sum, determinant, and the unsigned even
// (Frobenius algebra) cube complex over F2. These share only parsing and
// resolve() with the odd pipeline.

#include <cstdint>

#include "oddkh/complex.hpp"
#include "oddkh/laurent.hpp"
#include "oddkh/pd.hpp"

namespace oddkh {

/// <D> with <O> = 1, in the variable A. The 0-smoothing is the A-smoothing.
LaurentPoly bracket_in_a(const Diagram& d);

/// Jones polynomial in Khovanov's q (right trefoil: q^2 + q^6 - q^8),
/// normalized to 1 on the unknot.
LaurentPoly kauffman_bracket(const Diagram& d);

/// |J(q = i)|.
std::int64_t determinant(const Diagram& d);

/// Reduced even complex of the mirror over F2, generators in the same order
/// as assemble() (label x on the marked circle and on the circles of the
/// monomial). Entries are 0/1.
BigradedComplex even_f2_complex(const Diagram& d);

}  // namespace oddkh
