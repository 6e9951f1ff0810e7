#pragma once

#include <vector>

#include "mrmm/bitmatrix.hpp"
#include "mrmm/poly.hpp"
#include "mrmm/spec.hpp"

namespace mrmm {

/// n-Horner form of f: f = f_0 + X^n (f_1 + X^n (... + X^n f_m)), with
/// deg(f_i) < n for i < m and deg(f_m) = r where deg(f) = m*n + r.
struct HornerForm {
    unsigned n = 0;
    unsigned m = 0;
    unsigned r = 0;
    std::vector<PolyF2> pieces;
};

HornerForm horner_decompose(const PolyF2& f, unsigned n);
PolyF2 horner_recompose(const HornerForm& form);

/// The coefficient matrices C_0..C_{n-1} of the n-Horner matrix of f, for f
/// monic of degree exactly m*n. C_j (j >= 1) is zero except its m-th column
/// (a_j, a_{n+j}, ..., a_{(m-1)n+j}); C_0 additionally carries the
/// subdiagonal shift.
std::vector<BitMatrix> horner_matrix(const PolyF2& f, unsigned m, unsigned n);

/// The packed-column generator spec for f: v_cols[j] is C_j's m-th column
/// under the coordinate -> bit (m - i) packing.
MrmmSpec extract_spec(const PolyF2& f, unsigned m, unsigned n);

}  // namespace mrmm
