#pragma once

#include <string>
#include <vector>

#include "sqtop/snf.hpp"

namespace sqtop {

// Middle-degree cup pairing evaluated on integer lifts of the free basis.
// The top coordinate is sign-normalized so that the grevlex-largest top
// monomial with nonzero coordinate gets a positive one.
struct IntersectionForm {
    long long degree = 0;
    std::vector<IntPoly> frame;  // lift classes, one per free basis vector
    Mat matrix;                  // symmetric
    BigInt determinant = 0;
};

IntersectionForm intersection_form(const IntRingBasis& basis);

// Exact signature of a symmetric integer matrix by congruence pivoting.
int signature_of(Mat form);

int signature(const IntRingBasis& basis);

}  // namespace sqtop
