#pragma once

#include <string>

#include "coxlimits/datum.hpp"

namespace coxfix {

// Rank-2 pair with B(a,b) = -1.25 (cosh theta = 1.25, theta = ln 2).
inline coxlimits::CoxeterDatum f1() {
    return coxlimits::parse_gram_matrix("2\n1 -1.25\n-1.25 1\n");
}

// The (3,3,4) hyperbolic triangle group.
inline coxlimits::CoxeterDatum f2() {
    return coxlimits::parse_coxeter_matrix("3\n1 3 4\n3 1 3\n4 3 1\n", -1.0);
}

// Rank 3, every bond infinite with B = -1.01.
inline coxlimits::CoxeterDatum f3() {
    return coxlimits::parse_gram_matrix("3\n1 -1.01 -1.01\n-1.01 1 -1.01\n-1.01 -1.01 1\n");
}

// Affine rank-2 pair: B(a,b) = -1.
inline coxlimits::CoxeterDatum affine2() {
    return coxlimits::parse_gram_matrix("2\n1 -1\n-1 1\n");
}

// Finite dihedral I2(3) = A2.
inline coxlimits::CoxeterDatum finite_a2() {
    return coxlimits::parse_coxeter_matrix("2\n1 3\n3 1\n", -1.0);
}

}  // namespace coxfix
