#pragma once

#include <vector>

#include "mahlerlab/numeric.hpp"

namespace mahlerlab {

// dense univariate polynomials, coefficients ascending
using IntPoly = std::vector<BigInt>;
using RatPoly = std::vector<Rational>;
using CPoly = std::vector<Complex>;

void trim(IntPoly& p);
void trim(RatPoly& p);
long degree(const IntPoly& p);  // -1 for the zero polynomial

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly divexact(IntPoly a, const IntPoly& b);  // throws if b does not divide a

RatPoly to_rat(const IntPoly& p);
IntPoly primitive_part(const RatPoly& p);  // clear denominators, divide out content, positive lead
RatPoly rat_gcd(RatPoly a, RatPoly b);    // monic
RatPoly derivative(const RatPoly& p);
IntPoly squarefree_part(const IntPoly& p);

Complex horner(const CPoly& p, const Complex& z);
Complex horner(const IntPoly& p, const Complex& z);
CPoly to_complex(const IntPoly& p);

// all roots, counted with multiplicity; simultaneous (Aberth) iteration with
// Newton polishing. `initial`, when it has the right size, seeds the iteration.
std::vector<Complex> polynomial_roots(const CPoly& coeffs, const std::vector<Complex>& initial = {});

}  // namespace mahlerlab
