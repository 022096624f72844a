#pragma once

#include "nestrad/dyadic.hpp"

namespace nestrad {

// Integer square roots of nonnegative big integers, via Newton's division
// iteration. A final adjustment loop enforces the defining inequalities
// r*r <= n < (r+1)*(r+1) directly, so the result is correct by construction
// no matter where the iteration stopped. Throws NegativeOperand for n < 0.
BigInt floor_sqrt(const BigInt& n);
BigInt ceil_sqrt(const BigInt& n);

}  // namespace nestrad
