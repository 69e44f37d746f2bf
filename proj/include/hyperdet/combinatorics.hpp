#pragma once

#include <span>
#include <vector>

#include "hyperdet/rational.hpp"

namespace hyperdet {

/// m! as an exact (integer-valued) rational.
Rational factorial(unsigned m);

/// Binomial coefficient C(m, j); zero when j > m.
Rational binomial(unsigned m, unsigned j);

/// (sum parts)! / prod(parts_i!). Parts must be nonempty.
Rational multinomial(std::span<const unsigned> parts);
Rational multinomial(std::initializer_list<unsigned> parts);

/// Rising factorial (x)_m = x(x+1)...(x+m-1); 1 when m = 0.
Rational pochhammer(const Rational& x, unsigned m);

}  // namespace hyperdet
