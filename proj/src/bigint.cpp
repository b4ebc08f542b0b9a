#include "linopt/bigint.hpp"

namespace linopt {

Bigint factorial(unsigned n) {
    Bigint f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

} // namespace linopt
