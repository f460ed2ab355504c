// intentionally empty: Real and Cnum are header-only (qforms/real.hpp, qforms/cnum.hpp)
#include "qforms/real.hpp"
#include "qforms/cnum.hpp"
