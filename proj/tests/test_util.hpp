#pragma once

#include <ostream>

#include "qtwist/exactalg/rat_func.hpp"

namespace qtwist::exactalg {

inline void PrintTo(const LaurentPoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const RatFunc& f, std::ostream* os) { *os << f.to_string(); }

}  // namespace qtwist::exactalg
