#pragma once

// Readable gtest failure messages for the library types.

#include <ostream>

#include "a2kl/extended.hpp"
#include "a2kl/laurent.hpp"
#include "a2kl/muclosed.hpp"

namespace a2kl {

inline void PrintTo(const LaurentPoly& p, std::ostream* os) { *os << p.str(); }
inline void PrintTo(const KLPoly& p, std::ostream* os) { *os << p.str(); }
inline void PrintTo(const Element& w, std::ostream* os) { *os << w.str(); }
inline void PrintTo(const ExtElement& w, std::ostream* os) { *os << w.str(); }
inline void PrintTo(const Weight& w, std::ostream* os) { *os << w.str(); }
inline void PrintTo(const MuVerdict& v, std::ostream* os) { *os << v.value << " (" << to_string(v.rule) << ")"; }

}  // namespace a2kl
