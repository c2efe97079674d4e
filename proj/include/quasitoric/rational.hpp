#ifndef QUASITORIC_RATIONAL_HPP
#define QUASITORIC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "quasitoric/errors.hpp"

namespace quasitoric {

using Rat = mpq_class;
using Int = mpz_class;
using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

// Canonical "p/q" (or "p" when q == 1) form, matching GMP's canonical string.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw input_error("not a rational: '" + s + "'");
    r.canonicalize();
    return r;
}

inline double rat_to_double(const Rat& r) { return r.get_d(); }

}  // namespace quasitoric

#endif
