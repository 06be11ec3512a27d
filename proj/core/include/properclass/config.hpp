#ifndef PROPERCLASS_CONFIG_HPP
#define PROPERCLASS_CONFIG_HPP

#include <cstdint>
#include <cstdlib>

namespace properclass {

/// Resource bounds shared by the constructions in this library.
///
/// The defaults are sized for the built-in catalogue; every bound can be
/// overridden per call. `max_cells` additionally honours the environment
/// variable PROPERCLASS_MAX_CELLS.
struct Limits {
    int max_degree = 12;             // permutation degree
    long max_group_order = 10000;    // closure bound for finite groups
    long max_morphisms = 200000;     // category size guard
    long max_cells = 4000000;        // nondegenerate cells per nerve/complex
    long max_cosets = 100000;        // Todd-Coxeter table rows

    static Limits defaults() {
        Limits lim;
        if (const char* env = std::getenv("PROPERCLASS_MAX_CELLS")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && v > 0) lim.max_cells = v;
        }
        return lim;
    }
};

}  // namespace properclass

#endif
