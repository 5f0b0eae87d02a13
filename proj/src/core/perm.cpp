#include "perm.hpp"

#include <utility>

namespace esch {

std::pair<Perm3, Perm3> face_vertices(int i, int j) {
    if (i < 1 || i > 3 || j < 1 || j > 3)
        throw std::invalid_argument("face_vertices: indices must be in 1..3");
    Perm3 even_p, odd_p;
    bool have_even = false, have_odd = false;
    for (const Perm3& s : Perm3::all()) {
        if (s(i) != j) continue;
        if (s.even()) { even_p = s; have_even = true; }
        else          { odd_p = s;  have_odd = true; }
    }
    if (!have_even || !have_odd) throw std::logic_error("face_vertices: bad incidence");
    return {even_p, odd_p};
}

}  // namespace esch
