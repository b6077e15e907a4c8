#pragma once

#include <cstdint>
#include <vector>

#include "partcat/category.hpp"
#include "partcat/determinant.hpp"
#include "partcat/intpoly.hpp"
#include "partcat/partition.hpp"
#include "partcat/scalar.hpp"

namespace partcat {

// Elements of one shape under refinement: leq[i][j] iff elements[i] is a
// coarsening of elements[j].
struct Poset {
    std::vector<Partition> elements;
    std::vector<std::vector<char>> leq;

    static Poset of(std::vector<Partition> elements);
    std::size_t size() const { return elements.size(); }
    std::size_t index_of(const Partition& p) const;
    bool is_meet_closed() const;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

IntMatrix zeta_matrix(const Poset& poset);
// Inverse of the zeta matrix: mu[i][j] = mu(elements[i], elements[j]).
IntMatrix mobius(const Poset& poset);

struct GramMatrix {
    std::vector<Partition> basis;
    ExponentMatrix exponents;  // entry t^exponents[i][j]

    std::vector<std::vector<LaurentPoly>> entries() const { return to_laurent_matrix(exponents); }
};

GramMatrix gram(const Category& c, int k, Exec exec = Exec::Parallel);
LaurentPoly det_poly(const std::vector<std::vector<LaurentPoly>>& m);
IntPoly gram_det(const Category& c, int k, Exec exec = Exec::Parallel);

// Product over p in C(0,k) of sum_{q <= p} mu(q,p) t^{#q}.
// Throws std::domain_error when C(0,k) is not closed under meets.
LaurentPoly omega(const Category& c, int k);

// e is 0-based: e[i] is the image of point i in {0..l-1}.
LaurentPoly w_scalar(const std::vector<int>& e, int l);

}  // namespace partcat
