#pragma once

#include <cstdint>
#include <vector>

#include "partcat/morphism.hpp"
#include "partcat/partition.hpp"
#include "partcat/scalar.hpp"

namespace partcat {

using RFMorphism = MorphismT<RationalFunction>;

struct JWIdempotent {
    int k = 0;
    RFMorphism e;
    std::vector<RationalFunction> ladder;  // ladder[i] = a_{i+1}, a_1 = 0
};

// e_k over Q(t) in NC2(k,k); cached.
const JWIdempotent& jones_wenzl(int k);
// e_k at t = t0; throws std::domain_error naming the level whose ladder
// denominator vanishes.
RationalMorphism evaluate_jw(int k, const Rational& t0);

struct JWReport {
    bool idempotent = false;
    bool cap_kill = false;  // (id_{k-2} (x) cap) e_k = 0
    bool cup_kill = false;  // e_k (id_{k-2} (x) cup) = 0
    bool unit_identity = false;  // coefficient of id_k is 1
    RationalFunction trace;
};
JWReport check_jones_wenzl(const JWIdempotent& jw);

// NC2(2k,2l) -> NC(k,l): a new point right of every odd point, blocks are
// the faces of the thin arc diagram.
Partition fatten(const Partition& thin);
Partition unfatten(const Partition& fat);

// a(p) = s^fatten_exponent(p) with s^2 = t.
int fatten_exponent(const Partition& thin);
LaurentPoly fatten_scalar(const Partition& thin);  // Laurent monomial in s
Morphism functor_G(const Partition& thin);         // coefficients in s
// Coefficients in t on the thin side become functions of s on the fat side.
RFMorphism functor_G(const RFMorphism& thin);

struct FatteningReport {
    bool bijective = true;
    bool compose_symbolic = true;
    bool compose_numeric = true;
    bool tensor_symbolic = true;
    bool tensor_numeric = true;
    std::size_t compose_pairs = 0;
    std::size_t tensor_pairs = 0;
    std::vector<Rational> samples;
    bool ok() const { return bijective && compose_symbolic && compose_numeric && tensor_symbolic && tensor_numeric; }
};

// Bijection for k+l <= max_fat_sum; multiplicativity for thin diagrams with
// at most max_thin_points points, checked symbolically and at random s.
FatteningReport check_fattening(int max_thin_points = 8, int max_fat_sum = 5, std::uint64_t seed = 1, int samples = 5);

// G(e_{2k}) composed with itself equals G(e_{2k}), loop value s^4.
bool functor_G_jw_idempotent(int k);

}  // namespace partcat
