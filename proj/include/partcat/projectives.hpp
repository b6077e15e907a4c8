#pragma once

#include <cstddef>
#include <vector>

#include "partcat/category.hpp"
#include "partcat/partition.hpp"
#include "partcat/perm_group.hpp"
#include "partcat/scalar.hpp"

namespace partcat {

bool is_projective(const Partition& p);

// p = half* half with half in P(k,T), T = through_blocks(p); the lower
// points of half follow the least upper leg of each through-block.
struct ProjectivePartition {
    Partition p;
    Partition half;
    int T = 0;
};

ProjectivePartition make_projective(const Partition& p);  // throws std::invalid_argument
Partition through_factor(const Partition& p);

// q* sigma q for q in P(k,T) and sigma in S_T.
Partition twisted(const Partition& half, const Perm& sigma);

// {sigma in S_T : q* sigma q in C}; S(p) is this group for the half of p.
PermGroup half_group(const Category& c, const Partition& half, int cap = 7);
PermGroup group_S(const Category& c, const ProjectivePartition& p, int cap = 7);

// There is r in C(k,k) with r r* = p and r* r = q.
bool are_equivalent(const Category& c, const Partition& p, const Partition& q);

std::vector<Partition> proj_C(const Category& c, int k);
// Members of Proj_C(k) not of the form b* q b with q in Proj_C(l), l < k.
std::vector<Partition> script_P(const Category& c, int k);
// Members of Proj_C(k) outside the ideal generated by nu_k.
std::vector<Partition> script_P_via_ideal(const Category& c, int k);
// Closed-form membership for the named families; p must be in Proj_C(k).
bool closed_form_in_script_P(Family f, const Partition& p);

struct CensusClass {
    Partition representative;
    std::vector<Partition> members;
    int T = 0;
    std::size_t group_order = 0;
    std::size_t class_count = 0;
};

struct CensusDegree {
    int k = 0;
    std::size_t script_p_size = 0;
    std::vector<CensusClass> classes;
    std::size_t new_indecomposables = 0;
};

// Throws std::domain_error for t0 = 0.
std::vector<CensusDegree> census(const Category& c, int kmax, const Rational& t0 = Rational(1), int group_cap = 7);

struct SurjectiveDegree {
    int k = 0;
    std::size_t sur_size = 0;
    std::size_t q_size = 0;
    std::size_t q_classes = 0;
    std::size_t p_classes = 0;
    bool bijection = false;
    bool groups_match = false;
    std::vector<Partition> representatives;
};

std::vector<SurjectiveDegree> surjective_census(const Category& c, const std::vector<CensusDegree>& census, int group_cap = 7);

}  // namespace partcat
