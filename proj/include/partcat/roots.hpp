#pragma once

#include <string>
#include <vector>

#include "partcat/category.hpp"
#include "partcat/determinant.hpp"
#include "partcat/intpoly.hpp"
#include "partcat/scalar.hpp"

namespace partcat {

struct ExactRoot {
    Rational value;
    int multiplicity = 0;
};

struct NumericRoot {
    double re = 0, im = 0;
    int multiplicity = 0;
    bool in_n0 = false, in_z = false, in_2cos = false, in_4cos2 = false;
};

struct RootReport {
    IntPoly poly;
    std::vector<ExactRoot> rational_roots;   // ascending
    std::vector<NumericRoot> numeric_roots;  // real ones first, ascending
    int distinct_real_roots = 0;             // Sturm count
    int distinct_rational_roots = 0;
    bool all_in_n0 = true, all_in_z = true, all_in_2cos = true, all_in_4cos2 = true;
    // "N0", "Z", "2cos", "4cos2" or "mixed"; "none" for a nonzero constant.
    std::string verdict;

    // Every real root rational, certified by Sturm counting.
    bool real_roots_rational() const { return distinct_real_roots == distinct_rational_roots; }
};

// Candidate sets use l <= max_l and tolerance tol.
bool near_2cos(double re, double im, int max_l = 20, double tol = 1e-9);
bool near_4cos2(double re, double im, int max_l = 20, double tol = 1e-9);

RootReport analyze_roots(const IntPoly& f);

struct ScanEntry {
    int k = 0;
    std::size_t basis_size = 0;
    RootReport roots;
};

std::vector<ScanEntry> semisimplicity_scan(const Category& c, int kmax, Exec exec = Exec::Parallel);

}  // namespace partcat
