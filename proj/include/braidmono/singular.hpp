#pragma once

#include <array>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

namespace braidmono {

using Rational = boost::rational<long long>;

// One local branch at the point: its Milnor number, its intersection
// multiplicity with the axis (two axes for type-0 points), and how many
// irreducible components it has (1 on input, possibly more after a transform).
struct LocalBranch {
    long long milnor = 0;
    long long axis_mult_1 = 1;
    std::optional<long long> axis_mult_2;
    long long components = 1;
};

// Local data of a curve germ at a point lying on one axis (type 1) or on the
// intersection of both axes (type 0). pairwise_intersections lists
// (delta_i . delta_j) for i < j in row-major upper-triangle order.
struct LocalPointData {
    int point_type = 1;
    long long milnor = 0;
    std::vector<LocalBranch> branches;
    std::vector<long long> pairwise_intersections;
};

// Local invariants of the preimage of a type-1 point under the degree-n
// Kummer map (u, v) -> (u^n, v).
LocalPointData transform_type1(int n, const LocalPointData& data);

// Same for a type-0 point under (u, v) -> (u^n, v^n). The point-level Milnor
// formula is applied exactly as stated; see the companion tests for how it
// compares with a direct local-algebra computation on smooth branches.
LocalPointData transform_type0(int n, const LocalPointData& data);

// Coefficient triple (b1, b2, b3) of the monic cubic y^3 - b1 y^2 + b2 y - b3
// whose roots are the pairwise averages of the roots of
// y^3 - a1 y^2 + a2 y - a3. Exact arithmetic throughout.
std::array<Rational, 3> real_part_cubic(const Rational& a1, const Rational& a2,
                                        const Rational& a3);

} // namespace braidmono
