#include "braidmono/singular.hpp"

#include <numeric>

#include "braidmono/errors.hpp"

namespace braidmono {

namespace {

void validate_input(int n, const LocalPointData& data, int expected_type) {
    if (n < 1)
        throw ValidationError("transform degree must be positive");
    if (data.point_type != expected_type)
        throw ValidationError("point type does not match the requested transform");
    if (data.milnor < 0)
        throw ValidationError("point Milnor number must be nonnegative");
    if (data.branches.empty())
        throw ValidationError("point data needs at least one branch");
    for (const LocalBranch& b : data.branches) {
        if (b.milnor < 0)
            throw ValidationError("branch Milnor number must be nonnegative");
        if (b.axis_mult_1 < 1)
            throw ValidationError("axis multiplicity must be positive");
        if (b.components != 1)
            throw ValidationError("input branches must be irreducible");
        const bool has_second = b.axis_mult_2.has_value();
        if (expected_type == 0 && !has_second)
            throw ValidationError("type-0 branches need multiplicities for both axes");
        if (expected_type == 1 && has_second)
            throw ValidationError("type-1 branches see only one axis");
        if (has_second && *b.axis_mult_2 < 1)
            throw ValidationError("axis multiplicity must be positive");
    }
    const std::size_t r = data.branches.size();
    if (data.pairwise_intersections.size() != r * (r - 1) / 2)
        throw ValidationError("pairwise intersection list has the wrong length");
    for (long long v : data.pairwise_intersections)
        if (v < 0)
            throw ValidationError("intersection numbers must be nonnegative");
}

} // namespace

LocalPointData transform_type1(int n, const LocalPointData& data) {
    validate_input(n, data, 1);
    const long long nn = n;

    long long point_mult = 0;
    for (const LocalBranch& b : data.branches)
        point_mult += b.axis_mult_1;

    LocalPointData out;
    out.point_type = 1;
    out.milnor = nn * data.milnor + (point_mult - 1) * (nn - 1);
    for (const LocalBranch& b : data.branches) {
        LocalBranch t;
        t.milnor = nn * b.milnor + (b.axis_mult_1 - 1) * (nn - 1);
        t.axis_mult_1 = b.axis_mult_1;
        t.components = std::gcd(nn, b.axis_mult_1);
        out.branches.push_back(t);
    }
    for (long long v : data.pairwise_intersections)
        out.pairwise_intersections.push_back(nn * v);
    return out;
}

LocalPointData transform_type0(int n, const LocalPointData& data) {
    validate_input(n, data, 0);
    const long long nn = n;

    long long point_mult_1 = 0;
    long long point_mult_2 = 0;
    for (const LocalBranch& b : data.branches) {
        point_mult_1 += b.axis_mult_1;
        point_mult_2 += *b.axis_mult_2;
    }

    LocalPointData out;
    out.point_type = 0;
    out.milnor = nn * nn * data.milnor +
                 (nn - 1) * (nn * (point_mult_1 + point_mult_2) - 1);
    for (const LocalBranch& b : data.branches) {
        LocalBranch t;
        t.milnor = nn * nn * b.milnor +
                   (nn - 1) * (nn * (b.axis_mult_1 + *b.axis_mult_2 - 1) - 1);
        t.axis_mult_1 = nn * b.axis_mult_1;
        t.axis_mult_2 = nn * *b.axis_mult_2;
        t.components = nn * std::gcd(nn, std::gcd(b.axis_mult_1, *b.axis_mult_2));
        out.branches.push_back(t);
    }
    for (long long v : data.pairwise_intersections)
        out.pairwise_intersections.push_back(nn * nn * v);
    return out;
}

std::array<Rational, 3> real_part_cubic(const Rational& a1, const Rational& a2,
                                        const Rational& a3) {
    const Rational b1 = a1;
    const Rational b2 = (a1 * a1 + a2) / 4;
    const Rational b3 = (a1 * a2 - a3) / 8;
    return {b1, b2, b3};
}

} // namespace braidmono
