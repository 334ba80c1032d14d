#pragma once

#include "hypercube/lp.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hypercube::newton {

struct VertexTableRow {
    std::array<int, 16> exponent;
    int coefficient;
    int listed_orbit_size;
};

// One representative inequality per facet class of the Newton polytope of the
// 2x2x2x2 hyperdeterminant, with the listed class size and facet f-vector.
struct FacetClass {
    int id;
    std::string label;
    std::array<int, 16> normal;
    Sense sense;
    int rhs;
    int orbit_size;
    std::array<long, 10> fvector;
};

inline std::array<int, 16> indicator(std::initializer_list<std::pair<const char*, int>> entries) {
    std::array<int, 16> v{};
    for (auto [bits, coeff] : entries) {
        int label = 0;
        for (int k = 0; k < 4; ++k) label = 2 * label + (bits[k] - '0');
        v[label] += coeff;
    }
    return v;
}

inline const std::array<FacetClass, 8>& facet_classes() {
    static const std::array<FacetClass, 8> classes{{
        {1, "x0000 >= 0", indicator({{"0000", 1}}), Sense::GE, 0, 16,
         {11625, 72614, 197704, 308238, 303068, 194347, 80874, 20906, 3021, 187}},
        {2, "x0000+x0001+x0010+x0011 >= 2", indicator({{"0000", 1}, {"0001", 1}, {"0010", 1}, {"0011", 1}}), Sense::GE, 2, 12,
         {4112, 25746, 71456, 115356, 119228, 81590, 36802, 10488, 1704, 122}},
        {3, "2x0000+x0001+x0010+x0100+x1000 >= 2", indicator({{"0000", 2}, {"0001", 1}, {"0010", 1}, {"0100", 1}, {"1000", 1}}), Sense::GE, 2, 8,
         {363, 2289, 6538, 10996, 11921, 8581, 4080, 1239, 225, 22}},
        {4, "x0000+x0001 <= 9", indicator({{"0000", 1}, {"0001", 1}}), Sense::LE, 9, 32,
         {938, 5226, 13182, 19716, 19263, 12765, 5758, 1721, 318, 31}},
        {5, "x0000+x0001+x0010+x0100+x0110+x1000+x1001 >= 3",
         indicator({{"0000", 1}, {"0001", 1}, {"0010", 1}, {"0100", 1}, {"0110", 1}, {"1000", 1}, {"1001", 1}}), Sense::GE, 3, 48,
         {336, 1937, 5126, 8121, 8468, 6022, 2928, 950, 194, 22}},
        {6, "x0000+x0001+x0010+x0011+x0100+x0110+x1000+x1001 >= 4",
         indicator({{"0000", 1}, {"0001", 1}, {"0010", 1}, {"0011", 1}, {"0100", 1}, {"0110", 1}, {"1000", 1}, {"1001", 1}}), Sense::GE, 4, 96,
         {289, 1624, 4228, 6636, 6894, 4914, 2413, 798, 168, 20}},
        {7, "x0000+x0001+x0010+x0011+x0100+x1000+x1100 <= 19",
         indicator({{"0000", 1}, {"0001", 1}, {"0010", 1}, {"0011", 1}, {"0100", 1}, {"1000", 1}, {"1100", 1}}), Sense::LE, 19, 48,
         {450, 2526, 6522, 10103, 10315, 7195, 3440, 1099, 220, 24}},
        {8, "2x0000+x0001+x0010+x0100+x1000 <= 18", indicator({{"0000", 2}, {"0001", 1}, {"0010", 1}, {"0100", 1}, {"1000", 1}}), Sense::LE, 18, 8,
         {681, 3906, 10323, 16407, 17194, 12264, 5933, 1877, 357, 34}},
    }};
    return classes;
}

// Weight vector whose initial form exposes the facet: the normal oriented so
// that the facet minimizes it.
inline std::vector<std::int64_t> facet_weight(const FacetClass& f) {
    std::vector<std::int64_t> w(f.normal.begin(), f.normal.end());
    if (f.sense == Sense::LE)
        for (auto& x : w) x = -x;
    return w;
}

// Vertex orbit representatives of the Newton polytope of the 2x2x2x2
// hyperdeterminant in table order: exponents, coefficient, listed orbit size.
inline const std::array<VertexTableRow, 111>& vertex_table() {
    static const std::array<VertexTableRow, 111> rows{{
        {{0,0,0,2,0,2,2,6,6,2,2,0,2,0,0,0}, 1, 32},
        {{0,0,0,2,0,2,2,6,7,1,1,1,2,0,0,0}, -1, 192},
        {{0,0,0,2,0,2,2,6,8,0,1,1,1,1,0,0}, 1, 192},
        {{0,0,0,2,0,2,2,6,9,0,0,1,0,1,1,0}, -1, 64},
        {{0,0,0,2,0,2,3,5,7,1,0,2,2,0,0,0}, 1, 384},
        {{0,0,0,2,0,2,3,5,7,2,1,0,1,0,0,1}, 1, 192},
        {{0,0,0,2,0,2,3,5,8,0,0,2,1,1,0,0}, -1, 384},
        {{0,0,0,2,0,2,3,5,8,1,0,1,1,0,0,1}, -1, 384},
        {{0,0,0,2,0,2,3,5,9,0,0,1,0,1,0,1}, 1, 192},
        {{0,0,0,2,0,2,4,4,8,0,0,2,0,2,0,0}, 1, 192},
        {{0,0,0,2,0,2,6,2,2,6,2,0,2,0,0,0}, 1, 96},
        {{0,0,0,2,0,2,7,1,2,6,1,1,2,0,0,0}, -1, 384},
        {{0,0,0,2,0,2,7,1,2,7,1,0,1,0,1,0}, 1, 192},
        {{0,0,0,2,0,2,7,1,3,5,0,2,2,0,0,0}, 1, 384},
        {{0,0,0,2,0,2,7,1,3,6,0,1,1,0,1,0}, -1, 384},
        {{0,0,0,2,0,2,7,1,4,5,0,1,0,1,1,0}, 1, 192},
        {{0,0,0,2,0,2,8,0,2,6,1,1,1,1,0,0}, 1, 192},
        {{0,0,0,2,0,2,8,0,2,7,1,0,1,0,0,1}, -1, 192},
        {{0,0,0,2,0,2,8,0,3,5,0,2,1,1,0,0}, -1, 384},
        {{0,0,0,2,0,2,8,0,3,6,0,1,1,0,0,1}, 1, 384},
        {{0,0,0,2,0,2,8,0,4,5,0,1,0,1,0,1}, -1, 192},
        {{0,0,0,2,0,3,3,4,7,0,0,3,2,0,0,0}, -1, 192},
        {{0,0,0,2,0,3,3,4,8,1,1,0,0,0,0,2}, 1, 96},
        {{0,0,0,2,0,3,3,4,9,0,0,1,0,0,0,2}, -1, 96},
        {{0,0,0,2,0,3,6,1,3,6,1,0,0,0,2,0}, 1, 384},
        {{0,0,0,2,0,3,6,1,4,5,0,1,0,0,2,0}, -1, 384},
        {{0,0,0,2,0,3,7,0,2,5,1,2,2,0,0,0}, 1, 192},
        {{0,0,0,2,0,3,7,0,2,6,1,1,1,0,1,0}, -1, 384},
        {{0,0,0,2,0,3,7,0,3,4,0,3,2,0,0,0}, -1, 192},
        {{0,0,0,2,0,3,7,0,3,5,0,2,1,0,1,0}, 1, 384},
        {{0,0,0,2,0,3,7,0,3,6,1,0,0,0,1,1}, -1, 384},
        {{0,0,0,2,0,3,7,0,4,5,0,1,0,0,1,1}, 1, 384},
        {{0,0,0,2,0,3,7,0,4,5,1,0,0,0,0,2}, 1, 192},
        {{0,0,0,2,0,3,7,0,5,4,0,1,0,0,0,2}, -1, 192},
        {{0,0,0,2,0,4,6,0,3,5,1,1,0,0,2,0}, -1, 384},
        {{0,0,0,2,0,4,6,0,4,4,0,2,0,0,2,0}, 1, 384},
        {{0,0,0,2,0,4,6,0,6,0,0,4,0,2,0,0}, 16, 192},
        {{0,0,0,2,0,5,5,0,5,0,0,5,2,0,0,0}, -16, 96},
        {{0,0,0,2,0,5,5,0,7,0,0,3,0,0,0,2}, -16, 96},
        {{0,0,0,2,1,1,1,7,7,1,1,1,2,0,0,0}, 1, 96},
        {{0,0,0,2,1,1,1,7,7,1,2,0,1,1,0,0}, 1, 192},
        {{0,0,0,2,1,1,1,7,8,0,1,1,1,1,0,0}, -1, 384},
        {{0,0,0,2,1,1,1,7,8,1,1,0,0,1,1,0}, -1, 192},
        {{0,0,0,2,1,1,1,7,9,0,0,1,0,1,1,0}, 1, 192},
        {{0,0,0,2,1,1,2,6,7,1,0,2,2,0,0,0}, -1, 384},
        {{0,0,0,2,1,1,2,6,7,1,2,0,0,2,0,0}, -1, 384},
        {{0,0,0,2,1,1,2,6,7,2,1,0,1,0,0,1}, -1, 384},
        {{0,0,0,2,1,1,2,6,8,0,0,2,1,1,0,0}, 1, 384},
        {{0,0,0,2,1,1,2,6,8,0,1,1,0,2,0,0}, 1, 384},
        {{0,0,0,2,1,1,2,6,8,1,0,1,1,0,0,1}, 1, 192},
        {{0,0,0,2,1,1,2,6,8,1,1,0,0,1,0,1}, 1, 384},
        {{0,0,0,2,1,1,2,6,9,0,0,1,0,1,0,1}, -1, 192},
        {{0,0,0,2,1,1,7,1,1,7,1,1,2,0,0,0}, 1, 96},
        {{0,0,0,2,1,1,7,1,1,7,2,0,1,1,0,0}, 1, 192},
        {{0,0,0,2,1,1,7,1,1,8,1,0,1,0,1,0}, -1, 384},
        {{0,0,0,2,1,1,7,1,2,6,0,2,2,0,0,0}, -1, 192},
        {{0,0,0,2,1,1,7,1,2,6,2,0,0,2,0,0}, -1, 384},
        {{0,0,0,2,1,1,7,1,2,7,0,1,1,0,1,0}, 1, 384},
        {{0,0,0,2,1,1,7,1,2,7,1,0,0,1,1,0}, 1, 384},
        {{0,0,0,2,1,1,7,1,3,6,0,1,0,1,1,0}, -1, 384},
        {{0,0,0,2,1,1,8,0,1,8,1,0,1,0,0,1}, 1, 192},
        {{0,0,0,2,1,1,8,0,2,7,0,1,1,0,0,1}, -1, 384},
        {{0,0,0,2,1,1,8,0,2,7,1,0,0,1,0,1}, -1, 384},
        {{0,0,0,2,1,1,8,0,3,6,0,1,0,1,0,1}, 1, 384},
        {{0,0,0,2,1,2,2,5,7,0,0,3,2,0,0,0}, 1, 192},
        {{0,0,0,2,1,2,2,5,8,1,1,0,0,0,0,2}, -1, 96},
        {{0,0,0,2,1,2,2,5,9,0,0,1,0,0,0,2}, 1, 48},
        {{0,0,0,2,2,0,1,7,6,3,1,0,1,0,1,0}, -1, 384},
        {{0,0,0,2,2,0,1,7,7,2,0,1,1,0,1,0}, 1, 192},
        {{0,0,0,2,2,0,1,7,7,2,1,0,0,1,1,0}, 1, 384},
        {{0,0,0,2,2,0,2,6,6,2,0,2,2,0,0,0}, 1, 96},
        {{0,0,0,2,2,0,2,6,6,2,2,0,0,2,0,0}, 1, 192},
        {{0,0,0,2,2,0,2,6,6,3,1,0,1,0,0,1}, 1, 384},
        {{0,0,0,2,2,0,2,6,7,2,1,0,0,1,0,1}, -1, 384},
        {{0,0,0,2,2,1,7,0,2,7,1,0,0,0,0,2}, 1, 96},
        {{0,0,0,2,2,1,7,0,3,6,0,1,0,0,0,2}, -1, 192},
        {{0,0,0,2,3,0,0,7,5,2,3,0,1,1,0,0}, 1, 384},
        {{0,0,0,2,3,0,0,7,6,1,2,1,1,1,0,0}, -1, 384},
        {{0,0,0,2,3,0,0,7,6,2,2,0,0,1,1,0}, -1, 192},
        {{0,0,0,2,3,0,0,7,7,1,1,1,0,1,1,0}, 1, 192},
        {{0,0,0,2,3,0,1,6,6,3,1,0,0,0,1,1}, 1, 384},
        {{0,0,0,2,3,0,2,5,6,3,1,0,0,0,0,2}, -1, 192},
        {{0,0,0,2,3,0,6,1,3,6,0,1,0,0,0,2}, 1, 96},
        {{0,0,0,2,4,0,0,6,5,2,3,0,0,1,0,1}, -1, 384},
        {{0,0,0,2,4,0,0,6,6,1,2,1,0,1,0,1}, 1, 192},
        {{0,0,0,2,4,3,3,0,5,0,0,5,0,0,0,2}, -1, 96},
        {{0,0,0,2,5,0,0,5,5,2,2,1,0,0,0,2}, 1, 48},
        {{0,0,0,3,0,3,3,3,9,0,0,0,0,0,0,3}, 1, 16},
        {{0,0,0,3,0,3,5,1,4,5,0,0,0,0,3,0}, 1, 192},
        {{0,0,0,3,0,3,6,0,2,6,1,0,1,0,2,0}, 1, 96},
        {{0,0,0,3,0,3,6,0,4,5,0,0,0,0,2,1}, -1, 192},
        {{0,0,0,3,0,3,6,0,6,3,0,0,0,0,0,3}, -1, 64},
        {{0,0,0,3,0,4,5,0,3,5,1,0,0,0,3,0}, 1, 192},
        {{0,0,0,3,1,1,1,6,7,1,1,0,2,0,0,1}, -1, 192},
        {{0,0,0,3,1,1,1,6,8,0,1,0,1,1,0,1}, 1, 192},
        {{0,0,0,3,1,1,1,6,9,0,0,0,0,1,1,1}, -1, 64},
        {{0,0,0,3,1,1,7,0,1,7,1,0,1,1,1,0}, 1, 96},
        {{0,0,0,3,1,1,7,0,2,6,1,0,0,2,1,0}, -1, 192},
        {{0,0,0,3,1,1,7,0,3,6,0,0,0,1,1,1}, -1, 192},
        {{0,0,0,4,0,4,4,0,4,0,0,4,4,0,0,0}, 1, 96},
        {{0,0,0,4,0,4,4,0,8,0,0,0,0,0,0,4}, -27, 16},
        {{0,0,0,8,1,1,1,1,1,1,1,1,8,0,0,0}, 1, 48},
        {{0,0,0,9,1,1,1,0,1,1,1,0,7,1,1,0}, 1, 48},
        {{0,0,0,9,1,1,1,0,1,1,1,0,8,0,0,1}, -1, 96},
        {{0,0,1,1,1,1,0,8,8,1,0,1,1,0,1,0}, 1, 92},
        {{0,0,1,1,1,1,1,7,7,2,1,0,1,0,0,1}, 1, 192},
        {{0,0,1,1,1,1,1,7,8,1,0,1,1,0,0,1}, -1, 192},
        {{0,0,1,1,1,2,0,7,7,1,2,0,1,0,0,1}, 1, 192},
        {{0,0,1,1,1,2,0,7,8,1,1,0,0,0,1,1}, -1, 192},
        {{0,1,1,0,1,0,0,9,9,0,0,1,0,1,1,0}, 1, 8},
        {{0,1,1,0,1,0,6,3,3,6,0,1,0,1,1,0}, 1, 32},
    }};
    return rows;
}

// Orbit representatives of lattice points of the Newton polytope that are
// not exponents of the hyperdeterminant.
inline const std::array<std::array<int, 16>, 69>& missing_monomials() {
    static const std::array<std::array<int, 16>, 69> rows{{
        {{0,0,0,2,1,1,4,4,4,5,1,0,1,0,1,0}},
        {{0,0,0,2,1,1,4,4,5,4,0,1,1,0,1,0}},
        {{0,0,0,2,1,1,4,4,5,4,1,0,0,1,1,0}},
        {{0,0,0,2,1,1,4,4,6,3,0,1,0,1,1,0}},
        {{0,0,0,2,1,1,5,3,4,5,1,0,1,0,0,1}},
        {{0,0,0,2,1,1,5,3,5,4,0,1,1,0,0,1}},
        {{0,0,0,2,1,1,5,3,5,4,1,0,0,1,0,1}},
        {{0,0,0,2,1,1,5,3,6,3,0,1,0,1,0,1}},
        {{0,0,0,2,1,2,2,5,7,1,1,1,1,0,0,1}},
        {{0,0,0,2,1,2,6,1,2,6,2,0,0,1,1,0}},
        {{0,0,0,2,1,3,6,0,2,5,3,0,0,1,0,1}},
        {{0,0,0,2,1,4,4,1,1,4,5,0,1,1,0,0}},
        {{0,0,0,2,2,1,6,1,2,6,1,1,0,1,1,0}},
        {{0,0,0,2,2,2,3,3,5,3,2,0,0,0,0,2}},
        {{0,0,0,2,2,2,6,0,2,6,2,0,0,0,0,2}},
        {{0,0,0,2,3,1,4,2,3,5,2,0,0,0,0,2}},
        {{0,0,0,2,4,1,1,4,5,0,1,4,1,1,0,0}},
        {{0,0,0,3,1,1,3,4,4,4,1,0,2,0,1,0}},
        {{0,0,0,3,1,1,4,3,4,4,0,1,2,0,1,0}},
        {{0,0,0,3,1,1,4,3,5,3,0,1,2,0,0,1}},
        {{0,0,0,3,1,1,4,3,5,3,1,0,0,2,1,0}},
        {{0,0,0,3,1,1,4,3,6,1,1,1,0,3,0,0}},
        {{0,0,0,3,1,1,5,2,6,2,0,1,0,2,0,1}},
        {{0,0,0,3,1,3,4,1,1,4,4,0,2,1,0,0}},
        {{0,0,0,3,1,4,4,0,5,0,2,2,0,2,0,1}},
        {{0,0,0,3,2,2,2,3,5,0,2,2,1,2,0,0}},
        {{0,0,0,3,2,2,3,2,2,5,2,0,1,0,2,0}},
        {{0,0,0,3,2,2,3,2,4,2,2,1,1,1,0,1}},
        {{0,0,0,3,2,2,5,0,3,3,1,2,1,1,0,1}},
        {{0,0,0,3,3,2,4,0,4,1,1,3,0,2,0,1}},
        {{0,0,0,3,4,0,1,4,4,1,1,3,2,1,0,0}},
        {{0,0,0,4,1,1,3,3,7,1,0,0,0,2,1,1}},
        {{0,0,0,4,1,1,4,2,5,2,1,0,0,3,1,0}},
        {{0,0,0,4,1,1,5,1,5,3,0,0,0,2,1,1}},
        {{0,0,0,4,1,1,5,1,6,1,0,1,0,3,0,1}},
        {{0,0,0,4,1,2,5,0,4,3,0,1,1,1,1,1}},
        {{0,0,0,4,2,1,5,0,4,3,1,0,0,2,0,2}},
        {{0,0,0,5,1,1,4,1,5,1,1,0,0,4,1,0}},
        {{0,0,0,5,1,1,5,0,5,0,1,1,0,5,0,0}},
        {{0,0,0,5,1,1,5,0,6,0,0,1,0,4,0,1}},
        {{0,0,0,6,1,1,3,1,4,1,1,0,2,3,1,0}},
        {{0,0,0,6,1,1,4,0,6,0,0,0,0,4,1,1}},
        {{0,0,0,6,2,1,2,1,2,2,1,1,4,1,1,0}},
        {{0,0,1,1,1,1,1,7,7,1,1,1,1,1,0,0}},
        {{0,0,1,1,1,1,3,5,5,3,1,1,1,1,0,0}},
        {{0,0,1,1,1,2,1,6,7,2,1,0,0,0,1,1}},
        {{0,0,1,1,1,2,1,6,8,1,0,1,0,0,1,1}},
        {{0,0,1,1,1,4,4,1,5,1,1,3,0,1,0,1}},
        {{0,0,1,1,2,2,2,4,6,2,0,2,0,0,1,1}},
        {{0,0,1,2,1,2,5,1,3,6,0,0,0,0,2,1}},
        {{0,0,1,2,1,4,2,2,4,1,3,1,1,1,0,1}},
        {{0,0,1,2,2,2,0,5,5,1,2,1,2,0,0,1}},
        {{0,0,1,2,3,1,0,5,4,2,2,1,2,0,0,1}},
        {{0,0,1,2,4,1,0,4,4,1,0,4,2,0,1,0}},
        {{0,0,1,3,1,4,3,0,5,2,1,0,0,0,1,3}},
        {{0,0,1,3,2,2,1,3,3,3,2,0,1,1,2,0}},
        {{0,0,1,3,2,2,2,2,2,3,2,1,2,1,1,0}},
        {{0,0,1,3,3,3,0,2,5,1,1,1,0,0,2,2}},
        {{0,0,1,4,2,2,0,3,5,1,0,1,1,1,3,0}},
        {{0,0,1,4,2,3,1,1,5,1,0,1,0,1,3,1}},
        {{0,0,1,4,3,2,0,2,5,2,0,0,0,0,3,2}},
        {{0,0,1,4,3,3,0,1,5,1,1,0,0,0,2,3}},
        {{0,0,1,4,3,3,1,0,5,1,0,1,0,0,2,3}},
        {{0,0,2,3,2,3,1,1,5,2,0,0,0,0,2,3}},
        {{0,1,1,1,2,2,4,1,3,2,1,3,0,2,1,0}},
        {{0,1,1,2,2,1,4,1,3,2,0,3,1,2,1,0}},
        {{0,1,1,3,2,1,3,1,3,2,2,0,1,2,0,2}},
        {{0,1,1,4,2,1,3,0,3,1,1,1,2,2,0,2}},
        {{0,1,2,1,2,1,2,3,2,4,2,0,2,0,0,2}},
    }};
    return rows;
}

// Vertex classes by (edges, facets) through the vertex.
inline const std::map<std::pair<int, int>, int>& edge_facet_table() {
    static const std::map<std::pair<int, int>, int> t{
        {{11, 11}, 35}, {{12, 12}, 14}, {{13, 12}, 13}, {{13, 13}, 5}, {{13, 14}, 1}, {{14, 13}, 1},
        {{14, 14}, 2},  {{15, 12}, 1},  {{15, 13}, 3},  {{15, 14}, 1}, {{15, 15}, 1}, {{15, 17}, 1},
        {{16, 13}, 1},  {{16, 14}, 1},  {{16, 15}, 2},  {{17, 13}, 1}, {{17, 14}, 1}, {{17, 15}, 3},
        {{17, 16}, 1},  {{17, 17}, 1},  {{18, 15}, 1},  {{18, 16}, 3}, {{18, 18}, 1}, {{18, 19}, 1},
        {{19, 14}, 1},  {{19, 17}, 1},  {{20, 17}, 1},  {{21, 19}, 1}, {{21, 20}, 1}, {{21, 21}, 1},
        {{22, 22}, 1},  {{23, 15}, 1},  {{25, 21}, 1},  {{25, 26}, 1}, {{26, 28}, 1}, {{27, 22}, 1},
        {{30, 28}, 1},  {{32, 29}, 1},  {{42, 39}, 1},  {{67, 56}, 1},
    };
    return t;
}

inline const std::array<int, 16>& distinguished_vertex() {
    static const std::array<int, 16> v{0, 1, 1, 0, 1, 0, 0, 9, 9, 0, 0, 1, 0, 1, 1, 0};
    return v;
}

inline const std::array<long, 10>& distinguished_vertex_figure() {
    static const std::array<long, 10> f{67, 873, 4405, 11451, 17440, 16452, 9699, 3446, 667, 56};
    return f;
}

inline const std::array<long, 11>& newton_fvector() {
    static const std::array<long, 11> f{25448, 178780, 555280, 1005946, 1176976, 927244, 495936, 176604, 39680, 5012, 268};
    return f;
}

// Census of the expanded 2x2x2x2 hyperdeterminant.
struct ListedMonomial {
    std::array<int, 16> exponent;
    long coefficient;
    int face_dimension;
    int orbit_size;
};

struct HyperdetCensusData {
    long terms;
    int orbits;
    long max_abs_coefficient;
    long largest_odd_coefficient;
    std::vector<ListedMonomial> listed;  // size-two orbits, the extreme coefficients, the format example
    std::map<int, int> orbit_sizes;      // orbit size -> number of orbits
    std::map<int, int> face_dimensions;  // face dimension -> number of orbits
};

inline const HyperdetCensusData& hyperdet_census_data() {
    static const HyperdetCensusData d{
        2894276,
        9617,
        112464,
        -5811,
        {
            {{0, 3, 3, 0, 3, 0, 0, 3, 3, 0, 0, 3, 0, 3, 3, 0}, 2008, 3, 2},
            {{1, 2, 2, 1, 2, 1, 1, 2, 2, 1, 1, 2, 1, 2, 2, 1}, 112464, 11, 2},
            {{0, 1, 1, 4, 2, 1, 2, 1, 2, 2, 2, 0, 2, 2, 1, 1}, -5811, 9, 384},
            {{0, 0, 0, 2, 0, 2, 3, 5, 7, 1, 1, 1, 1, 1, 0, 0}, -2, 3, 192},
        },
        {{2, 2}, {8, 6}, {12, 6}, {16, 16}, {24, 27}, {32, 24}, {48, 142}, {64, 90}, {96, 577}, {192, 2743}, {384, 5984}},
        {{0, 111}, {1, 230}, {2, 269}, {3, 540}, {4, 1145}, {5, 1862}, {6, 2138}, {7, 1845}, {8, 976}, {9, 405}, {10, 70}, {11, 26}},
    };
    return d;
}

// Lattice points of the Newton polytope: stage counts of the enumeration
// (facet tuples, canonical tuples, non-negative completions, points in the
// polytope, orbits) and the face dimensions of the missing orbits.
inline const std::array<long, 5>& lattice_stage_counts() {
    static const std::array<long, 5> c{50388, 1349, 87435, 80788, 9686};
    return c;
}

inline constexpr long kMissingMonomials = 20992;

inline const std::map<int, int>& missing_face_dimensions() {
    static const std::map<int, int> m{{2, 15}, {3, 3}, {4, 20}, {5, 13}, {6, 7}, {7, 5}, {8, 6}};
    return m;
}


// A printed factor of an initial form: a polynomial expression, or the
// determinant of a square matrix of expressions when matrix has k*k entries.
struct PrintedFactor {
    std::vector<std::string> matrix;
    int multiplicity = 1;
};

inline PrintedFactor expr(std::string e, int m = 1) { return {{std::move(e)}, m}; }

struct InitialFormData {
    int facet_class;
    std::vector<PrintedFactor> factors;
    int scale = 1;                // in_w times scale equals the product
    int unknown_cofactors = 0;    // factors not printed
    int cofactor_terms = 0;
    int cofactor_degree = 0;
    long initial_form_terms = 0;  // 0 when not stated
    std::vector<std::uint32_t> embedded_d222;  // labels of a squared 2x2x2 hyperdeterminant factor
};

inline const std::vector<InitialFormData>& initial_form_data() {
    static const std::vector<InitialFormData> d{
        {1, {}, 1, 0, 0, 0, 0, {}},
        {2,
         {expr("c1010*c1001 - c1000*c1011"), expr("c0101*c0110 - c0100*c0111")},
         1, 2, 66, 6, 67230,
         {0b1000, 0b1001, 0b1010, 0b1011, 0b0100, 0b0101, 0b0110, 0b0111}},
        {3,
         {expr("c0011*c0101*c0110*c1001*c1010*c1100"),
          {{"0", "c0011", "c0101", "c1001", "c0011", "0", "c0110", "c1010", "c0101", "c0110", "0", "c1100", "c1001", "c1010",
            "c1100", "0"},
           2},
          {{"2*c0000", "c0001", "c0010", "c0100", "c1000", "c0001", "0", "c0011", "c0101", "c1001", "c0010", "c0011", "0",
            "c0110", "c1010", "c0100", "c0101", "c0110", "0", "c1100", "c1000", "c1001", "c1010", "c1100", "0"},
           1},
          {{"2*c1111", "c1110", "c1101", "c1011", "c0111", "c1110", "0", "c1100", "c1010", "c0110", "c1101", "c1100", "0",
            "c1001", "c0101", "c1011", "c1010", "c1001", "0", "c0011", "c0111", "c0110", "c0101", "c0011", "0"},
           1}},
         4, 0, 0, 0, 0, {}},
        {4,
         {expr("c0000*c1111 - c0001*c1110", 3), expr("c1100*c1111 - c1101*c1110"), expr("c1010*c1111 - c1011*c1110"),
          expr("c0110*c1111 - c0111*c1110"),
          expr("c0000^2*c1001*c1111 - c0000^2*c1011*c1101 - c0000*c0001*c1000*c1111 - c0000*c0001*c1001*c1110"
               " + c0000*c0001*c1010*c1101 + c0000*c0001*c1011*c1100 + c0001^2*c1000*c1110 - c0001^2*c1010*c1100"),
          expr("c0000^2*c0101*c1111 - c0000^2*c0111*c1101 - c0000*c0001*c0100*c1111 - c0000*c0001*c0101*c1110"
               " + c0000*c0001*c0110*c1101 + c0000*c0001*c0111*c1100 + c0001^2*c0100*c1110 - c0001^2*c0110*c1100"),
          expr("c0000^2*c0011*c1111 - c0000^2*c0111*c1011 - c0000*c0001*c0010*c1111 - c0000*c0001*c0011*c1110"
               " + c0000*c0001*c0110*c1011 + c0000*c0001*c0111*c1010 + c0001^2*c0010*c1110 - c0001^2*c0110*c1010")},
         1, 0, 0, 0, 0, {}},
        {5,
         {expr("c0000*c0011*c0101*c1010*c1100"), expr("c0011*c1100 - c0101*c1010", 3),
          expr("c0011*c1100*c1111 - c0011*c1101*c1110 - c0101*c1010*c1111 + c0101*c1011*c1110 + c0111*c1010*c1101"
               " - c0111*c1011*c1100")},
         1, 2, 15, 5, 0, {}},
        {6,
         {expr("c0000*c1100*c1010^4*c0101^4"),
          expr("c0101*c1010*c1111 - c0101*c1011*c1110 - c0111*c1010*c1101 + c0111*c1011*c1100"),
          expr("c0000*c0111*c1011 - c0001*c0111*c1010 - c0010*c0101*c1011 + c0011*c0101*c1010"),
          expr("c0000*c0101*c0111*c1110 - c0000*c0111^2*c1100 - c0010*c0101^2*c1110 + c0010*c0101*c0111*c1100"
               " - c0100*c0101*c0111*c1010 + c0101^2*c0110*c1010"),
          expr("c0000*c1010*c1011*c1101 - c0000*c1011^2*c1100 - c0001*c1010^2*c1101 + c0001*c1010*c1011*c1100"
               " - c0101*c1000*c1010*c1011 + c0101*c1001*c1010^2")},
         1, 0, 0, 0, 404, {}},
        {7,
         {expr("c1111*c0011^4*c1100^4"), expr("c0000*c0011*c1100 - c0001*c0010*c1100 - c0011*c0100*c1000"),
          expr("c0010*c1000*c1111 - c0010*c1011*c1100 - c0011*c1000*c1110 + c0011*c1010*c1100"),
          expr("c0010*c0100*c1111 - c0010*c0111*c1100 - c0011*c0100*c1110 + c0011*c0110*c1100"),
          expr("c0001*c1000*c1111 - c0001*c1011*c1100 - c0011*c1000*c1101 + c0011*c1001*c1100"),
          expr("c0001*c0100*c1111 - c0001*c0111*c1100 - c0011*c0100*c1101 + c0011*c0101*c1100")},
         1, 0, 0, 0, 0, {}},
        {8,
         {expr("c0000^3*c1111^3"), expr("c0000*c1100*c1111 - c0000*c1101*c1110 - c0100*c1000*c1111"),
          expr("c0000*c1010*c1111 - c0000*c1011*c1110 - c0010*c1000*c1111"),
          expr("c0000*c0110*c1111 - c0000*c0111*c1110 - c0010*c0100*c1111"),
          expr("c0000*c1001*c1111 - c0000*c1011*c1101 - c0001*c1000*c1111"),
          expr("c0000*c0101*c1111 - c0000*c0111*c1101 - c0001*c0100*c1111"),
          expr("c0000*c0011*c1111 - c0000*c0111*c1011 - c0001*c0010*c1111")},
         1, 0, 0, 0, 0, {}},
    };
    return d;
}

}  // namespace hypercube::newton
