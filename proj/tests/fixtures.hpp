#pragma once

#include "ipset/distance_matrix.hpp"

#include <vector>

namespace fixtures {

// First integral heptagon in general position, diameter 22270.
inline ipset::DistanceMatrix heptagon_22270()
{
    return ipset::DistanceMatrix::from_rows(std::vector<std::vector<long>>{
        {0, 22270, 22098, 16637, 9248, 8908, 8636},
        {22270, 0, 21488, 11397, 15138, 20698, 13746},
        {22098, 21488, 0, 10795, 14450, 13430, 20066},
        {16637, 11397, 10795, 0, 7395, 11135, 11049},
        {9248, 15138, 14450, 7395, 0, 5780, 5916},
        {8908, 20698, 13430, 11135, 5780, 0, 10744},
        {8636, 13746, 20066, 11049, 5916, 10744, 0},
    });
}

// Second heptagon, found under the characteristic restriction, diameter 66810.
inline ipset::DistanceMatrix heptagon_66810()
{
    return ipset::DistanceMatrix::from_rows(std::vector<std::vector<long>>{
        {0, 66810, 66555, 66294, 49928, 41238, 40290},
        {66810, 0, 32385, 64464, 32258, 25908, 52020},
        {66555, 32385, 0, 34191, 16637, 33147, 33405},
        {66294, 64464, 34191, 0, 34322, 53244, 26724},
        {49928, 32258, 16637, 34322, 0, 20066, 20698},
        {41238, 25908, 33147, 53244, 20066, 0, 32232},
        {40290, 52020, 33405, 26724, 20698, 32232, 0},
    });
}

inline ipset::DistanceMatrix triangle(long d12, long d13, long d23)
{
    return ipset::DistanceMatrix::from_rows(std::vector<std::vector<long>>{
        {0, d12, d13},
        {d12, 0, d23},
        {d13, d23, 0},
    });
}

} // namespace fixtures
