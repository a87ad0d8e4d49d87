#pragma once

#include "zerosum/group.hpp"

#include <vector>

namespace testing_groups {

/// Every abelian group of order <= max, one spelling each.
inline std::vector<zerosum::GroupSpec> up_to(std::uint32_t max)
{
    const std::vector<std::vector<std::uint32_t>> all = {
        {2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2}, {9}, {3, 3}, {10}, {11},
        {12}, {2, 6}, {13}, {14}, {15}, {16}, {2, 8}, {4, 4}, {2, 2, 4}, {2, 2, 2, 2},
    };
    std::vector<zerosum::GroupSpec> out;
    for (const auto& orders : all) {
        zerosum::GroupSpec g(orders);
        if (g.order() <= max)
            out.push_back(g);
    }
    return out;
}

} // namespace testing_groups
