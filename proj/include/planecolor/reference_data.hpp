#pragma once

// Reference edge lists and spindle image coordinates, with 1-based labels.

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace planecolor::reference {

using Pairs = std::vector<std::pair<int, int>>;

inline const Pairs root2_unit = {{1, 6},  {1, 7},  {1, 9},  {1, 12},  {2, 3},   {2, 5},   {2, 9},
                                 {3, 4},  {3, 7},  {4, 5},  {4, 12},  {5, 6},   {6, 10},  {6, 13},
                                 {7, 8},  {7, 11}, {8, 9},  {9, 10},  {11, 12}, {12, 13}};
inline const Pairs root2_d = {{2, 4}, {2, 8},  {2, 10}, {2, 12}, {3, 5},  {3, 6},  {3, 8},
                              {3, 11}, {4, 9}, {4, 11}, {4, 13}, {5, 7}, {5, 10}, {5, 13}};

inline const Pairs exotic_unit = {{1, 3},  {1, 5},   {1, 8},   {1, 12},  {2, 4},   {2, 6},   {2, 7},
                                  {2, 11}, {3, 5},   {3, 9},   {4, 6},   {4, 10},  {9, 11},  {9, 13},
                                  {10, 12}, {10, 13}, {11, 12}, {11, 13}, {12, 13}};
inline const Pairs exotic_d = {{1, 4}, {1, 6}, {1, 13}, {2, 3}, {2, 5},  {2, 13}, {3, 8},
                               {3, 13}, {4, 7}, {4, 13}, {5, 7}, {6, 8}, {7, 10}, {8, 9}};

/// Images 2'..5' of the two K5 minus e spindles.
inline const std::array<std::pair<std::string, std::string>, 4> root3_images = {{
    {"7/4", "s3*s5/4"},
    {"(7 + 3*s5)/16", "(-7*s3 + s3*s5)/16"},
    {"7/8", "s3*s5/8"},
    {"(7 - 3*s5)/16", "(7*s3 + s3*s5)/16"},
}};
inline const std::array<std::pair<std::string, std::string>, 4> root6_images = {{
    {"(3*s2*s3 + s2*s7)/8", "(-3*s2 + s2*s3*s7)/8"},
    {"(-3*s2 + s2*s7)/8", "(-3*s2 - s2*s7)/8"},
    {"(-3*s2 + 3*s2*s3 + s2*s7 + s2*s3*s7)/16", "(-3*s2 - 3*s2*s3 - s2*s7 + s2*s3*s7)/16"},
    {"(-3*s2 + 3*s2*s3 - s2*s7 - s2*s3*s7)/16", "(3*s2 + 3*s2*s3 - s2*s7 + s2*s3*s7)/16"},
}};

}  // namespace planecolor::reference
