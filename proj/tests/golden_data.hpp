// Frozen golden data for generator and sequence-map tests.
// Regenerating any of these values requires an independent implementation;
// they are pinned here so the tests cannot drift with the code under test.
#pragma once
#include <cstdint>
#include <vector>

namespace golden {

using Mat = std::vector<std::vector<std::int64_t>>;

// psi of f = 2*x0*x1 + x0*x2 + x3 on Z2^2 x Z3^2, lambda = 6.
inline const std::vector<std::int64_t> kSeq36 = {0, 0, 0, 1, 1, 1, 2, 2, 2, 0, 1, 2, 1, 2, 3, 2, 3, 4, 0, 0, 0, 1, 1, 1, 2, 2, 2, 2, 3, 4, 3, 4, 5, 4, 5, 0};

// (3,3,9)-CCC from p=3, m=2, identity permutation, c=(1,2), constant 1, q=3.
inline const std::vector<Mat> kCcc339 = {
    {
      {1, 2, 0, 0, 2, 1, 2, 2, 2},
      {1, 0, 2, 0, 0, 0, 2, 0, 1},
      {1, 1, 1, 0, 1, 2, 2, 1, 0}},
    {
      {1, 2, 0, 1, 0, 2, 1, 1, 1},
      {1, 0, 2, 1, 1, 1, 1, 2, 0},
      {1, 1, 1, 1, 2, 0, 1, 0, 2}},
    {
      {1, 2, 0, 2, 1, 0, 0, 0, 0},
      {1, 0, 2, 2, 2, 2, 0, 1, 2},
      {1, 1, 1, 2, 0, 1, 0, 2, 1}}
};

// (6,6,36)-CCC from factors (2,2) and (3,2), q=6, coefficients (1,0) / (2,0),
// constants 1 / 2. The last code carries only the five rows that are pinned;
// the sixth row is checked by property instead.
inline const std::vector<Mat> kCcc6636 = {
    {
      {3, 5, 1, 3, 1, 5, 3, 3, 3, 4, 0, 2, 4, 2, 0, 4, 4, 4, 3, 5, 1, 3, 1, 5, 3, 3, 3, 1, 3, 5, 1, 5, 3, 1, 1, 1},
      {3, 1, 5, 3, 3, 3, 3, 5, 1, 4, 2, 0, 4, 4, 4, 4, 0, 2, 3, 1, 5, 3, 3, 3, 3, 5, 1, 1, 5, 3, 1, 1, 1, 1, 3, 5},
      {3, 3, 3, 3, 5, 1, 3, 1, 5, 4, 4, 4, 4, 0, 2, 4, 2, 0, 3, 3, 3, 3, 5, 1, 3, 1, 5, 1, 1, 1, 1, 3, 5, 1, 5, 3},
      {3, 5, 1, 3, 1, 5, 3, 3, 3, 1, 3, 5, 1, 5, 3, 1, 1, 1, 3, 5, 1, 3, 1, 5, 3, 3, 3, 4, 0, 2, 4, 2, 0, 4, 4, 4},
      {3, 1, 5, 3, 3, 3, 3, 5, 1, 1, 5, 3, 1, 1, 1, 1, 3, 5, 3, 1, 5, 3, 3, 3, 3, 5, 1, 4, 2, 0, 4, 4, 4, 4, 0, 2},
      {3, 3, 3, 3, 5, 1, 3, 1, 5, 1, 1, 1, 1, 3, 5, 1, 5, 3, 3, 3, 3, 3, 5, 1, 3, 1, 5, 4, 4, 4, 4, 0, 2, 4, 2, 0}},
    {
      {3, 5, 1, 5, 3, 1, 1, 1, 1, 4, 0, 2, 0, 4, 2, 2, 2, 2, 3, 5, 1, 5, 3, 1, 1, 1, 1, 1, 3, 5, 3, 1, 5, 5, 5, 5},
      {3, 1, 5, 5, 5, 5, 1, 3, 5, 4, 2, 0, 0, 0, 0, 2, 4, 0, 3, 1, 5, 5, 5, 5, 1, 3, 5, 1, 5, 3, 3, 3, 3, 5, 1, 3},
      {3, 3, 3, 5, 1, 3, 1, 5, 3, 4, 4, 4, 0, 2, 4, 2, 0, 4, 3, 3, 3, 5, 1, 3, 1, 5, 3, 1, 1, 1, 3, 5, 1, 5, 3, 1},
      {3, 5, 1, 5, 3, 1, 1, 1, 1, 1, 3, 5, 3, 1, 5, 5, 5, 5, 3, 5, 1, 5, 3, 1, 1, 1, 1, 4, 0, 2, 0, 4, 2, 2, 2, 2},
      {3, 1, 5, 5, 5, 5, 1, 3, 5, 1, 5, 3, 3, 3, 3, 5, 1, 3, 3, 1, 5, 5, 5, 5, 1, 3, 5, 4, 2, 0, 0, 0, 0, 2, 4, 0},
      {3, 3, 3, 5, 1, 3, 1, 5, 3, 1, 1, 1, 3, 5, 1, 5, 3, 1, 3, 3, 3, 5, 1, 3, 1, 5, 3, 4, 4, 4, 0, 2, 4, 2, 0, 4}},
    {
      {3, 5, 1, 1, 5, 3, 5, 5, 5, 4, 0, 2, 2, 0, 4, 0, 0, 0, 3, 5, 1, 1, 5, 3, 5, 5, 5, 1, 3, 5, 5, 3, 1, 3, 3, 3},
      {3, 1, 5, 1, 1, 1, 5, 1, 3, 4, 2, 0, 2, 2, 2, 0, 2, 4, 3, 1, 5, 1, 1, 1, 5, 1, 3, 1, 5, 3, 5, 5, 5, 3, 5, 1},
      {3, 3, 3, 1, 3, 5, 5, 3, 1, 4, 4, 4, 2, 4, 0, 0, 4, 2, 3, 3, 3, 1, 3, 5, 5, 3, 1, 1, 1, 1, 5, 1, 3, 3, 1, 5},
      {3, 5, 1, 1, 5, 3, 5, 5, 5, 1, 3, 5, 5, 3, 1, 3, 3, 3, 3, 5, 1, 1, 5, 3, 5, 5, 5, 4, 0, 2, 2, 0, 4, 0, 0, 0},
      {3, 1, 5, 1, 1, 1, 5, 1, 3, 1, 5, 3, 5, 5, 5, 3, 5, 1, 3, 1, 5, 1, 1, 1, 5, 1, 3, 4, 2, 0, 2, 2, 2, 0, 2, 4},
      {3, 3, 3, 1, 3, 5, 5, 3, 1, 1, 1, 1, 5, 1, 3, 3, 1, 5, 3, 3, 3, 1, 3, 5, 5, 3, 1, 4, 4, 4, 2, 4, 0, 0, 4, 2}},
    {
      {3, 5, 1, 3, 1, 5, 3, 3, 3, 4, 0, 2, 4, 2, 0, 4, 4, 4, 0, 2, 4, 0, 4, 2, 0, 0, 0, 4, 0, 2, 4, 2, 0, 4, 4, 4},
      {3, 1, 5, 3, 3, 3, 3, 5, 1, 4, 2, 0, 4, 4, 4, 4, 0, 2, 0, 4, 2, 0, 0, 0, 0, 2, 4, 4, 2, 0, 4, 4, 4, 4, 0, 2},
      {3, 3, 3, 3, 5, 1, 3, 1, 5, 4, 4, 4, 4, 0, 2, 4, 2, 0, 0, 0, 0, 0, 2, 4, 0, 4, 2, 4, 4, 4, 4, 0, 2, 4, 2, 0},
      {3, 5, 1, 3, 1, 5, 3, 3, 3, 1, 3, 5, 1, 5, 3, 1, 1, 1, 0, 2, 4, 0, 4, 2, 0, 0, 0, 1, 3, 5, 1, 5, 3, 1, 1, 1},
      {3, 1, 5, 3, 3, 3, 3, 5, 1, 1, 5, 3, 1, 1, 1, 1, 3, 5, 0, 4, 2, 0, 0, 0, 0, 2, 4, 1, 5, 3, 1, 1, 1, 1, 3, 5},
      {3, 3, 3, 3, 5, 1, 3, 1, 5, 1, 1, 1, 1, 3, 5, 1, 5, 3, 0, 0, 0, 0, 2, 4, 0, 4, 2, 1, 1, 1, 1, 3, 5, 1, 5, 3}},
    {
      {3, 5, 1, 5, 3, 1, 1, 1, 1, 4, 0, 2, 0, 4, 2, 2, 2, 2, 0, 2, 4, 2, 0, 4, 4, 4, 4, 4, 0, 2, 0, 4, 2, 2, 2, 2},
      {3, 1, 5, 5, 5, 5, 1, 3, 5, 4, 2, 0, 0, 0, 0, 2, 4, 0, 0, 4, 2, 2, 2, 2, 4, 0, 2, 4, 2, 0, 0, 0, 0, 2, 4, 0},
      {3, 3, 3, 5, 1, 3, 1, 5, 3, 4, 4, 4, 0, 2, 4, 2, 0, 4, 0, 0, 0, 2, 4, 0, 4, 2, 0, 4, 4, 4, 0, 2, 4, 2, 0, 4},
      {3, 5, 1, 5, 3, 1, 1, 1, 1, 1, 3, 5, 3, 1, 5, 5, 5, 5, 0, 2, 4, 2, 0, 4, 4, 4, 4, 1, 3, 5, 3, 1, 5, 5, 5, 5},
      {3, 1, 5, 5, 5, 5, 1, 3, 5, 1, 5, 3, 3, 3, 3, 5, 1, 3, 0, 4, 2, 2, 2, 2, 4, 0, 2, 1, 5, 3, 3, 3, 3, 5, 1, 3},
      {3, 3, 3, 5, 1, 3, 1, 5, 3, 1, 1, 1, 3, 5, 1, 5, 3, 1, 0, 0, 0, 2, 4, 0, 4, 2, 0, 1, 1, 1, 3, 5, 1, 5, 3, 1}},
    {
      {3, 5, 1, 1, 5, 3, 5, 5, 5, 4, 0, 2, 2, 0, 4, 0, 0, 0, 0, 2, 4, 4, 2, 0, 2, 2, 2, 4, 0, 2, 2, 0, 4, 0, 0, 0},
      {3, 1, 5, 1, 1, 1, 5, 1, 3, 4, 2, 0, 2, 2, 2, 0, 2, 4, 0, 4, 2, 4, 4, 4, 2, 4, 0, 4, 2, 0, 2, 2, 2, 0, 2, 4},
      {3, 3, 3, 1, 3, 5, 5, 3, 1, 4, 4, 4, 2, 4, 0, 0, 4, 2, 0, 0, 0, 4, 0, 2, 2, 0, 4, 4, 4, 4, 2, 4, 0, 0, 4, 2},
      {3, 5, 1, 1, 5, 3, 5, 5, 5, 1, 3, 5, 5, 3, 1, 3, 3, 3, 0, 2, 4, 4, 2, 0, 2, 2, 2, 1, 3, 5, 5, 3, 1, 3, 3, 3},
      {3, 1, 5, 1, 1, 1, 5, 1, 3, 1, 5, 3, 5, 5, 5, 3, 5, 1, 0, 4, 2, 4, 4, 4, 2, 4, 0, 1, 5, 3, 5, 5, 5, 3, 5, 1}}
};

}  // namespace golden
