// Reference values of T(n,k) for n <= 6.
#ifndef TGF_TESTS_REFERENCE_TABLE_HPP
#define TGF_TESTS_REFERENCE_TABLE_HPP

#include <vector>

namespace tgf::testing {

inline const std::vector<std::vector<long>>& reference_table() {
    static const std::vector<std::vector<long>> kRows = {
        {1},
        {1},
        {2, 1},
        {5, 6, 1},
        {14, 28, 12, 1},
        {42, 120, 90, 20, 1},
        {132, 495, 550, 220, 30, 1},
    };
    return kRows;
}

}  // namespace tgf::testing

#endif  // TGF_TESTS_REFERENCE_TABLE_HPP
