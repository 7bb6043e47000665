#pragma once

#include <vector>

#include "pinch/field.hpp"

namespace pinch {

// Rank by exact Gaussian elimination. Rows are consumed.
inline int matrixRank(std::vector<std::vector<FieldElement>> rows, const FieldSpec& field) {
    int rank = 0;
    const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    int pivotRow = 0;
    for (int col = 0; col < cols && pivotRow < static_cast<int>(rows.size()); ++col) {
        int found = -1;
        for (int r = pivotRow; r < static_cast<int>(rows.size()); ++r) {
            if (!field.isZero(rows[r][col])) {
                found = r;
                break;
            }
        }
        if (found < 0) continue;
        std::swap(rows[pivotRow], rows[found]);
        const FieldElement inv = field.invert(rows[pivotRow][col]);
        for (int c = col; c < cols; ++c) rows[pivotRow][c] = field.mul(rows[pivotRow][c], inv);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == pivotRow || field.isZero(rows[r][col])) continue;
            const FieldElement factor = rows[r][col];
            for (int c = col; c < cols; ++c)
                rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[pivotRow][c]));
        }
        ++pivotRow;
        ++rank;
    }
    return rank;
}

}  // namespace pinch
