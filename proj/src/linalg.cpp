#include "chaincodes/linalg.hpp"

#include <algorithm>

namespace chaincodes {

namespace {

size_t pivot_col(const Vec& row) {
    for (size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) return i;
    return row.size();
}

}  // namespace

void rref(const Field& F, Mat& rows) {
    if (rows.empty()) return;
    size_t cols = rows[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
        size_t sel = rows.size();
        for (size_t i = rank; i < rows.size(); ++i)
            if (rows[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        uint32_t inv = F.inv(rows[rank][col]);
        for (size_t j = col; j < cols; ++j) rows[rank][j] = F.mul(rows[rank][j], inv);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            uint32_t s = rows[i][col];
            for (size_t j = col; j < cols; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(s, rows[rank][j]));
        }
        ++rank;
    }
    rows.resize(rank);
}

bool in_span(const Field& F, const Mat& rows, Vec v) {
    for (const Vec& row : rows) {
        size_t p = pivot_col(row);
        if (p >= v.size() || v[p] == 0) continue;
        uint32_t s = v[p];
        for (size_t j = p; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(s, row[j]));
    }
    return std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; });
}

std::optional<Vec> express(const Field& F, const Mat& rows, Vec v) {
    Vec coeffs(rows.size(), 0);
    for (size_t i = 0; i < rows.size(); ++i) {
        size_t p = pivot_col(rows[i]);
        if (p >= v.size() || v[p] == 0) continue;
        uint32_t s = v[p];
        coeffs[i] = s;
        for (size_t j = p; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(s, rows[i][j]));
    }
    if (!std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; }))
        return std::nullopt;
    return coeffs;
}

Mat kernel(const Field& F, const Mat& M, size_t cols) {
    Mat rows = M;
    rref(F, rows);
    std::vector<size_t> pivots;
    std::vector<bool> is_pivot(cols, false);
    for (const Vec& row : rows) {
        size_t p = pivot_col(row);
        pivots.push_back(p);
        if (p < cols) is_pivot[p] = true;
    }
    Mat basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(cols, 0);
        v[free_col] = 1;
        for (size_t i = 0; i < rows.size(); ++i)
            if (pivots[i] < cols) v[pivots[i]] = F.neg(rows[i][free_col]);
        basis.push_back(std::move(v));
    }
    rref(F, basis);
    return basis;
}

}  // namespace chaincodes
