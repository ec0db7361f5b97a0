#include "linalg.hpp"

namespace ydc {

namespace {

struct Echelon {
    Matrix rows;
    std::vector<int> pivot_col;  // per reduced row
};

// reduced row echelon form; b (if present) is carried as an extra column
Echelon rref(Matrix a, int ncols) {
    Echelon e;
    e.rows = std::move(a);
    int row = 0;
    int nrows = static_cast<int>(e.rows.size());
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int pivot = -1;
        for (int r = row; r < nrows; ++r) {
            if (e.rows[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(e.rows[row], e.rows[pivot]);
        Rat inv = e.rows[row][col];
        for (auto& v : e.rows[row]) v /= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == row || e.rows[r][col] == 0) continue;
            Rat f = e.rows[r][col];
            for (size_t c = col; c < e.rows[r].size(); ++c) e.rows[r][c] -= f * e.rows[row][c];
        }
        e.pivot_col.push_back(col);
        ++row;
    }
    return e;
}

}  // namespace

SolveOutcome solve(Matrix a, std::vector<Rat> b) {
    if (a.size() != b.size()) fail(errc::invalid_input, "matrix/rhs size mismatch");
    int ncols = a.empty() ? 0 : static_cast<int>(a[0].size());
    for (size_t r = 0; r < a.size(); ++r) {
        if (static_cast<int>(a[r].size()) != ncols)
            fail(errc::invalid_input, "ragged matrix");
        a[r].push_back(b[r]);
    }
    Echelon e = rref(std::move(a), ncols);
    SolveOutcome out;
    out.rank = static_cast<int>(e.pivot_col.size());
    out.consistent = true;
    for (size_t r = out.rank; r < e.rows.size(); ++r)
        if (e.rows[r][ncols] != 0) out.consistent = false;
    std::vector<char> is_pivot(ncols, 0);
    for (int c : e.pivot_col) is_pivot[c] = 1;
    for (int c = 0; c < ncols; ++c)
        if (!is_pivot[c]) out.free_cols.push_back(c);
    if (out.consistent) {
        out.solution.assign(ncols, Rat(0));
        for (size_t r = 0; r < e.pivot_col.size(); ++r)
            out.solution[e.pivot_col[r]] = e.rows[r][ncols];
    }
    return out;
}

std::vector<std::vector<Rat>> nullspace(Matrix a, int ncols) {
    for (auto& row : a)
        if (static_cast<int>(row.size()) != ncols) fail(errc::invalid_input, "ragged matrix");
    Echelon e = rref(std::move(a), ncols);
    std::vector<char> is_pivot(ncols, 0);
    for (int c : e.pivot_col) is_pivot[c] = 1;
    std::vector<std::vector<Rat>> basis;
    for (int fc = 0; fc < ncols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rat> v(ncols, Rat(0));
        v[fc] = 1;
        for (size_t r = 0; r < e.pivot_col.size(); ++r) v[e.pivot_col[r]] = -e.rows[r][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace ydc
