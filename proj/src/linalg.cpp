#include "polyspace/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyspace {

Int bareiss_determinant(std::vector<std::vector<Int>> a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return Int(1);
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return Int(0);
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = t / prev;  // exact by Bareiss
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

int rank_mod2(std::vector<std::vector<Int>> a) {
    if (a.empty()) return 0;
    const std::size_t cols = a[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.size() && mod_floor(a[pivot][col], 2) == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[row], a[pivot]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i != row && mod_floor(a[i][col], 2) == 1)
                for (std::size_t j = col; j < cols; ++j) a[i][j] += a[row][j];
        }
        ++row;
    }
    return static_cast<int>(row);
}

int rational_rank(std::vector<std::vector<Rat>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].numerator() == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][col].numerator() == 0) continue;
            Rat f = rows[i][col] / rows[rank][col];
            for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

int symmetric_signature(std::vector<std::vector<Rat>> a) {
    const std::size_t n = a.size();
    auto add_row_col = [&](std::size_t dst, std::size_t src) {
        for (std::size_t j = 0; j < n; ++j) a[dst][j] += a[src][j];
        for (std::size_t i = 0; i < n; ++i) a[i][dst] += a[i][src];
    };
    auto swap_row_col = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        for (std::size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
    };
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k].numerator() == 0) {
            std::size_t d = k + 1;
            while (d < n && a[d][d].numerator() == 0) ++d;
            if (d < n) {
                swap_row_col(k, d);
            } else {
                std::size_t off = k + 1;
                while (off < n && a[k][off].numerator() == 0) ++off;
                if (off == n) continue;  // zero row, contributes nothing
                add_row_col(k, off);     // makes a[k][k] = 2*a[k][off] != 0
            }
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].numerator() == 0) continue;
            Rat f = a[i][k] / a[k][k];
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[k][j];
            for (std::size_t j = 0; j < n; ++j) a[j][i] -= f * a[j][k];
        }
    }
    int positive = 0, negative = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k].numerator() > 0) ++positive;
        if (a[k][k].numerator() < 0) ++negative;
    }
    return positive - negative;
}

std::optional<std::vector<Rat>> LatticeBasis::coordinates(std::vector<Rat> v) const {
    if (static_cast<int>(v.size()) != ambient)
        throw std::invalid_argument("coordinate vector has wrong dimension");
    std::vector<Rat> coords;
    coords.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Rat q = v[pivots[i]] / rows[i][pivots[i]];
        coords.push_back(q);
        if (q.numerator() != 0)
            for (int j = 0; j < ambient; ++j) v[j] -= q * rows[i][j];
    }
    for (const Rat& x : v)
        if (x.numerator() != 0) return std::nullopt;
    return coords;
}

LatticeBasis lattice_from_generators(int ambient, const std::vector<std::vector<Rat>>& generators) {
    // clear denominators, run an integer HNF, scale back
    Int scale = 1;
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != ambient)
            throw std::invalid_argument("lattice generator has wrong dimension");
        for (const Rat& x : g) scale = boost::multiprecision::lcm(scale, x.denominator());
    }
    std::vector<std::vector<Int>> m;
    m.reserve(generators.size());
    for (const auto& g : generators) {
        std::vector<Int> row(ambient);
        bool nonzero = false;
        for (int j = 0; j < ambient; ++j) {
            row[j] = g[j].numerator() * (scale / g[j].denominator());
            nonzero = nonzero || row[j] != 0;
        }
        if (nonzero) m.push_back(std::move(row));
    }

    LatticeBasis basis;
    basis.ambient = ambient;
    std::size_t row = 0;
    for (int col = 0; col < ambient && row < m.size(); ++col) {
        bool column_occupied = false;
        for (std::size_t i = row; i < m.size(); ++i) column_occupied = column_occupied || m[i][col] != 0;
        if (!column_occupied) continue;
        // Euclidean elimination: shrink the column to a single nonzero entry
        while (true) {
            std::size_t best = m.size();
            for (std::size_t i = row; i < m.size(); ++i) {
                if (m[i][col] == 0) continue;
                if (best == m.size() ||
                    boost::multiprecision::abs(m[i][col]) < boost::multiprecision::abs(m[best][col]))
                    best = i;
            }
            std::swap(m[row], m[best]);
            bool leftovers = false;
            for (std::size_t i = row + 1; i < m.size(); ++i) {
                if (m[i][col] == 0) continue;
                Int q = m[i][col] / m[row][col];
                if (q != 0)
                    for (int j = 0; j < ambient; ++j) m[i][j] -= q * m[row][j];
                leftovers = leftovers || m[i][col] != 0;
            }
            if (!leftovers) break;
        }
        if (m[row][col] < 0)
            for (int j = 0; j < ambient; ++j) m[row][j] = -m[row][j];
        basis.pivots.push_back(col);
        ++row;
    }
    m.resize(row);

    // reduce entries above each pivot into [0, pivot)
    for (std::size_t i = row; i-- > 0;) {
        int col = basis.pivots[i];
        for (std::size_t k = 0; k < i; ++k) {
            Int q;
            if (m[k][col] >= 0) {
                q = m[k][col] / m[i][col];
            } else {
                Int numerator = -m[k][col] + m[i][col] - 1;
                q = -(numerator / m[i][col]);
            }
            if (q != 0)
                for (int j = 0; j < ambient; ++j) m[k][j] -= q * m[i][j];
        }
    }

    basis.rows.reserve(row);
    for (std::size_t i = 0; i < row; ++i) {
        std::vector<Rat> r(ambient);
        for (int j = 0; j < ambient; ++j) r[j] = Rat(m[i][j], scale);
        basis.rows.push_back(std::move(r));
    }
    return basis;
}

}  // namespace polyspace
