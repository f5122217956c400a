#pragma once

#include "picard/fq.hpp"

#include <optional>
#include <vector>

namespace picard {

/// Dense matrix over F_{p^2} with exact Gaussian elimination.
class FqMat {
public:
    FqMat(const FqCtx& ctx, int rows, int cols)
        : ctx_(&ctx), rows_(rows), cols_(cols), a_(rows * cols, FqElem::zero(ctx)) {}

    static FqMat identity(const FqCtx& ctx, int n) {
        FqMat m(ctx, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = FqElem::one(ctx);
        return m;
    }

    const FqCtx& ctx() const { return *ctx_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    FqElem& at(int i, int j) { return a_[i * cols_ + j]; }
    const FqElem& at(int i, int j) const { return a_[i * cols_ + j]; }

    FqMat operator*(const FqMat& o) const {
        FqMat r(*ctx_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
            }
        return r;
    }
    FqMat operator+(const FqMat& o) const {
        FqMat r = *this;
        for (int i = 0; i < rows_ * cols_; ++i) r.a_[i] = r.a_[i] + o.a_[i];
        return r;
    }
    FqMat operator*(const FqElem& s) const {
        FqMat r = *this;
        for (auto& x : r.a_) x = x * s;
        return r;
    }
    FqMat transpose() const {
        FqMat r(*ctx_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }
    /// Entrywise p-power (the matrix of the Frobenius base change).
    FqMat frobenius() const {
        FqMat r = *this;
        for (auto& x : r.a_) x = x.frobenius();
        return r;
    }
    bool is_zero() const {
        for (auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool operator==(const FqMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && [&] {
            for (int i = 0; i < rows_ * cols_; ++i)
                if (!(a_[i] == o.a_[i])) return false;
            return true;
        }();
    }

    int rank() const {
        FqMat m = *this;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int piv = -1;
            for (int i = r; i < rows_; ++i)
                if (!m.at(i, c).is_zero()) { piv = i; break; }
            if (piv < 0) continue;
            m.swap_rows(piv, r);
            FqElem inv = m.at(r, c).inv();
            for (int j = 0; j < cols_; ++j) m.at(r, j) = m.at(r, j) * inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == r || m.at(i, c).is_zero()) continue;
                FqElem f = m.at(i, c);
                for (int j = 0; j < cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
            }
            ++r;
        }
        return r;
    }

    /// Basis of the right kernel, as columns.
    std::vector<std::vector<FqElem>> kernel_basis() const {
        FqMat m = *this;
        std::vector<int> pivot_col;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int piv = -1;
            for (int i = r; i < rows_; ++i)
                if (!m.at(i, c).is_zero()) { piv = i; break; }
            if (piv < 0) continue;
            m.swap_rows(piv, r);
            FqElem inv = m.at(r, c).inv();
            for (int j = 0; j < cols_; ++j) m.at(r, j) = m.at(r, j) * inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == r || m.at(i, c).is_zero()) continue;
                FqElem f = m.at(i, c);
                for (int j = 0; j < cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
            }
            pivot_col.push_back(c);
            ++r;
        }
        std::vector<std::vector<FqElem>> basis;
        std::vector<bool> is_pivot(cols_, false);
        for (int c : pivot_col) is_pivot[c] = true;
        for (int freec = 0; freec < cols_; ++freec) {
            if (is_pivot[freec]) continue;
            std::vector<FqElem> v(cols_, FqElem::zero(*ctx_));
            v[freec] = FqElem::one(*ctx_);
            for (size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -m.at(static_cast<int>(k), freec);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Inverse of a square matrix; empty optional when singular.
    std::optional<FqMat> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        FqMat m = *this, inv = identity(*ctx_, rows_);
        for (int c = 0; c < cols_; ++c) {
            int piv = -1;
            for (int i = c; i < rows_; ++i)
                if (!m.at(i, c).is_zero()) { piv = i; break; }
            if (piv < 0) return std::nullopt;
            m.swap_rows(piv, c);
            inv.swap_rows(piv, c);
            FqElem f = m.at(c, c).inv();
            for (int j = 0; j < cols_; ++j) { m.at(c, j) = m.at(c, j) * f; inv.at(c, j) = inv.at(c, j) * f; }
            for (int i = 0; i < rows_; ++i) {
                if (i == c || m.at(i, c).is_zero()) continue;
                FqElem g = m.at(i, c);
                for (int j = 0; j < cols_; ++j) {
                    m.at(i, j) = m.at(i, j) - g * m.at(c, j);
                    inv.at(i, j) = inv.at(i, j) - g * inv.at(c, j);
                }
            }
        }
        return inv;
    }

    /// Whether v lies in the column span.
    bool in_column_span(const std::vector<FqElem>& v) const {
        FqMat aug(*ctx_, rows_, cols_ + 1);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = v[i];
        }
        return aug.rank() == rank();
    }

private:
    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }
    const FqCtx* ctx_;
    int rows_, cols_;
    std::vector<FqElem> a_;
};

} // namespace picard
