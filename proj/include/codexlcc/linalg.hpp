#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "codexlcc/gf.hpp"

namespace codexlcc {

/// Dense matrix of field codes, row major.
class GfMat {
public:
    GfMat() = default;
    GfMat(FieldPtr f, size_t rows, size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldPtr& field() const { return f_; }

    uint32_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    uint32_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    std::span<const uint32_t> row(size_t r) const { return {a_.data() + r * cols_, cols_}; }
    std::span<uint32_t> row(size_t r) { return {a_.data() + r * cols_, cols_}; }

    std::vector<uint32_t> matvec(std::span<const uint32_t> x) const {
        if (x.size() != cols_) throw std::invalid_argument("GfMat::matvec: size mismatch");
        std::vector<uint32_t> y(rows_, 0);
        for (size_t r = 0; r < rows_; ++r) {
            uint32_t acc = 0;
            const uint32_t* row = a_.data() + r * cols_;
            for (size_t c = 0; c < cols_; ++c)
                if (row[c] && x[c]) acc = f_->add(acc, f_->mul(row[c], x[c]));
            y[r] = acc;
        }
        return y;
    }

private:
    FieldPtr f_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<uint32_t> a_;
};

/// Row reduction of A with the transform recorded, for repeated solves of
/// A x = b against a fixed A.  solve() returns the unique preimage on the
/// pivot coordinates (free coordinates set to zero) or nullopt if the system
/// is inconsistent.
class GfSolver {
public:
    explicit GfSolver(const GfMat& A) : f_(A.field()), rows_(A.rows()), cols_(A.cols()) {
        R_ = A;
        E_ = GfMat(f_, rows_, rows_);
        for (size_t i = 0; i < rows_; ++i) E_.at(i, i) = 1;
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; ++c) {
            size_t piv = r;
            while (piv < rows_ && R_.at(piv, c) == 0) ++piv;
            if (piv == rows_) continue;
            if (piv != r) {
                for (size_t j = 0; j < cols_; ++j) std::swap(R_.at(piv, j), R_.at(r, j));
                for (size_t j = 0; j < rows_; ++j) std::swap(E_.at(piv, j), E_.at(r, j));
            }
            const uint32_t pinv = f_->inv(R_.at(r, c));
            if (pinv != 1) {
                for (size_t j = c; j < cols_; ++j) R_.at(r, j) = f_->mul(R_.at(r, j), pinv);
                for (size_t j = 0; j < rows_; ++j) E_.at(r, j) = f_->mul(E_.at(r, j), pinv);
            }
            for (size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                const uint32_t v = R_.at(i, c);
                if (v == 0) continue;
                for (size_t j = c; j < cols_; ++j)
                    if (R_.at(r, j)) R_.at(i, j) = f_->sub(R_.at(i, j), f_->mul(v, R_.at(r, j)));
                for (size_t j = 0; j < rows_; ++j)
                    if (E_.at(r, j)) E_.at(i, j) = f_->sub(E_.at(i, j), f_->mul(v, E_.at(r, j)));
            }
            pivot_cols_.push_back(c);
            ++r;
        }
        rank_ = r;
    }

    size_t rank() const { return rank_; }
    const std::vector<size_t>& pivot_cols() const { return pivot_cols_; }

    std::optional<std::vector<uint32_t>> solve(std::span<const uint32_t> b) const {
        if (b.size() != rows_) throw std::invalid_argument("GfSolver::solve: size mismatch");
        std::vector<uint32_t> y = E_.matvec(b);
        for (size_t i = rank_; i < rows_; ++i)
            if (y[i] != 0) return std::nullopt;
        std::vector<uint32_t> x(cols_, 0);
        for (size_t i = 0; i < rank_; ++i) x[pivot_cols_[i]] = y[i];
        return x;
    }

    /// Basis of the null space of A.
    std::vector<std::vector<uint32_t>> kernel() const {
        std::vector<std::vector<uint32_t>> basis;
        std::vector<bool> is_pivot(cols_, false);
        for (size_t c : pivot_cols_) is_pivot[c] = true;
        for (size_t c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            std::vector<uint32_t> v(cols_, 0);
            v[c] = 1;
            for (size_t i = 0; i < rank_; ++i) v[pivot_cols_[i]] = f_->neg(R_.at(i, c));
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    FieldPtr f_;
    size_t rows_, cols_, rank_ = 0;
    GfMat R_, E_;
    std::vector<size_t> pivot_cols_;
};

inline size_t gf_rank(const GfMat& A) { return GfSolver(A).rank(); }

}  // namespace codexlcc
