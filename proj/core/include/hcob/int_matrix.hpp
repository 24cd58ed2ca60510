#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "hcob/integer.hpp"

namespace hcob {

using IntVector = std::vector<BigInt>;

/// Dense row-major matrix of arbitrary precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols = 0);
    static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector column(std::size_t c) const;
    IntVector row(std::size_t r) const;
    IntMatrix transpose() const;
    /// Columns side by side; row counts must agree.
    IntMatrix hstack(const IntMatrix& other) const;
    IntMatrix vstack(const IntMatrix& other) const;
    /// Rows [r0, r1) and columns [c0, c1).
    IntMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
    IntVector apply(const IntVector& v) const;
    bool is_zero() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const BigInt& s, const IntMatrix& a);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

struct SmithResult {
    /// Nonzero diagonal entries, positive, each dividing the next.
    std::vector<BigInt> diag;
    /// left * m * right is diagonal with entries diag followed by zeros.
    IntMatrix left;
    IntMatrix left_inverse;
    IntMatrix right;
    std::size_t rank() const { return diag.size(); }
};

/// Pivot: nonzero entry of minimal absolute value, ties broken in row-major order.
SmithResult smith_normal_form(const IntMatrix& m);

/// Basis (as columns) of the lattice spanned by the columns of gens.
IntMatrix column_basis(const IntMatrix& gens);

/// Basis (as columns) of {x : m x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

/// Integer solution c of basis * c = v for a basis of full column rank.
std::optional<IntVector> solve_in_basis(const IntMatrix& basis, const IntVector& v);

/// Whether v lies in the lattice spanned by the columns of gens.
bool in_lattice(const IntMatrix& gens, const IntVector& v);

}  // namespace hcob
