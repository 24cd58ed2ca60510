#include "hcob/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hcob {

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

/// Working state of the Smith reduction with all transforms kept in sync.
class SmithState {
public:
    explicit SmithState(const IntMatrix& m)
        : d_(m), l_(IntMatrix::identity(m.rows())), linv_(IntMatrix::identity(m.rows())),
          r_(IntMatrix::identity(m.cols()))
    {
    }

    void run()
    {
        const std::size_t rows = d_.rows(), cols = d_.cols();
        for (std::size_t t = 0; t < rows && t < cols; ++t) {
            if (!select_pivot(t, t, rows, t, cols))
                break;
            for (;;) {
                clear_row_and_column(t);
                if (select_pivot_in_cross(t))
                    continue;
                if (!fix_divisibility(t))
                    break;
            }
            if (d_.at(t, t) < 0)
                negate_row(t);
            diag_.push_back(d_.at(t, t));
        }
    }

    SmithResult result() &&
    {
        return SmithResult{std::move(diag_), std::move(l_), std::move(linv_), std::move(r_)};
    }

private:
    bool select_pivot(std::size_t t, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1)
    {
        bool found = false;
        std::size_t br = 0, bc = 0;
        BigInt best;
        for (std::size_t i = r0; i < r1; ++i)
            for (std::size_t j = c0; j < c1; ++j) {
                const BigInt& v = d_.at(i, j);
                if (v == 0)
                    continue;
                BigInt a = abs_big(v);
                if (!found || a < best) {
                    found = true;
                    best = std::move(a);
                    br = i;
                    bc = j;
                }
            }
        if (!found)
            return false;
        swap_rows(t, br);
        swap_cols(t, bc);
        return true;
    }

    void clear_row_and_column(std::size_t t)
    {
        const BigInt p = d_.at(t, t);
        for (std::size_t i = t + 1; i < d_.rows(); ++i) {
            if (d_.at(i, t) == 0)
                continue;
            const BigInt q = d_.at(i, t) / p;
            if (q != 0)
                add_row_multiple(i, t, -q);
        }
        for (std::size_t j = t + 1; j < d_.cols(); ++j) {
            if (d_.at(t, j) == 0)
                continue;
            const BigInt q = d_.at(t, j) / p;
            if (q != 0)
                add_col_multiple(j, t, -q);
        }
    }

    /// After remainders, a smaller nonzero entry may remain in row or column t.
    bool select_pivot_in_cross(std::size_t t)
    {
        std::size_t best_i = t, best_j = t;
        BigInt best = abs_big(d_.at(t, t));
        bool moved = false;
        for (std::size_t i = t + 1; i < d_.rows(); ++i)
            if (d_.at(i, t) != 0 && abs_big(d_.at(i, t)) < best) {
                best = abs_big(d_.at(i, t));
                best_i = i;
                best_j = t;
                moved = true;
            }
        for (std::size_t j = t + 1; j < d_.cols(); ++j)
            if (d_.at(t, j) != 0 && abs_big(d_.at(t, j)) < best) {
                best = abs_big(d_.at(t, j));
                best_i = t;
                best_j = j;
                moved = true;
            }
        bool remaining = false;
        for (std::size_t i = t + 1; i < d_.rows() && !remaining; ++i)
            remaining = d_.at(i, t) != 0;
        for (std::size_t j = t + 1; j < d_.cols() && !remaining; ++j)
            remaining = d_.at(t, j) != 0;
        if (moved) {
            swap_rows(t, best_i);
            swap_cols(t, best_j);
        }
        return remaining;
    }

    bool fix_divisibility(std::size_t t)
    {
        const BigInt p = d_.at(t, t);
        for (std::size_t i = t + 1; i < d_.rows(); ++i)
            for (std::size_t j = t + 1; j < d_.cols(); ++j)
                if (d_.at(i, j) % p != 0) {
                    add_row_multiple(t, i, BigInt(1));
                    return true;
                }
        return false;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < d_.cols(); ++j)
            std::swap(d_.at(a, j), d_.at(b, j));
        for (std::size_t j = 0; j < l_.cols(); ++j)
            std::swap(l_.at(a, j), l_.at(b, j));
        for (std::size_t i = 0; i < linv_.rows(); ++i)
            std::swap(linv_.at(i, a), linv_.at(i, b));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t i = 0; i < d_.rows(); ++i)
            std::swap(d_.at(i, a), d_.at(i, b));
        for (std::size_t i = 0; i < r_.rows(); ++i)
            std::swap(r_.at(i, a), r_.at(i, b));
    }

    /// row_dst += q * row_src
    void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& q)
    {
        for (std::size_t j = 0; j < d_.cols(); ++j)
            if (d_.at(src, j) != 0)
                d_.at(dst, j) += q * d_.at(src, j);
        for (std::size_t j = 0; j < l_.cols(); ++j)
            if (l_.at(src, j) != 0)
                l_.at(dst, j) += q * l_.at(src, j);
        for (std::size_t i = 0; i < linv_.rows(); ++i)
            if (linv_.at(i, dst) != 0)
                linv_.at(i, src) -= q * linv_.at(i, dst);
    }

    /// col_dst += q * col_src
    void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& q)
    {
        for (std::size_t i = 0; i < d_.rows(); ++i)
            if (d_.at(i, src) != 0)
                d_.at(i, dst) += q * d_.at(i, src);
        for (std::size_t i = 0; i < r_.rows(); ++i)
            if (r_.at(i, src) != 0)
                r_.at(i, dst) += q * r_.at(i, src);
    }

    void negate_row(std::size_t t)
    {
        for (std::size_t j = 0; j < d_.cols(); ++j)
            d_.at(t, j) = -d_.at(t, j);
        for (std::size_t j = 0; j < l_.cols(); ++j)
            l_.at(t, j) = -l_.at(t, j);
        for (std::size_t i = 0; i < linv_.rows(); ++i)
            linv_.at(i, t) = -linv_.at(i, t);
    }

    IntMatrix d_;
    IntMatrix l_;
    IntMatrix linv_;
    IntMatrix r_;
    std::vector<BigInt> diag_;
};

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        for (long long v : r)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols)
{
    if (!rows.empty())
        cols = rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows)
{
    IntMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            m.at(i, j) = columns[j][i];
    }
    return m;
}

IntVector IntMatrix::column(std::size_t c) const
{
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = at(i, c);
    return v;
}

IntVector IntMatrix::row(std::size_t r) const
{
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::hstack(const IntMatrix& other) const
{
    if (rows_ != other.rows_)
        throw std::invalid_argument("hstack row mismatch");
    IntMatrix m(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            m.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j)
            m.at(i, cols_ + j) = other.at(i, j);
    }
    return m;
}

IntMatrix IntMatrix::vstack(const IntMatrix& other) const
{
    if (cols_ != other.cols_)
        throw std::invalid_argument("vstack column mismatch");
    IntMatrix m(rows_ + other.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < other.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m.at(rows_ + i, j) = other.at(i, j);
    return m;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const
{
    IntMatrix m(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j)
            m.at(i - r0, j - c0) = at(i, j);
    return m;
}

IntVector IntMatrix::apply(const IntVector& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("matrix-vector size mismatch");
    IntVector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0)
                r[i] += at(i, j) * v[j];
    return r;
}

bool IntMatrix::is_zero() const
{
    for (const auto& v : data_)
        if (v != 0)
            return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product size mismatch");
    IntMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const BigInt& x = a.at(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b.at(k, j) != 0)
                    m.at(i, j) += x * b.at(k, j);
        }
    return m;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum size mismatch");
    IntMatrix m = a;
    for (std::size_t k = 0; k < m.data_.size(); ++k)
        m.data_[k] += b.data_[k];
    return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix difference size mismatch");
    IntMatrix m = a;
    for (std::size_t k = 0; k < m.data_.size(); ++k)
        m.data_[k] -= b.data_[k];
    return m;
}

IntMatrix operator*(const BigInt& s, const IntMatrix& a)
{
    IntMatrix m = a;
    for (auto& v : m.data_)
        v *= s;
    return m;
}

std::string IntMatrix::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j)
                out += ",";
            out += at(i, j).str();
        }
        out += "]";
    }
    return out + "]";
}

SmithResult smith_normal_form(const IntMatrix& m)
{
    SmithState state(m);
    state.run();
    return std::move(state).result();
}

IntMatrix column_basis(const IntMatrix& gens)
{
    const SmithResult s = smith_normal_form(gens);
    // gens * right = left_inverse * D, so the image is spanned by d_i * (column i of left_inverse).
    IntMatrix basis(gens.rows(), s.rank());
    for (std::size_t j = 0; j < s.rank(); ++j)
        for (std::size_t i = 0; i < gens.rows(); ++i)
            basis.at(i, j) = s.left_inverse.at(i, j) * s.diag[j];
    return basis;
}

IntMatrix kernel_basis(const IntMatrix& m)
{
    const SmithResult s = smith_normal_form(m);
    return s.right.block(0, m.cols(), s.rank(), m.cols());
}

std::optional<IntVector> solve_in_basis(const IntMatrix& basis, const IntVector& v)
{
    if (v.size() != basis.rows())
        throw std::invalid_argument("vector length differs from lattice dimension");
    const SmithResult s = smith_normal_form(basis);
    if (s.rank() != basis.cols())
        throw std::invalid_argument("lattice generators are not linearly independent");
    const IntVector lv = s.left.apply(v);
    IntVector y(basis.cols());
    for (std::size_t i = 0; i < lv.size(); ++i) {
        if (i < s.rank()) {
            if (lv[i] % s.diag[i] != 0)
                return std::nullopt;
            y[i] = lv[i] / s.diag[i];
        } else if (lv[i] != 0) {
            return std::nullopt;
        }
    }
    return s.right.apply(y);
}

bool in_lattice(const IntMatrix& gens, const IntVector& v)
{
    const IntMatrix basis = column_basis(gens);
    if (basis.cols() == 0) {
        for (const auto& x : v)
            if (x != 0)
                return false;
        return true;
    }
    return solve_in_basis(basis, v).has_value();
}

}  // namespace hcob
