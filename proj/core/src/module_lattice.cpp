#include "hcob/module_lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace hcob {

namespace {

std::int64_t to_int64(const BigInt& v)
{
    if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN))
        throw std::overflow_error("value does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

std::int64_t reduce_entry(std::int64_t v, std::int64_t m) { return m > 0 ? mod_floor(v, m) : v; }

void reduce_vector(ModVector& x, const std::vector<std::int64_t>& moduli)
{
    for (std::size_t c = 0; c < x.size(); ++c)
        x[c] = reduce_entry(x[c], moduli[c]);
}

/// dst -= q * src, reduced.
void sub_multiple(ModVector& dst, const ModVector& src, std::int64_t q, const std::vector<std::int64_t>& moduli,
                  std::size_t from = 0)
{
    if (q == 0)
        return;
    for (std::size_t c = from; c < dst.size(); ++c) {
        if (src[c] == 0)
            continue;
        dst[c] = reduce_entry(checked_add(dst[c], -checked_mul(q, src[c])), moduli[c]);
    }
}

bool all_zero(const ModVector& x)
{
    return std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; });
}

/// Floor division with a positive or negative divisor.
std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

}  // namespace

CyclicDecomposition::CyclicDecomposition(const InvolutiveAbelianGroup& a) : source_(a)
{
    const std::size_t g = a.generator_count();
    const SmithResult s = smith_normal_form(a.relations());
    left_ = s.left;
    left_inverse_ = s.left_inverse;
    for (std::size_t i = 0; i < g; ++i) {
        const BigInt d = i < s.rank() ? s.diag[i] : BigInt(0);
        if (d == 1)
            continue;
        kept_.push_back(i);
        moduli_.push_back(to_int64(d));
    }
    const IntMatrix t = left_ * a.involution() * left_inverse_;
    action_.assign(rank(), std::vector<std::int64_t>(rank(), 0));
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) {
            BigInt v = t.at(kept_[i], kept_[j]);
            if (moduli_[i] > 0) {
                v %= moduli_[i];
                if (v < 0)
                    v += moduli_[i];
            }
            action_[i][j] = to_int64(v);
        }
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) {
            const bool ok = moduli_[i] == 0 ? (moduli_[j] == 0 || action_[i][j] == 0)
                                            : mod_floor(checked_mul(action_[i][j], moduli_[j]), moduli_[i]) == 0;
            if (!ok)
                throw std::logic_error("transported involution is not well defined");
        }
}

bool CyclicDecomposition::is_finite() const
{
    return std::none_of(moduli_.begin(), moduli_.end(), [](std::int64_t m) { return m == 0; });
}

std::int64_t CyclicDecomposition::order() const
{
    if (!is_finite())
        throw std::domain_error("order of an infinite group");
    std::int64_t o = 1;
    for (auto m : moduli_)
        o = checked_mul(o, m);
    return o;
}

ModVector CyclicDecomposition::reduce(ModVector x) const
{
    if (x.size() != rank())
        throw std::invalid_argument("element has the wrong number of components");
    reduce_vector(x, moduli_);
    return x;
}

ModVector CyclicDecomposition::add(const ModVector& x, const ModVector& y) const
{
    ModVector r(rank());
    for (std::size_t i = 0; i < rank(); ++i)
        r[i] = checked_add(x[i], y[i]);
    return reduce(std::move(r));
}

ModVector CyclicDecomposition::sub(const ModVector& x, const ModVector& y) const
{
    ModVector r(rank());
    for (std::size_t i = 0; i < rank(); ++i)
        r[i] = checked_add(x[i], -y[i]);
    return reduce(std::move(r));
}

ModVector CyclicDecomposition::scale(std::int64_t s, const ModVector& x) const
{
    ModVector r(rank());
    for (std::size_t i = 0; i < rank(); ++i)
        r[i] = checked_mul(s, x[i]);
    return reduce(std::move(r));
}

ModVector CyclicDecomposition::act(const ModVector& x) const
{
    ModVector r(rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j)
            r[i] = checked_add(r[i], checked_mul(action_[i][j], x[j]));
    return reduce(std::move(r));
}

bool CyclicDecomposition::is_zero(const ModVector& x) const { return all_zero(reduce(x)); }

ModVector CyclicDecomposition::from_presentation(const IntVector& x) const
{
    const IntVector y = left_.apply(x);
    ModVector r(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        BigInt v = y[kept_[i]];
        if (moduli_[i] > 0) {
            v %= moduli_[i];
            if (v < 0)
                v += moduli_[i];
        }
        r[i] = to_int64(v);
    }
    return r;
}

IntVector CyclicDecomposition::to_presentation(const ModVector& y) const
{
    IntVector full(source_.generator_count());
    for (std::size_t i = 0; i < rank(); ++i)
        full[kept_[i]] = y[i];
    return left_inverse_.apply(full);
}

std::vector<ModVector> CyclicDecomposition::elements() const
{
    if (!is_finite())
        throw std::domain_error("cannot enumerate an infinite group");
    std::vector<ModVector> out;
    ModVector cur(rank(), 0);
    for (;;) {
        out.push_back(cur);
        std::size_t i = rank();
        while (i > 0) {
            --i;
            if (++cur[i] < moduli_[i])
                break;
            cur[i] = 0;
            if (i == 0)
                return out;
        }
        if (rank() == 0)
            return out;
    }
}

SubgroupBasis::SubgroupBasis(std::vector<std::int64_t> moduli, const std::vector<ModVector>& generators)
    : moduli_(std::move(moduli))
{
    const std::size_t n = moduli_.size();
    std::vector<ModVector> pool;
    pool.reserve(generators.size() + n);
    for (ModVector g : generators) {
        reduce_vector(g, moduli_);
        if (!all_zero(g))
            pool.push_back(std::move(g));
    }
    for (std::size_t c = 0; c < n; ++c)
        if (moduli_[c] > 0) {
            ModVector e(n, 0);
            e[c] = moduli_[c];
            pool.push_back(std::move(e));
        }

    for (std::size_t c = 0; c < n; ++c) {
        // Euclid on column c among the remaining rows.
        for (;;) {
            std::size_t best = pool.size();
            for (std::size_t r = 0; r < pool.size(); ++r)
                if (pool[r][c] != 0 && (best == pool.size() || std::llabs(pool[r][c]) < std::llabs(pool[best][c])))
                    best = r;
            if (best == pool.size())
                break;
            bool others = false;
            for (std::size_t r = 0; r < pool.size(); ++r) {
                if (r == best || pool[r][c] == 0)
                    continue;
                const std::int64_t q = floor_div(pool[r][c], pool[best][c]);
                pool[r][c] = checked_add(pool[r][c], -checked_mul(q, pool[best][c]));
                for (std::size_t k = c + 1; k < n; ++k)
                    if (pool[best][k] != 0)
                        pool[r][k] = reduce_entry(checked_add(pool[r][k], -checked_mul(q, pool[best][k])), moduli_[k]);
                if (pool[r][c] != 0)
                    others = true;
            }
            if (others)
                continue;
            ModVector row = std::move(pool[best]);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
            if (row[c] < 0)
                for (auto& v : row)
                    v = -v;
            reduce_vector(row, moduli_);
            if (row[c] == 0)
                row[c] = moduli_[c];
            const std::int64_t h = row[c];
            if (moduli_[c] > 0 && h == moduli_[c]) {
                // Row equals m_c e_c up to a tail lying in the span of the remaining rows.
                break;
            }
            rows_.push_back(Row{c, h, std::move(row)});
            break;
        }
        pool.erase(std::remove_if(pool.begin(), pool.end(), all_zero), pool.end());
    }
}

bool SubgroupBasis::is_finite() const
{
    return std::none_of(rows_.begin(), rows_.end(), [&](const Row& r) { return moduli_[r.pivot] == 0; });
}

BigInt SubgroupBasis::order() const
{
    if (!is_finite())
        throw std::domain_error("order of an infinite subgroup");
    BigInt o = 1;
    for (const auto& r : rows_)
        o *= moduli_[r.pivot] / r.height;
    return o;
}

std::optional<std::vector<std::int64_t>> SubgroupBasis::coordinates(const ModVector& x_in) const
{
    if (x_in.size() != moduli_.size())
        throw std::invalid_argument("vector length differs from the ambient rank");
    ModVector x = x_in;
    reduce_vector(x, moduli_);
    std::vector<std::int64_t> coords(rows_.size(), 0);
    std::size_t next = 0;
    for (std::size_t c = 0; c < x.size(); ++c) {
        if (next < rows_.size() && rows_[next].pivot == c) {
            const Row& row = rows_[next];
            if (x[c] % row.height != 0)
                return std::nullopt;
            const std::int64_t a = x[c] / row.height;
            coords[next] = a;
            sub_multiple(x, row.vector, a, moduli_, c);
            ++next;
        }
        if (x[c] != 0)
            return std::nullopt;
    }
    return coords;
}

IntMatrix SubgroupBasis::relations() const
{
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        const Row& row = rows_[j];
        const std::int64_t m = moduli_[row.pivot];
        if (m == 0)
            continue;
        const std::int64_t k = m / row.height;
        ModVector y(row.vector.size(), 0);
        for (std::size_t c = 0; c < y.size(); ++c)
            y[c] = reduce_entry(checked_mul(k, row.vector[c]), moduli_[c]);
        auto a = coordinates(y);
        if (!a)
            throw std::logic_error("echelon relation left the subgroup");
        IntVector rel(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i)
            rel[i] = -(*a)[i];
        rel[j] += k;
        cols.push_back(std::move(rel));
    }
    return IntMatrix::from_columns(cols, rows_.size());
}

FgAbGroup SubgroupBasis::iso_type() const { return cokernel(relations()); }

FgAbGroup SubgroupBasis::quotient(const std::vector<ModVector>& sub_generators) const
{
    std::vector<IntVector> cols;
    for (const auto& g : sub_generators) {
        auto a = coordinates(g);
        if (!a)
            throw std::invalid_argument("quotient: generator outside the subgroup");
        cols.emplace_back(a->begin(), a->end());
    }
    return cokernel(relations().hstack(IntMatrix::from_columns(cols, rows_.size())));
}

std::vector<ModVector> SubgroupBasis::elements() const
{
    if (!is_finite())
        throw std::domain_error("cannot enumerate an infinite subgroup");
    std::vector<std::int64_t> radix;
    for (const auto& r : rows_)
        radix.push_back(moduli_[r.pivot] / r.height);
    std::vector<ModVector> out;
    std::vector<std::int64_t> a(rows_.size(), 0);
    for (;;) {
        ModVector x(moduli_.size(), 0);
        for (std::size_t j = 0; j < rows_.size(); ++j)
            sub_multiple(x, rows_[j].vector, -a[j], moduli_);
        out.push_back(std::move(x));
        std::size_t j = rows_.size();
        bool done = true;
        while (j > 0) {
            --j;
            if (++a[j] < radix[j]) {
                done = false;
                break;
            }
            a[j] = 0;
        }
        if (done)
            return out;
    }
}

SubgroupLattice::SubgroupLattice(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli))
{
    for (std::size_t c = 0; c < moduli_.size(); ++c) {
        if (moduli_[c] < 0 || moduli_[c] == 1)
            throw std::invalid_argument("component modulus must be 0 or at least 2");
        ModVector e(moduli_.size(), 0);
        e[c] = 1;
        gens_.push_back(std::move(e));
    }
}

SubgroupLattice SubgroupLattice::generated_by(std::vector<std::int64_t> moduli, const std::vector<ModVector>& gens)
{
    SubgroupLattice s(std::move(moduli));
    s.gens_.clear();
    for (const auto& g : gens) {
        ModVector r = s.reduce(g);
        if (!all_zero(r))
            s.gens_.push_back(std::move(r));
    }
    return s;
}

ModVector SubgroupLattice::reduce(ModVector x) const
{
    if (x.size() != moduli_.size())
        throw std::invalid_argument("vector length differs from the ambient rank");
    reduce_vector(x, moduli_);
    return x;
}

void SubgroupLattice::impose(const std::vector<std::int64_t>& coeffs, std::int64_t modulus)
{
    if (coeffs.size() != moduli_.size())
        throw std::invalid_argument("constraint length differs from the ambient rank");
    std::vector<std::int64_t> alpha(gens_.size(), 0);
    for (std::size_t j = 0; j < gens_.size(); ++j) {
        std::int64_t s = 0;
        for (std::size_t c = 0; c < coeffs.size(); ++c)
            if (coeffs[c] != 0 && gens_[j][c] != 0)
                s = checked_add(s, checked_mul(coeffs[c], gens_[j][c]));
        alpha[j] = reduce_entry(s, modulus);
    }
    for (;;) {
        std::size_t piv = gens_.size();
        for (std::size_t j = 0; j < gens_.size(); ++j)
            if (alpha[j] != 0 && (piv == gens_.size() || std::llabs(alpha[j]) < std::llabs(alpha[piv])))
                piv = j;
        if (piv == gens_.size())
            return;
        bool others = false;
        for (std::size_t j = 0; j < gens_.size(); ++j) {
            if (j == piv || alpha[j] == 0)
                continue;
            const std::int64_t q = alpha[j] / alpha[piv];
            sub_multiple(gens_[j], gens_[piv], q, moduli_);
            alpha[j] = reduce_entry(checked_add(alpha[j], -checked_mul(q, alpha[piv])), modulus);
            if (alpha[j] != 0)
                others = true;
        }
        if (others)
            continue;
        if (modulus == 0) {
            gens_.erase(gens_.begin() + static_cast<std::ptrdiff_t>(piv));
        } else {
            const std::int64_t g = std::gcd(alpha[piv], modulus);
            const std::int64_t k = modulus / g;
            for (std::size_t c = 0; c < moduli_.size(); ++c)
                gens_[piv][c] = reduce_entry(checked_mul(k, gens_[piv][c]), moduli_[c]);
            if (all_zero(gens_[piv]))
                gens_.erase(gens_.begin() + static_cast<std::ptrdiff_t>(piv));
        }
        gens_.erase(std::remove_if(gens_.begin(), gens_.end(), all_zero), gens_.end());
        return;
    }
}

}  // namespace hcob
