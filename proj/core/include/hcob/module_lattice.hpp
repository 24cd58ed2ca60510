#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hcob/abelian_group.hpp"

namespace hcob {

using ModVector = std::vector<std::int64_t>;

/// A = Z/m_1 + ... + Z/m_k (m_i >= 2, or 0 for Z) with the involution transported
/// from an integer presentation through its Smith form.
class CyclicDecomposition {
public:
    explicit CyclicDecomposition(const InvolutiveAbelianGroup& a);

    const InvolutiveAbelianGroup& source() const { return source_; }
    const std::vector<std::int64_t>& moduli() const { return moduli_; }
    std::size_t rank() const { return moduli_.size(); }
    /// action()[i][j]: coefficient of component j of x in component i of t.x.
    const std::vector<std::vector<std::int64_t>>& action() const { return action_; }

    bool is_finite() const;
    /// Throws std::domain_error when infinite.
    std::int64_t order() const;

    ModVector zero() const { return ModVector(rank(), 0); }
    ModVector reduce(ModVector x) const;
    ModVector add(const ModVector& x, const ModVector& y) const;
    ModVector sub(const ModVector& x, const ModVector& y) const;
    ModVector scale(std::int64_t s, const ModVector& x) const;
    ModVector act(const ModVector& x) const;
    bool is_zero(const ModVector& x) const;

    ModVector from_presentation(const IntVector& x) const;
    IntVector to_presentation(const ModVector& y) const;

    /// Every element, in lexicographic order of coordinates. Finite groups only.
    std::vector<ModVector> elements() const;

private:
    InvolutiveAbelianGroup source_;
    std::vector<std::int64_t> moduli_;
    std::vector<std::size_t> kept_;
    std::vector<std::vector<std::int64_t>> action_;
    IntMatrix left_;
    IntMatrix left_inverse_;
};

/// Echelon basis of a subgroup of G = Z/m_1 + ... + Z/m_N (m = 0 meaning Z),
/// computed from the lattice generated by the subgroup together with the m_c e_c.
class SubgroupBasis {
public:
    struct Row {
        std::size_t pivot;
        std::int64_t height;
        ModVector vector;
    };

    SubgroupBasis(std::vector<std::int64_t> moduli, const std::vector<ModVector>& generators);

    const std::vector<std::int64_t>& moduli() const { return moduli_; }
    /// Rows contributing to the subgroup (pivot height below the modulus).
    const std::vector<Row>& rows() const { return rows_; }

    bool is_finite() const;
    /// Exact order; throws std::domain_error when infinite.
    BigInt order() const;
    /// Coordinates with respect to rows(), or nullopt if x is not in the subgroup.
    std::optional<std::vector<std::int64_t>> coordinates(const ModVector& x) const;
    bool contains(const ModVector& x) const { return coordinates(x).has_value(); }
    /// Relation lattice among rows(), as columns.
    IntMatrix relations() const;
    FgAbGroup iso_type() const;
    /// this / sub. Throws std::invalid_argument unless sub is contained in this subgroup.
    FgAbGroup quotient(const std::vector<ModVector>& sub_generators) const;
    /// All elements, each exactly once. Finite subgroups only.
    std::vector<ModVector> elements() const;

private:
    std::vector<std::int64_t> moduli_;
    std::vector<Row> rows_;
};

/// Subgroup of G kept as a generating set; linear constraints cut it down in place.
class SubgroupLattice {
public:
    /// The whole group G.
    explicit SubgroupLattice(std::vector<std::int64_t> moduli);
    static SubgroupLattice generated_by(std::vector<std::int64_t> moduli, const std::vector<ModVector>& gens);

    const std::vector<std::int64_t>& moduli() const { return moduli_; }
    const std::vector<ModVector>& generators() const { return gens_; }

    /// Restricts to {x : sum coeffs[c] x[c] = 0 mod modulus}; modulus 0 means an exact equation.
    /// The form must be well defined on G.
    void impose(const std::vector<std::int64_t>& coeffs, std::int64_t modulus);

    SubgroupBasis basis() const { return SubgroupBasis(moduli_, gens_); }

    ModVector reduce(ModVector x) const;

private:
    std::vector<std::int64_t> moduli_;
    std::vector<ModVector> gens_;
};

}  // namespace hcob
