#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hcob/abelian_group.hpp"
#include "hcob/module_lattice.hpp"
#include "hcob/simplicial_complex.hpp"

namespace hcob {

/// Integer linear form in face values: entry f is the coefficient of v(f).
/// Indexed by face mask; entry 0 is unused.
using FaceForm = std::vector<std::int64_t>;

/// Extends face data to every contractible subcomplex by inclusion-exclusion,
/// attaching one maximal face at a time. Each extension is computed along two
/// attachment orders and the results are compared.
class FaceExtension {
public:
    explicit FaceExtension(int p);

    int ambient_dim() const { return p_; }
    /// Form computing t(K) = tau(simplex, K) from face values.
    /// Throws std::domain_error if K is not contractible and std::logic_error
    /// if two attachment orders disagree.
    const FaceForm& form(const SubComplex& k);
    bool contractible(const SubComplex& k);

private:
    struct Split {
        std::uint64_t left;
        std::uint64_t right;
        std::uint64_t meet;
    };
    std::vector<Split> admissible_splits(const SubComplex& k);
    FaceForm combine(const Split& s);

    int p_;
    std::unordered_map<std::uint64_t, FaceForm> memo_;
    std::unordered_map<std::uint64_t, bool> contractible_;
};

/// A functor on contractible subcomplexes of the p-simplex satisfying inclusion-exclusion,
/// stored by its face values v(f) = tau(simplex, f) with v(top) = 0.
class TorsionFunctor {
public:
    /// face_values is indexed by face mask (size 2^{p+1}); entry 0 is ignored.
    /// Throws std::invalid_argument unless the top value vanishes and sizes match.
    TorsionFunctor(int p, std::shared_ptr<const CyclicDecomposition> target, std::vector<ModVector> face_values);

    static TorsionFunctor zero(int p, std::shared_ptr<const CyclicDecomposition> target);

    int ambient_dim() const { return p_; }
    const CyclicDecomposition& target() const { return *target_; }
    const std::shared_ptr<const CyclicDecomposition>& target_ptr() const { return target_; }
    const ModVector& face_value(Face f) const;
    const std::vector<ModVector>& face_values() const { return values_; }

    ModVector evaluate(const FaceForm& form) const;
    /// tau(simplex, K).
    ModVector value(const SubComplex& k, FaceExtension& ext) const;
    ModVector value(const SubComplex& k) const;
    /// tau(L, K) = tau(simplex, K) - tau(simplex, L) for K inside L.
    ModVector tau(const SubComplex& l, const SubComplex& k, FaceExtension& ext) const;

    friend bool operator==(const TorsionFunctor& a, const TorsionFunctor& b)
    {
        return a.p_ == b.p_ && a.values_ == b.values_;
    }

private:
    int p_;
    std::shared_ptr<const CyclicDecomposition> target_;
    std::vector<ModVector> values_;
};

/// Validates face data and returns the extended functor.
TorsionFunctor iota_shriek(int p, std::shared_ptr<const CyclicDecomposition> target,
                           std::vector<ModVector> face_values);

/// Restriction of a functor to its face values.
std::vector<ModVector> iota_star(const TorsionFunctor& tf);

/// An arbitrary functor on contractible subcomplexes, by its values t(K) = tau(simplex, K).
/// Only for ambient dimension <= 3, where the poset is enumerated.
class PosetFunctor {
public:
    PosetFunctor(int p, std::shared_ptr<const CyclicDecomposition> target,
                 std::map<std::uint64_t, ModVector> values);
    static PosetFunctor from(const TorsionFunctor& tf);

    int ambient_dim() const { return p_; }
    const CyclicDecomposition& target() const { return *target_; }
    const std::shared_ptr<const CyclicDecomposition>& target_ptr() const { return target_; }
    const ModVector& value(const SubComplex& k) const;
    bool defined(const SubComplex& k) const { return values_.count(k.bits()) != 0; }
    const std::map<std::uint64_t, ModVector>& values() const { return values_; }

private:
    int p_;
    std::shared_ptr<const CyclicDecomposition> target_;
    std::map<std::uint64_t, ModVector> values_;
};

/// Pullback along the codegeneracy s^j from the p-simplex to the (p+1)-simplex,
/// without re-extension. Generally leaves the inclusion-exclusion subgroup.
/// Complexes whose image is not contractible (possible from ambient dimension 3) are left undefined.
PosetFunctor raw_degeneracy(const PosetFunctor& f, int j);

struct PushoutSquare {
    SubComplex k;
    SubComplex k0;
    SubComplex k1;
    SubComplex k01;
};

/// Every square K = K0 u K1, K01 = K0 n K1 with all four contractible. p <= 3.
std::vector<PushoutSquare> contractible_pushout_squares(int p);

/// t(K) + t(K01) = t(K0) + t(K1) on the given square.
bool square_holds(const PosetFunctor& f, const PushoutSquare& sq);
/// All contractible pushout squares on which f is defined. Ambient dimension <= 3.
bool check_square(const PosetFunctor& f);
bool check_square(const TorsionFunctor& tf);

/// tau(sigma, d_i sigma) = (-1)^{dim sigma} T tau(sigma, horn_i sigma) for one index i.
bool face_horn_duality_at(const TorsionFunctor& tf, Face sigma, int i, FaceExtension& ext);
/// All indices i for the face sigma (trivially true for vertices).
bool check_face_horn_duality(const TorsionFunctor& tf, Face sigma, FaceExtension& ext);
bool check_face_horn_duality(const TorsionFunctor& tf, Face sigma);
/// Duality for every face.
bool satisfies_all_dualities(const TorsionFunctor& tf, FaceExtension& ext);

/// tau(sigma, d_I sigma) = (-1)^{dim sigma} T tau(sigma, d_J sigma), J the complement of I.
/// index_set is a bitmask of a proper nonempty subset of {0..dim sigma}.
bool generalized_face_duality(const TorsionFunctor& tf, Face sigma, std::uint32_t index_set, FaceExtension& ext);

/// Boundary of a pure k-dimensional complex: closure of the (k-1)-faces lying in exactly one k-face.
std::optional<SubComplex> pure_boundary(const SubComplex& k);

/// tau(K, Q) = (-1)^k T tau(K, dK minus int Q) for K a contractible union of k-faces and
/// Q inside dK a contractible union of (k-1)-faces. nullopt when the data do not qualify.
std::optional<bool> generalized_complex_duality(const TorsionFunctor& tf, const SubComplex& k,
                                                const SubComplex& q, FaceExtension& ext);

/// Duality for all faces but the top one, and the 0-th face-horn of the top face.
bool duality_criterion_hypothesis(const TorsionFunctor& tf, FaceExtension& ext);
/// True iff the hypothesis fails or full duality holds.
bool duality_criterion(const TorsionFunctor& tf, FaceExtension& ext);
bool duality_criterion(const TorsionFunctor& tf);

/// The simplicial abelian group of functors satisfying the vanishing and duality
/// conditions, for a fixed coefficient group with involution.
class FAlgModel {
public:
    /// Largest simplicial degree supported: ambient dimension p + 1 <= kMaxAmbient.
    static constexpr int kMaxDegree = kMaxAmbient - 1;

    explicit FAlgModel(const InvolutiveAbelianGroup& a);

    const CyclicDecomposition& target() const { return *target_; }
    const std::shared_ptr<const CyclicDecomposition>& target_ptr() const { return target_; }

    /// Moduli of the scalar unknowns of degree p: face slots times components.
    std::vector<std::int64_t> scalar_moduli(int p) const;
    ModVector to_scalars(const TorsionFunctor& tf) const;
    TorsionFunctor from_scalars(int p, const ModVector& x) const;

    /// Degree p elements, as a subgroup of the scalar space.
    SubgroupLattice group(int p) const;
    /// Normalized chains: intersection of the kernels of the faces 1..n.
    SubgroupLattice normalized(int n) const;
    /// Homology of the normalized complex with differential the 0-th face. n <= kMaxDegree - 1.
    FgAbGroup moore_homotopy(int n) const;

    /// Vanishing and duality conditions, checked directly.
    bool is_element(const TorsionFunctor& tf) const;
    /// All degree p elements. Finite coefficients only.
    std::vector<TorsionFunctor> enumerate(int p) const;

    /// i-th face map, degree p to p - 1.
    TorsionFunctor face(const TorsionFunctor& x, int i) const;
    /// i-th degeneracy, degree p to p + 1.
    TorsionFunctor degeneracy(const TorsionFunctor& x, int i) const;
    /// tau(simplex, vertex 0).
    ModVector psi(const TorsionFunctor& x) const;

private:
    struct Equation {
        FaceForm plain;
        FaceForm twisted;
    };
    std::vector<Equation> defining_equations(int p) const;
    std::vector<Equation> face_kernel_equations(int p, int i) const;
    void impose(SubgroupLattice& s, int p, const std::vector<Equation>& eqs) const;
    ModVector apply_face(int p, int i, const ModVector& x) const;

    std::shared_ptr<const CyclicDecomposition> target_;
};

}  // namespace hcob
