#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hcob/cyclotomic.hpp"
#include "hcob/group_ring.hpp"
#include "hcob/report.hpp"

namespace hcob {

/// Linear lens space L^{2n-1}_p(r_1 : ... : r_n).
class LensSpace {
public:
    /// Throws std::invalid_argument unless p is an odd prime and every weight is nonzero mod p.
    LensSpace(long long p, std::vector<long long> weights);
    /// Weights 1, ..., p-1, each repeated k times.
    static LensSpace balanced(long long p, long long k);

    long long prime() const { return p_; }
    const std::vector<long long>& weights() const { return weights_; }
    std::size_t n() const { return weights_.size(); }
    long long dimension() const { return 2 * static_cast<long long>(weights_.size()) - 1; }
    std::string to_string() const;

private:
    long long p_;
    std::vector<long long> weights_;
};

/// Reidemeister torsion, the product of (zeta^{r_j} - 1) in Q(zeta_p).
struct RTorsion {
    CyclotomicElement value;
};

RTorsion reidemeister_torsion(const LensSpace& l);

/// The sign and power with x = sign * zeta^power * y, if any.
std::optional<TrivialUnitWitness> rt_equivalence_witness(const RTorsion& x, const RTorsion& y);
bool rt_equivalent(const RTorsion& x, const RTorsion& y);

/// A unit i mod p realized by a homotopy self-equivalence, with i^n = sign mod p.
/// sign = +1 is the orientation-preserving branch.
struct HomotopyAutomorphism {
    long long i;
    int sign;
};

/// All i coprime to p with i^n = +-1 mod p, ascending.
std::vector<HomotopyAutomorphism> homotopy_auto_image(const LensSpace& l);

/// Whether the automorphism t -> t^i preserves the Reidemeister torsion up to +-zeta^k.
/// Throws std::invalid_argument if i is not in homotopy_auto_image(l).
bool is_simple_auto(const LensSpace& l, long long i);

struct InertiaClass {
    /// phi_i(u) u^{-1} for the first label i in the class.
    WhiteheadClass value;
    /// Every simple automorphism label giving this class.
    std::vector<long long> labels;
};

struct InertiaSet {
    std::vector<InertiaClass> classes;
    std::size_t cardinality() const { return classes.size(); }
};

/// Classes of phi_i(u) u^{-1} over the simple automorphisms i, deduplicated modulo trivial units.
/// Throws std::invalid_argument unless u lives in Z[C_p].
InertiaSet inertia_set(const LensSpace& l, const WhiteheadClass& u);
/// Throws std::domain_error if u is not a unit.
InertiaSet inertia_set(const LensSpace& l, const GroupRingElement& u);

/// The unit 2 + 2t - t^3 - t^4 - t^5 of Z[C_7].
GroupRingElement theorem_a_unit();
/// Its inverse 1 - 2t + 3t^2 - 3t^3 + 3t^4 - 2t^5 + t^6.
GroupRingElement theorem_a_unit_inverse();

/// The full inertia pipeline for M = L^{12k-1}_7 h-cobordant to the balanced lens space
/// via a cobordism of torsion u. Without an override u is theorem_a_unit().
/// Throws std::invalid_argument if k < 1.
ReportDocument theorem_a_report(long long k, const std::optional<GroupRingElement>& unit_override = std::nullopt);

}  // namespace hcob
