#pragma once

#include <memory>
#include <string>

#include "hcob/abelian_group.hpp"
#include "hcob/falg.hpp"
#include "hcob/group_ring.hpp"
#include "hcob/report.hpp"
#include "hcob/simplicial_complex.hpp"
#include "hcob/torsion_calculus.hpp"

namespace hcob {

// Deterministic JSON text for the value types. indent < 0 gives compact output.
// Every parser throws std::invalid_argument on malformed or inconsistent input.

/// {"order": n, "coeffs": ["c0", ...]} with decimal-string integers.
std::string to_json(const GroupRingElement& x, int indent = -1);
GroupRingElement group_ring_from_json(const std::string& text);

/// {"generators": g, "relations": [[...], ...], "involution": [[...], ...]}.
/// relations lists the relators (columns of the relation matrix); involution lists rows.
std::string to_json(const InvolutiveAbelianGroup& a, int indent = -1);
InvolutiveAbelianGroup involutive_group_from_json(const std::string& text);

/// {"invariant_factors": [...]}, 0 for a free summand.
std::string to_json(const FgAbGroup& g, int indent = -1);
FgAbGroup fg_group_from_json(const std::string& text);

/// {"p": p, "faces": ["0", "01", ...]}.
std::string to_json(const SubComplex& k, int indent = -1);
SubComplex subcomplex_from_json(const std::string& text);

/// {"p": p, "target": <group>, "face_values": {"012": [...], ...}}, values in the
/// presentation coordinates of the target.
std::string to_json(const TorsionFunctor& tf, int indent = -1);
TorsionFunctor torsion_functor_from_json(const std::string& text);

/// {"d": d, "torsion": <group ring element>, "twist": i, "orientation": +-1}.
std::string to_json(const HCobordismSymbol& w, int indent = -1);
HCobordismSymbol symbol_from_json(const std::string& text);

std::string to_json(const ReportDocument& r, int indent = 2);
ReportDocument report_from_json(const std::string& text);

}  // namespace hcob
