#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hcob {

/// Vertex set of a face of the standard simplex, bit k = vertex k.
using Face = std::uint32_t;

/// Largest ambient simplex dimension representable by SubComplex.
inline constexpr int kMaxAmbient = 5;

int face_dim(Face f);
/// Vertices of f in increasing order.
std::vector<int> face_vertices(Face f);
/// f with its i-th smallest vertex removed.
Face face_boundary(Face f, int i);
/// Face spanned by the given vertices.
Face make_face(const std::vector<int>& vertices);
/// Vertex digits, e.g. "013".
std::string face_label(Face f);
Face parse_face_label(const std::string& label);

/// Nonempty downward-closed set of faces of the standard p-simplex.
class SubComplex {
public:
    /// Downward closure of the given faces. Throws std::invalid_argument if empty or out of range.
    static SubComplex closure(int p, const std::vector<Face>& faces);
    /// Exactly the given face set; throws unless it is nonempty and downward closed.
    static SubComplex from_face_set(int p, std::uint64_t bits);

    int ambient_dim() const { return p_; }
    /// Bit f is set iff face f belongs to the complex.
    std::uint64_t bits() const { return bits_; }
    bool contains(Face f) const;

    /// Faces in increasing numeric order of their masks.
    std::vector<Face> faces() const;
    std::vector<Face> maximal_faces() const;
    std::size_t face_count() const;
    Face vertex_span() const;
    int dim() const;
    int euler_characteristic() const;
    bool is_connected() const;

    /// Image under a vertex map {0..p} -> {0..q}.
    SubComplex image(int q, const std::vector<int>& vertex_map) const;

    /// {"01","02","0",...} rendering in canonical order.
    std::string to_string() const;

    friend bool operator==(const SubComplex& a, const SubComplex& b) = default;

private:
    SubComplex(int p, std::uint64_t bits) : p_(p), bits_(bits) {}
    int p_ = 0;
    std::uint64_t bits_ = 0;
};

SubComplex full_simplex(int p);
/// i-th codimension one face of the p-simplex with all its faces.
SubComplex boundary_face(int p, int i);
/// Union of all boundary faces except the i-th.
SubComplex horn(int p, int i);
/// Union of all boundary faces.
SubComplex simplex_boundary(int p);
SubComplex face_complex(int p, const std::vector<int>& vertices);

SubComplex complex_union(const SubComplex& k, const SubComplex& l);
/// nullopt when the intersection is empty.
std::optional<SubComplex> complex_intersection(const SubComplex& k, const SubComplex& l);
bool is_subcomplex_of(const SubComplex& k, const SubComplex& l);

/// Decides collapsibility to a vertex, which agrees with contractibility
/// on at most seven vertices.
bool is_contractible(const SubComplex& k);

/// Canonical order: lexicographic on the sorted face mask lists.
bool canonical_less(const SubComplex& a, const SubComplex& b);

/// Every nonempty downward-closed face set of the p-simplex, canonically ordered. p <= 3.
std::vector<SubComplex> enumerate_subcomplexes(int p);
/// The contractible ones among enumerate_subcomplexes(p). p <= 3.
std::vector<SubComplex> enumerate_contractible_subcomplexes(int p);

/// Vertex map of the coface d^j : [p-1] -> [p], skipping j.
std::vector<int> coface_map(int p, int j);
/// Vertex map of the codegeneracy s^j : [p+1] -> [p], repeating j.
std::vector<int> codegeneracy_map(int p, int j);

}  // namespace hcob
