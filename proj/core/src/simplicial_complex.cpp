#include "hcob/simplicial_complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace hcob {

namespace {

void require_ambient(int p)
{
    if (p < 0 || p > kMaxAmbient)
        throw std::invalid_argument("ambient dimension must lie in [0, " + std::to_string(kMaxAmbient) + "]");
}

Face top_face(int p) { return (Face{1} << (p + 1)) - 1; }

std::uint64_t bit(Face f) { return std::uint64_t{1} << f; }

bool is_closed(int p, std::uint64_t bits)
{
    const Face top = top_face(p);
    for (Face f = 1; f <= top; ++f) {
        if (!(bits & bit(f)))
            continue;
        for (Face s = (f - 1) & f; s; s = (s - 1) & f)
            if (!(bits & bit(s)))
                return false;
    }
    return true;
}

/// Faces of the complex strictly containing f.
int coface_count(std::uint64_t bits, Face f, Face top, Face& only)
{
    int n = 0;
    const Face rest = top & ~f;
    for (Face s = rest; s; s = (s - 1) & rest)
        if (bits & bit(f | s)) {
            ++n;
            only = f | s;
        }
    return n;
}

class Collapser {
public:
    explicit Collapser(Face top) : top_(top) {}

    bool collapsible(std::uint64_t bits)
    {
        if (std::popcount(bits) == 1)
            return std::popcount(static_cast<std::uint64_t>(std::countr_zero(bits))) == 1;
        if (failed_.count(bits))
            return false;
        for (Face f = 1; f <= top_; ++f) {
            if (!(bits & bit(f)))
                continue;
            Face sigma = 0;
            if (coface_count(bits, f, top_, sigma) != 1)
                continue;
            if (collapsible(bits & ~bit(f) & ~bit(sigma)))
                return true;
        }
        failed_.insert(bits);
        return false;
    }

private:
    Face top_;
    std::unordered_set<std::uint64_t> failed_;
};

bool is_cone(const SubComplex& k)
{
    const std::uint64_t bits = k.bits();
    const Face span = k.vertex_span();
    for (int v = 0; v <= k.ambient_dim(); ++v) {
        if (!(span & (Face{1} << v)))
            continue;
        bool cone = true;
        for (Face f : k.faces())
            if (!(bits & bit(f | (Face{1} << v)))) {
                cone = false;
                break;
            }
        if (cone)
            return true;
    }
    return false;
}

}  // namespace

int face_dim(Face f) { return std::popcount(f) - 1; }

std::vector<int> face_vertices(Face f)
{
    std::vector<int> v;
    for (int k = 0; f >> k; ++k)
        if (f & (Face{1} << k))
            v.push_back(k);
    return v;
}

Face face_boundary(Face f, int i)
{
    const auto v = face_vertices(f);
    if (i < 0 || i >= static_cast<int>(v.size()))
        throw std::invalid_argument("face boundary index out of range");
    return f & ~(Face{1} << v[static_cast<std::size_t>(i)]);
}

Face make_face(const std::vector<int>& vertices)
{
    Face f = 0;
    for (int v : vertices) {
        if (v < 0 || v > kMaxAmbient)
            throw std::invalid_argument("vertex out of range");
        f |= Face{1} << v;
    }
    if (f == 0)
        throw std::invalid_argument("a face needs at least one vertex");
    return f;
}

std::string face_label(Face f)
{
    std::string s;
    for (int v : face_vertices(f))
        s += static_cast<char>('0' + v);
    return s;
}

Face parse_face_label(const std::string& label)
{
    std::vector<int> v;
    for (char c : label) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("malformed face label: " + label);
        v.push_back(c - '0');
    }
    return make_face(v);
}

SubComplex SubComplex::closure(int p, const std::vector<Face>& faces)
{
    require_ambient(p);
    const Face top = top_face(p);
    std::uint64_t bits = 0;
    for (Face f : faces) {
        if (f == 0 || (f & ~top))
            throw std::invalid_argument("face outside the ambient simplex");
        bits |= bit(f);
        for (Face s = (f - 1) & f; s; s = (s - 1) & f)
            bits |= bit(s);
    }
    if (bits == 0)
        throw std::invalid_argument("subcomplex must be nonempty");
    return SubComplex(p, bits);
}

SubComplex SubComplex::from_face_set(int p, std::uint64_t bits)
{
    require_ambient(p);
    if (bits & 1)
        throw std::invalid_argument("the empty face is not stored");
    const Face top = top_face(p);
    if (top < 63 && (bits >> (top + 1)) != 0)
        throw std::invalid_argument("face outside the ambient simplex");
    if (bits == 0)
        throw std::invalid_argument("subcomplex must be nonempty");
    if (!is_closed(p, bits))
        throw std::invalid_argument("face set is not downward closed");
    return SubComplex(p, bits);
}

bool SubComplex::contains(Face f) const { return f != 0 && f <= top_face(p_) && (bits_ & bit(f)); }

std::vector<Face> SubComplex::faces() const
{
    std::vector<Face> out;
    for (std::uint64_t b = bits_; b; b &= b - 1)
        out.push_back(static_cast<Face>(std::countr_zero(b)));
    return out;
}

std::vector<Face> SubComplex::maximal_faces() const
{
    std::vector<Face> out;
    const Face top = top_face(p_);
    for (Face f : faces()) {
        Face only = 0;
        if (coface_count(bits_, f, top, only) == 0)
            out.push_back(f);
    }
    return out;
}

std::size_t SubComplex::face_count() const { return static_cast<std::size_t>(std::popcount(bits_)); }

Face SubComplex::vertex_span() const
{
    Face s = 0;
    for (Face f : faces())
        s |= f;
    return s;
}

int SubComplex::dim() const
{
    int d = 0;
    for (Face f : faces())
        d = std::max(d, face_dim(f));
    return d;
}

int SubComplex::euler_characteristic() const
{
    int chi = 0;
    for (Face f : faces())
        chi += face_dim(f) % 2 == 0 ? 1 : -1;
    return chi;
}

bool SubComplex::is_connected() const
{
    const Face span = vertex_span();
    Face reached = span & (~span + 1);
    for (bool grew = true; grew;) {
        grew = false;
        for (Face f : faces())
            if ((f & reached) && (f & ~reached)) {
                reached |= f;
                grew = true;
            }
    }
    return reached == span;
}

SubComplex SubComplex::image(int q, const std::vector<int>& vertex_map) const
{
    if (vertex_map.size() != static_cast<std::size_t>(p_ + 1))
        throw std::invalid_argument("vertex map has the wrong domain");
    std::vector<Face> out;
    for (Face f : faces()) {
        std::vector<int> v;
        for (int x : face_vertices(f))
            v.push_back(vertex_map[static_cast<std::size_t>(x)]);
        out.push_back(make_face(v));
    }
    for (int x : vertex_map)
        if (x < 0 || x > q)
            throw std::invalid_argument("vertex map leaves the target simplex");
    return closure(q, out);
}

std::string SubComplex::to_string() const
{
    std::string s = "{";
    bool first = true;
    for (Face f : faces()) {
        if (!first)
            s += ",";
        first = false;
        s += face_label(f);
    }
    return s + "}";
}

SubComplex full_simplex(int p)
{
    require_ambient(p);
    return SubComplex::closure(p, {top_face(p)});
}

SubComplex boundary_face(int p, int i)
{
    require_ambient(p);
    if (p < 1 || i < 0 || i > p)
        throw std::invalid_argument("boundary face index out of range");
    return SubComplex::closure(p, {face_boundary(top_face(p), i)});
}

SubComplex horn(int p, int i)
{
    require_ambient(p);
    if (p < 1 || i < 0 || i > p)
        throw std::invalid_argument("horn index out of range");
    std::vector<Face> fs;
    for (int j = 0; j <= p; ++j)
        if (j != i)
            fs.push_back(face_boundary(top_face(p), j));
    return SubComplex::closure(p, fs);
}

SubComplex simplex_boundary(int p)
{
    require_ambient(p);
    if (p < 1)
        throw std::invalid_argument("the boundary of a point is empty");
    std::vector<Face> fs;
    for (int j = 0; j <= p; ++j)
        fs.push_back(face_boundary(top_face(p), j));
    return SubComplex::closure(p, fs);
}

SubComplex face_complex(int p, const std::vector<int>& vertices)
{
    return SubComplex::closure(p, {make_face(vertices)});
}

SubComplex complex_union(const SubComplex& k, const SubComplex& l)
{
    if (k.ambient_dim() != l.ambient_dim())
        throw std::invalid_argument("subcomplexes of different simplices");
    return SubComplex::from_face_set(k.ambient_dim(), k.bits() | l.bits());
}

std::optional<SubComplex> complex_intersection(const SubComplex& k, const SubComplex& l)
{
    if (k.ambient_dim() != l.ambient_dim())
        throw std::invalid_argument("subcomplexes of different simplices");
    const std::uint64_t b = k.bits() & l.bits();
    if (b == 0)
        return std::nullopt;
    return SubComplex::from_face_set(k.ambient_dim(), b);
}

bool is_subcomplex_of(const SubComplex& k, const SubComplex& l)
{
    if (k.ambient_dim() != l.ambient_dim())
        throw std::invalid_argument("subcomplexes of different simplices");
    return (k.bits() & ~l.bits()) == 0;
}

bool is_contractible(const SubComplex& k)
{
    if (k.euler_characteristic() != 1 || !k.is_connected())
        return false;
    if (is_cone(k))
        return true;
    Collapser c(top_face(k.ambient_dim()));
    return c.collapsible(k.bits());
}

bool canonical_less(const SubComplex& a, const SubComplex& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        return a.ambient_dim() < b.ambient_dim();
    return a.faces() < b.faces();
}

std::vector<SubComplex> enumerate_subcomplexes(int p)
{
    if (p < 0 || p > 3)
        throw std::invalid_argument("exhaustive enumeration is limited to p <= 3");
    const Face top = top_face(p);
    const std::uint32_t nfaces = top;
    std::vector<SubComplex> out;
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << nfaces); ++subset) {
        // Face f corresponds to bit (f - 1) of subset.
        const std::uint64_t bits = subset << 1;
        if (is_closed(p, bits))
            out.push_back(SubComplex::from_face_set(p, bits));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<SubComplex> enumerate_contractible_subcomplexes(int p)
{
    std::vector<SubComplex> out;
    for (auto& k : enumerate_subcomplexes(p))
        if (is_contractible(k))
            out.push_back(k);
    return out;
}

std::vector<int> coface_map(int p, int j)
{
    if (p < 1 || j < 0 || j > p)
        throw std::invalid_argument("coface index out of range");
    std::vector<int> m;
    for (int k = 0; k < p; ++k)
        m.push_back(k < j ? k : k + 1);
    return m;
}

std::vector<int> codegeneracy_map(int p, int j)
{
    if (p < 0 || j < 0 || j > p)
        throw std::invalid_argument("codegeneracy index out of range");
    std::vector<int> m;
    for (int k = 0; k <= p + 1; ++k)
        m.push_back(k <= j ? k : k - 1);
    return m;
}

}  // namespace hcob
