#include "hcob/falg.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace hcob {

namespace {

Face top_of(int p) { return (Face{1} << (p + 1)) - 1; }

std::size_t form_size(int p) { return std::size_t{1} << (p + 1); }

FaceForm unit_form(int p, Face f)
{
    FaceForm form(form_size(p), 0);
    form[f] = 1;
    return form;
}

std::uint64_t closure_bits(int p, const std::vector<Face>& faces)
{
    return SubComplex::closure(p, faces).bits();
}

SubComplex horn_of(int p, Face sigma, int i)
{
    const int d = face_dim(sigma);
    std::vector<Face> fs;
    for (int j = 0; j <= d; ++j)
        if (j != i)
            fs.push_back(face_boundary(sigma, j));
    return SubComplex::closure(p, fs);
}

SubComplex faces_of_index_set(int p, Face sigma, std::uint32_t index_set)
{
    std::vector<Face> fs;
    for (int j = 0; j <= face_dim(sigma); ++j)
        if (index_set & (1u << j))
            fs.push_back(face_boundary(sigma, j));
    return SubComplex::closure(p, fs);
}

/// Image of a face under a vertex map.
Face map_face(Face f, const std::vector<int>& vertex_map)
{
    Face out = 0;
    for (int v : face_vertices(f))
        out |= Face{1} << vertex_map[static_cast<std::size_t>(v)];
    return out;
}

void require_degree(int p)
{
    if (p < 0 || p + 1 > kMaxAmbient)
        throw std::invalid_argument("simplicial degree out of the supported range [0, " +
                                    std::to_string(kMaxAmbient - 1) + "]");
}

}  // namespace

// ---------------------------------------------------------------- FaceExtension

FaceExtension::FaceExtension(int p) : p_(p)
{
    if (p < 0 || p > kMaxAmbient)
        throw std::invalid_argument("ambient dimension out of range");
}

bool FaceExtension::contractible(const SubComplex& k)
{
    auto it = contractible_.find(k.bits());
    if (it != contractible_.end())
        return it->second;
    const bool c = is_contractible(k);
    contractible_.emplace(k.bits(), c);
    return c;
}

std::vector<FaceExtension::Split> FaceExtension::admissible_splits(const SubComplex& k)
{
    std::vector<Split> out;
    const std::vector<Face> max = k.maximal_faces();
    for (std::size_t s = 0; s < max.size(); ++s) {
        std::vector<Face> rest;
        for (std::size_t t = 0; t < max.size(); ++t)
            if (t != s)
                rest.push_back(max[t]);
        const SubComplex left = SubComplex::closure(p_, rest);
        const std::uint64_t right = closure_bits(p_, {max[s]});
        const std::uint64_t meet = left.bits() & right;
        if (meet == 0 || !contractible(left) || !contractible(SubComplex::from_face_set(p_, meet)))
            continue;
        out.push_back(Split{left.bits(), right, meet});
    }
    if (!out.empty())
        return out;
    // No single maximal face can be detached: try splitting the maximal faces into two groups.
    const std::size_t n = max.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n) - 1; mask += 2) {
        std::vector<Face> a, b;
        for (std::size_t t = 0; t < n; ++t)
            ((mask >> t) & 1 ? a : b).push_back(max[t]);
        const SubComplex left = SubComplex::closure(p_, a);
        const SubComplex right = SubComplex::closure(p_, b);
        const std::uint64_t meet = left.bits() & right.bits();
        if (meet == 0 || !contractible(left) || !contractible(right) ||
            !contractible(SubComplex::from_face_set(p_, meet)))
            continue;
        out.push_back(Split{left.bits(), right.bits(), meet});
    }
    return out;
}

FaceForm FaceExtension::combine(const Split& s)
{
    FaceForm r = form(SubComplex::from_face_set(p_, s.left));
    const FaceForm& b = form(SubComplex::from_face_set(p_, s.right));
    for (std::size_t f = 0; f < r.size(); ++f)
        r[f] += b[f];
    const FaceForm& c = form(SubComplex::from_face_set(p_, s.meet));
    for (std::size_t f = 0; f < r.size(); ++f)
        r[f] -= c[f];
    return r;
}

const FaceForm& FaceExtension::form(const SubComplex& k)
{
    if (k.ambient_dim() != p_)
        throw std::invalid_argument("subcomplex of a different simplex");
    auto it = memo_.find(k.bits());
    if (it != memo_.end())
        return it->second;
    if (!contractible(k))
        throw std::domain_error("torsion is only defined on contractible subcomplexes, got " + k.to_string());
    const std::vector<Face> max = k.maximal_faces();
    FaceForm result;
    if (max.size() == 1) {
        result = unit_form(p_, max.front());
    } else {
        const std::vector<Split> splits = admissible_splits(k);
        if (splits.empty())
            throw std::logic_error("no admissible decomposition of " + k.to_string());
        result = combine(splits.front());
        if (splits.size() > 1 && combine(splits.back()) != result)
            throw std::logic_error("attachment orders disagree on " + k.to_string());
    }
    return memo_.emplace(k.bits(), std::move(result)).first->second;
}

// ---------------------------------------------------------------- TorsionFunctor

TorsionFunctor::TorsionFunctor(int p, std::shared_ptr<const CyclicDecomposition> target,
                               std::vector<ModVector> face_values)
    : p_(p), target_(std::move(target)), values_(std::move(face_values))
{
    if (p < 0 || p > kMaxAmbient)
        throw std::invalid_argument("ambient dimension out of range");
    if (!target_)
        throw std::invalid_argument("missing coefficient group");
    if (values_.size() != form_size(p))
        throw std::invalid_argument("face value table must have one entry per face mask");
    values_[0] = target_->zero();
    for (auto& v : values_)
        v = target_->reduce(std::move(v));
    if (!target_->is_zero(values_[top_of(p)]))
        throw std::invalid_argument("the value on the top face must vanish");
}

TorsionFunctor TorsionFunctor::zero(int p, std::shared_ptr<const CyclicDecomposition> target)
{
    std::vector<ModVector> v(form_size(p), target->zero());
    return TorsionFunctor(p, std::move(target), std::move(v));
}

const ModVector& TorsionFunctor::face_value(Face f) const
{
    if (f == 0 || f > top_of(p_))
        throw std::invalid_argument("face outside the ambient simplex");
    return values_[f];
}

ModVector TorsionFunctor::evaluate(const FaceForm& form) const
{
    if (form.size() != values_.size())
        throw std::invalid_argument("form of a different ambient dimension");
    const CyclicDecomposition& a = *target_;
    ModVector acc(a.rank(), 0);
    for (std::size_t f = 1; f < form.size(); ++f) {
        if (form[f] == 0)
            continue;
        for (std::size_t c = 0; c < acc.size(); ++c)
            acc[c] = checked_add(acc[c], checked_mul(form[f], values_[f][c]));
    }
    return a.reduce(std::move(acc));
}

ModVector TorsionFunctor::value(const SubComplex& k, FaceExtension& ext) const
{
    if (ext.ambient_dim() != p_)
        throw std::invalid_argument("extension of a different ambient dimension");
    return evaluate(ext.form(k));
}

ModVector TorsionFunctor::value(const SubComplex& k) const
{
    FaceExtension ext(p_);
    return value(k, ext);
}

ModVector TorsionFunctor::tau(const SubComplex& l, const SubComplex& k, FaceExtension& ext) const
{
    if (!is_subcomplex_of(k, l))
        throw std::invalid_argument("tau(L, K) needs K inside L");
    return target_->sub(value(k, ext), value(l, ext));
}

TorsionFunctor iota_shriek(int p, std::shared_ptr<const CyclicDecomposition> target,
                           std::vector<ModVector> face_values)
{
    return TorsionFunctor(p, std::move(target), std::move(face_values));
}

std::vector<ModVector> iota_star(const TorsionFunctor& tf) { return tf.face_values(); }

// ---------------------------------------------------------------- PosetFunctor

PosetFunctor::PosetFunctor(int p, std::shared_ptr<const CyclicDecomposition> target,
                           std::map<std::uint64_t, ModVector> values)
    : p_(p), target_(std::move(target)), values_(std::move(values))
{
    if (p < 0 || p > 3)
        throw std::invalid_argument("poset functors are limited to ambient dimension <= 3");
}

PosetFunctor PosetFunctor::from(const TorsionFunctor& tf)
{
    FaceExtension ext(tf.ambient_dim());
    std::map<std::uint64_t, ModVector> values;
    for (const auto& k : enumerate_contractible_subcomplexes(tf.ambient_dim()))
        values.emplace(k.bits(), tf.value(k, ext));
    return PosetFunctor(tf.ambient_dim(), tf.target_ptr(), std::move(values));
}

const ModVector& PosetFunctor::value(const SubComplex& k) const
{
    auto it = values_.find(k.bits());
    if (k.ambient_dim() != p_ || it == values_.end())
        throw std::domain_error("functor undefined on " + k.to_string());
    return it->second;
}

PosetFunctor raw_degeneracy(const PosetFunctor& f, int j)
{
    const int p = f.ambient_dim();
    const std::vector<int> s = codegeneracy_map(p, j);
    std::map<std::uint64_t, ModVector> values;
    for (const auto& k : enumerate_contractible_subcomplexes(p + 1)) {
        const SubComplex img = k.image(p, s);
        if (f.defined(img))
            values.emplace(k.bits(), f.value(img));
    }
    return PosetFunctor(p + 1, f.target_ptr(), std::move(values));
}

std::vector<PushoutSquare> contractible_pushout_squares(int p)
{
    const auto all = enumerate_contractible_subcomplexes(p);
    std::vector<PushoutSquare> out;
    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b) {
            auto meet = complex_intersection(all[a], all[b]);
            if (!meet || !is_contractible(*meet))
                continue;
            const SubComplex join = complex_union(all[a], all[b]);
            if (!is_contractible(join))
                continue;
            out.push_back(PushoutSquare{join, all[a], all[b], *meet});
        }
    return out;
}

bool square_holds(const PosetFunctor& f, const PushoutSquare& sq)
{
    const CyclicDecomposition& a = f.target();
    return a.add(f.value(sq.k), f.value(sq.k01)) == a.add(f.value(sq.k0), f.value(sq.k1));
}

bool check_square(const PosetFunctor& f)
{
    for (const auto& sq : contractible_pushout_squares(f.ambient_dim()))
        if (f.defined(sq.k) && f.defined(sq.k0) && f.defined(sq.k1) && f.defined(sq.k01) && !square_holds(f, sq))
            return false;
    return true;
}

bool check_square(const TorsionFunctor& tf) { return check_square(PosetFunctor::from(tf)); }

// ---------------------------------------------------------------- dualities

namespace {

/// lhs = sign * T(rhs) in the target.
bool dual_pair(const CyclicDecomposition& a, const ModVector& lhs, int sign, const ModVector& rhs)
{
    return a.reduce(lhs) == a.scale(sign, a.act(rhs));
}

int parity_sign(int d) { return d % 2 == 0 ? 1 : -1; }

}  // namespace

bool face_horn_duality_at(const TorsionFunctor& tf, Face sigma, int i, FaceExtension& ext)
{
    const int p = tf.ambient_dim();
    const int d = face_dim(sigma);
    if (d < 1)
        return true;
    if (i < 0 || i > d)
        throw std::invalid_argument("face-horn index out of range");
    const CyclicDecomposition& a = tf.target();
    const ModVector lhs = a.sub(tf.face_value(face_boundary(sigma, i)), tf.face_value(sigma));
    const ModVector rhs = a.sub(tf.value(horn_of(p, sigma, i), ext), tf.face_value(sigma));
    return dual_pair(a, lhs, parity_sign(d), rhs);
}

bool check_face_horn_duality(const TorsionFunctor& tf, Face sigma, FaceExtension& ext)
{
    for (int i = 0; i <= face_dim(sigma) && face_dim(sigma) >= 1; ++i)
        if (!face_horn_duality_at(tf, sigma, i, ext))
            return false;
    return true;
}

bool check_face_horn_duality(const TorsionFunctor& tf, Face sigma)
{
    FaceExtension ext(tf.ambient_dim());
    return check_face_horn_duality(tf, sigma, ext);
}

bool satisfies_all_dualities(const TorsionFunctor& tf, FaceExtension& ext)
{
    for (Face f = 1; f <= top_of(tf.ambient_dim()); ++f)
        if (!check_face_horn_duality(tf, f, ext))
            return false;
    return true;
}

bool generalized_face_duality(const TorsionFunctor& tf, Face sigma, std::uint32_t index_set, FaceExtension& ext)
{
    const int d = face_dim(sigma);
    const std::uint32_t all = (1u << (d + 1)) - 1;
    if (d < 1 || index_set == 0 || (index_set & ~all) || index_set == all)
        throw std::invalid_argument("index set must be a proper nonempty subset of the face indices");
    const int p = tf.ambient_dim();
    const CyclicDecomposition& a = tf.target();
    const ModVector lhs = a.sub(tf.value(faces_of_index_set(p, sigma, index_set), ext), tf.face_value(sigma));
    const ModVector rhs = a.sub(tf.value(faces_of_index_set(p, sigma, all & ~index_set), ext), tf.face_value(sigma));
    return dual_pair(a, lhs, parity_sign(d), rhs);
}

std::optional<SubComplex> pure_boundary(const SubComplex& k)
{
    const std::vector<Face> max = k.maximal_faces();
    const int dim = face_dim(max.front());
    if (dim < 1)
        return std::nullopt;
    for (Face f : max)
        if (face_dim(f) != dim)
            return std::nullopt;
    std::vector<Face> bd;
    for (Face f : k.faces()) {
        if (face_dim(f) != dim - 1)
            continue;
        int n = 0;
        for (Face m : max)
            if ((m & f) == f)
                ++n;
        if (n == 1)
            bd.push_back(f);
    }
    if (bd.empty())
        return std::nullopt;
    return SubComplex::closure(k.ambient_dim(), bd);
}

std::optional<bool> generalized_complex_duality(const TorsionFunctor& tf, const SubComplex& k,
                                                const SubComplex& q, FaceExtension& ext)
{
    if (!ext.contractible(k) || !ext.contractible(q))
        return std::nullopt;
    const auto bd = pure_boundary(k);
    if (!bd || !is_subcomplex_of(q, *bd))
        return std::nullopt;
    const int dim = k.dim();
    const std::vector<Face> qmax = q.maximal_faces();
    for (Face f : qmax)
        if (face_dim(f) != dim - 1)
            return std::nullopt;
    std::vector<Face> rest;
    for (Face f : bd->maximal_faces()) {
        bool in_q = false;
        for (Face g : qmax)
            in_q = in_q || g == f;
        if (!in_q)
            rest.push_back(f);
    }
    if (rest.empty())
        return std::nullopt;
    const SubComplex r = SubComplex::closure(k.ambient_dim(), rest);
    if (!ext.contractible(r))
        return std::nullopt;
    const CyclicDecomposition& a = tf.target();
    const ModVector tk = tf.value(k, ext);
    const ModVector lhs = a.sub(tf.value(q, ext), tk);
    const ModVector rhs = a.sub(tf.value(r, ext), tk);
    return dual_pair(a, lhs, parity_sign(dim), rhs);
}

bool duality_criterion_hypothesis(const TorsionFunctor& tf, FaceExtension& ext)
{
    const Face top = top_of(tf.ambient_dim());
    for (Face f = 1; f < top; ++f)
        if (!check_face_horn_duality(tf, f, ext))
            return false;
    return tf.ambient_dim() < 1 || face_horn_duality_at(tf, top, 0, ext);
}

bool duality_criterion(const TorsionFunctor& tf, FaceExtension& ext)
{
    if (!duality_criterion_hypothesis(tf, ext))
        return true;
    return check_face_horn_duality(tf, top_of(tf.ambient_dim()), ext);
}

bool duality_criterion(const TorsionFunctor& tf)
{
    FaceExtension ext(tf.ambient_dim());
    return duality_criterion(tf, ext);
}

// ---------------------------------------------------------------- FAlgModel

FAlgModel::FAlgModel(const InvolutiveAbelianGroup& a) : target_(std::make_shared<const CyclicDecomposition>(a)) {}

std::vector<std::int64_t> FAlgModel::scalar_moduli(int p) const
{
    require_degree(p);
    const Face top = top_of(p + 1);
    std::vector<std::int64_t> m;
    for (Face f = 1; f < top; ++f)
        for (auto x : target_->moduli())
            m.push_back(x);
    return m;
}

ModVector FAlgModel::to_scalars(const TorsionFunctor& tf) const
{
    const int q = tf.ambient_dim();
    require_degree(q - 1);
    const std::size_t r = target_->rank();
    ModVector x;
    x.reserve((top_of(q) - 1) * r);
    for (Face f = 1; f < top_of(q); ++f)
        for (std::size_t c = 0; c < r; ++c)
            x.push_back(tf.face_value(f)[c]);
    return x;
}

TorsionFunctor FAlgModel::from_scalars(int p, const ModVector& x) const
{
    require_degree(p);
    const int q = p + 1;
    const std::size_t r = target_->rank();
    const Face top = top_of(q);
    if (x.size() != (top - 1) * r)
        throw std::invalid_argument("scalar vector has the wrong length");
    std::vector<ModVector> values(form_size(q), target_->zero());
    for (Face f = 1; f < top; ++f)
        for (std::size_t c = 0; c < r; ++c)
            values[f][c] = x[(f - 1) * r + c];
    return TorsionFunctor(q, target_, std::move(values));
}

std::vector<FAlgModel::Equation> FAlgModel::defining_equations(int p) const
{
    const int q = p + 1;
    const Face top = top_of(q);
    const std::size_t n = form_size(q);
    std::vector<Equation> eqs;
    // Vanishing on the face opposite vertex 0.
    const Face d0 = top & ~Face{1};
    for (Face s = (d0 - 1) & d0; s; s = (s - 1) & d0) {
        Equation e{FaceForm(n, 0), FaceForm(n, 0)};
        e.plain[s] += 1;
        e.plain[d0] -= 1;
        eqs.push_back(std::move(e));
    }
    // Face-horn dualities.
    FaceExtension ext(q);
    for (Face sigma = 1; sigma <= top; ++sigma) {
        const int d = face_dim(sigma);
        if (d < 1)
            continue;
        const int sign = d % 2 == 0 ? 1 : -1;
        for (int i = 0; i <= d; ++i) {
            Equation e{FaceForm(n, 0), FaceForm(n, 0)};
            e.plain[face_boundary(sigma, i)] += 1;
            e.plain[sigma] -= 1;
            const FaceForm& h = ext.form(horn_of(q, sigma, i));
            for (std::size_t f = 1; f < n; ++f)
                e.twisted[f] -= sign * h[f];
            e.twisted[sigma] += sign;
            eqs.push_back(std::move(e));
        }
    }
    for (auto& e : eqs) {
        e.plain[top] = 0;
        e.twisted[top] = 0;
    }
    return eqs;
}

std::vector<FAlgModel::Equation> FAlgModel::face_kernel_equations(int p, int i) const
{
    // Face values of the i-th face: v'(rho) = v(d^{i+1} rho) - v(d^{i+1} top).
    const int q = p + 1;
    const std::vector<int> d = coface_map(q, i + 1);
    const Face sub_top = top_of(q - 1);
    const Face image_top = map_face(sub_top, d);
    std::vector<Equation> eqs;
    for (Face rho = 1; rho < sub_top; ++rho) {
        Equation e{FaceForm(form_size(q), 0), FaceForm(form_size(q), 0)};
        e.plain[map_face(rho, d)] += 1;
        e.plain[image_top] -= 1;
        eqs.push_back(std::move(e));
    }
    return eqs;
}

void FAlgModel::impose(SubgroupLattice& s, int p, const std::vector<Equation>& eqs) const
{
    const int q = p + 1;
    const Face top = top_of(q);
    const std::size_t r = target_->rank();
    const auto& t = target_->action();
    const auto& m = target_->moduli();
    for (const auto& e : eqs)
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<std::int64_t> coeffs((top - 1) * r, 0);
            for (Face f = 1; f < top; ++f) {
                const std::size_t base = (f - 1) * r;
                if (e.plain[f] != 0)
                    coeffs[base + i] += e.plain[f];
                if (e.twisted[f] != 0)
                    for (std::size_t j = 0; j < r; ++j)
                        coeffs[base + j] += e.twisted[f] * t[i][j];
            }
            s.impose(coeffs, m[i]);
        }
}

SubgroupLattice FAlgModel::group(int p) const
{
    require_degree(p);
    SubgroupLattice s(scalar_moduli(p));
    impose(s, p, defining_equations(p));
    return s;
}

SubgroupLattice FAlgModel::normalized(int n) const
{
    SubgroupLattice s = group(n);
    for (int i = 1; i <= n; ++i)
        impose(s, n, face_kernel_equations(n, i));
    return s;
}

ModVector FAlgModel::apply_face(int p, int i, const ModVector& x) const
{
    return to_scalars(face(from_scalars(p, x), i));
}

FgAbGroup FAlgModel::moore_homotopy(int n) const
{
    if (n < 0 || n + 1 > kMaxDegree)
        throw std::invalid_argument("homotopy degree out of the supported range [0, " +
                                    std::to_string(kMaxDegree - 1) + "]");
    SubgroupLattice cycles = normalized(n);
    if (n >= 1)
        impose(cycles, n, face_kernel_equations(n, 0));
    std::vector<ModVector> boundaries;
    const SubgroupLattice chains = normalized(n + 1);
    for (const auto& g : chains.generators())
        boundaries.push_back(apply_face(n + 1, 0, g));
    return cycles.basis().quotient(boundaries);
}

bool FAlgModel::is_element(const TorsionFunctor& tf) const
{
    const int q = tf.ambient_dim();
    if (q < 1)
        return false;
    const Face top = top_of(q);
    const Face d0 = top & ~Face{1};
    for (Face s = (d0 - 1) & d0; s; s = (s - 1) & d0)
        if (tf.face_value(s) != tf.face_value(d0))
            return false;
    FaceExtension ext(q);
    return satisfies_all_dualities(tf, ext);
}

std::vector<TorsionFunctor> FAlgModel::enumerate(int p) const
{
    std::vector<TorsionFunctor> out;
    for (const auto& x : group(p).basis().elements())
        out.push_back(from_scalars(p, x));
    return out;
}

TorsionFunctor FAlgModel::face(const TorsionFunctor& x, int i) const
{
    const int q = x.ambient_dim();
    const int p = q - 1;
    require_degree(p);
    if (p < 1 || i < 0 || i > p)
        throw std::invalid_argument("face index out of range");
    const std::vector<int> d = coface_map(q, i + 1);
    const Face sub_top = top_of(q - 1);
    const ModVector base = x.face_value(map_face(sub_top, d));
    std::vector<ModVector> values(form_size(q - 1), target_->zero());
    for (Face rho = 1; rho <= sub_top; ++rho)
        values[rho] = target_->sub(x.face_value(map_face(rho, d)), base);
    return TorsionFunctor(q - 1, target_, std::move(values));
}

TorsionFunctor FAlgModel::degeneracy(const TorsionFunctor& x, int i) const
{
    const int q = x.ambient_dim();
    const int p = q - 1;
    require_degree(p + 1);
    if (i < 0 || i > p)
        throw std::invalid_argument("degeneracy index out of range");
    const std::vector<int> s = codegeneracy_map(q, i + 1);
    const Face new_top = top_of(q + 1);
    std::vector<ModVector> values(form_size(q + 1), target_->zero());
    for (Face rho = 1; rho <= new_top; ++rho)
        values[rho] = x.face_value(map_face(rho, s));
    return TorsionFunctor(q + 1, target_, std::move(values));
}

ModVector FAlgModel::psi(const TorsionFunctor& x) const { return x.face_value(Face{1}); }

}  // namespace hcob
