#include "hcob/json_io.hpp"

#include <limits>
#include <stdexcept>

#include "json_io_detail.hpp"

namespace hcob {

using detail::Json;

namespace {

std::string dump(const Json& j, int indent) { return j.dump(indent); }

template <typename F>
auto parse_with(const std::string& text, F&& f)
{
    try {
        return f(Json::parse(text));
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

Json big_number(const BigInt& x)
{
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return Json(x.convert_to<std::int64_t>());
    return Json(to_string(x));
}

BigInt read_big(const Json& j)
{
    if (j.is_number_integer())
        return BigInt(j.get<std::int64_t>());
    if (j.is_string())
        return parse_bigint(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

Json group_ring_json(const GroupRingElement& x)
{
    Json coeffs = Json::array();
    for (const auto& c : x.coeffs())
        coeffs.push_back(to_string(c));
    return Json{{"order", x.order()}, {"coeffs", coeffs}};
}

GroupRingElement group_ring_parse(const Json& j)
{
    const auto n = j.at("order").get<std::size_t>();
    std::vector<BigInt> c;
    for (const auto& e : j.at("coeffs"))
        c.push_back(read_big(e));
    if (n == 0 || c.size() != n)
        throw std::invalid_argument("coefficient count must equal the group order");
    return GroupRingElement(n, std::move(c));
}

Json matrix_rows(const IntMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(big_number(m.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

std::vector<IntVector> read_vectors(const Json& j, std::size_t length)
{
    std::vector<IntVector> out;
    for (const auto& row : j) {
        IntVector v;
        for (const auto& e : row)
            v.push_back(read_big(e));
        if (v.size() != length)
            throw std::invalid_argument("vector of the wrong length");
        out.push_back(std::move(v));
    }
    return out;
}

Json group_json(const InvolutiveAbelianGroup& a)
{
    return Json{{"generators", a.generator_count()},
                {"relations", matrix_rows(a.relations().transpose())},
                {"involution", matrix_rows(a.involution())}};
}

InvolutiveAbelianGroup group_parse(const Json& j)
{
    const auto g = j.at("generators").get<std::size_t>();
    const auto rels = read_vectors(j.at("relations"), g);
    const auto inv = read_vectors(j.at("involution"), g);
    if (inv.size() != g)
        throw std::invalid_argument("involution must be square");
    IntMatrix t(g, g);
    for (std::size_t r = 0; r < g; ++r)
        for (std::size_t c = 0; c < g; ++c)
            t.at(r, c) = inv[r][c];
    return InvolutiveAbelianGroup(g, IntMatrix::from_columns(rels, g), t);
}

Json witness_json(const Witness& w)
{
    Json o = Json::object();
    for (const auto& [k, v] : w)
        o[k] = v;
    return o;
}

Witness witness_parse(const Json& j)
{
    Witness w;
    for (const auto& [k, v] : j.items())
        w.emplace_back(k, v.get<std::string>());
    return w;
}

}  // namespace

std::string to_json(const GroupRingElement& x, int indent) { return dump(group_ring_json(x), indent); }

GroupRingElement group_ring_from_json(const std::string& text)
{
    return parse_with(text, [](const Json& j) { return group_ring_parse(j); });
}

std::string to_json(const InvolutiveAbelianGroup& a, int indent) { return dump(group_json(a), indent); }

InvolutiveAbelianGroup involutive_group_from_json(const std::string& text)
{
    return parse_with(text, [](const Json& j) { return group_parse(j); });
}

std::string to_json(const FgAbGroup& g, int indent)
{
    Json f = Json::array();
    for (const auto& d : g.invariant_factors())
        f.push_back(big_number(d));
    return dump(Json{{"invariant_factors", f}}, indent);
}

FgAbGroup fg_group_from_json(const std::string& text)
{
    return parse_with(text, [](const Json& j) {
        std::vector<BigInt> f;
        for (const auto& e : j.at("invariant_factors"))
            f.push_back(read_big(e));
        return FgAbGroup(f);
    });
}

std::string to_json(const SubComplex& k, int indent)
{
    Json faces = Json::array();
    for (Face f : k.faces())
        faces.push_back(face_label(f));
    return dump(Json{{"p", k.ambient_dim()}, {"faces", faces}}, indent);
}

SubComplex subcomplex_from_json(const std::string& text)
{
    return parse_with(text, [](const Json& j) {
        const int p = j.at("p").get<int>();
        std::uint64_t bits = 0;
        for (const auto& f : j.at("faces")) {
            const Face face = parse_face_label(f.get<std::string>());
            if (face >= (Face{1} << (p + 1)))
                throw std::invalid_argument("face outside the ambient simplex");
            bits |= std::uint64_t{1} << face;
        }
        return SubComplex::from_face_set(p, bits);
    });
}

std::string to_json(const TorsionFunctor& tf, int indent)
{
    Json values = Json::object();
    const auto& target = tf.target();
    for (Face f = 1; f < tf.face_values().size(); ++f) {
        Json v = Json::array();
        for (const auto& c : target.to_presentation(tf.face_value(f)))
            v.push_back(big_number(c));
        values[face_label(f)] = v;
    }
    return dump(Json{{"p", tf.ambient_dim()}, {"target", group_json(target.source())}, {"face_values", values}},
                indent);
}

TorsionFunctor torsion_functor_from_json(const std::string& text)
{
    return parse_with(text, [](const Json& j) {
        const int p = j.at("p").get<int>();
        if (p < 0 || p > kMaxAmbient)
            throw std::invalid_argument("ambient dimension out of range");
        auto target = std::make_shared<const CyclicDecomposition>(group_parse(j.at("target")));
        std::vector<ModVector> values(std::size_t{1} << (p + 1), target->zero());
        for (const auto& [label, v] : j.at("face_values").items()) {
            const Face f = parse_face_label(label);
            if (f >= values.size())
                throw std::invalid_argument("face outside the ambient simplex");
            IntVector x;
            for (const auto& e : v)
                x.push_back(read_big(e));
            if (x.size() != target->source().generator_count())
                throw std::invalid_argument("face value of the wrong length");
            values[f] = target->from_presentation(x);
        }
        return TorsionFunctor(p, target, std::move(values));
    });
}

std::string to_json(const HCobordismSymbol& w, int indent)
{
    return dump(Json{{"d", w.dim()},
                     {"torsion", group_ring_json(w.torsion().representative())},
                     {"twist", w.twist()},
                     {"orientation", w.orientation().sign_of_generator}},
                indent);
}

HCobordismSymbol symbol_from_json(const std::string& text)
{
    return parse_with(text, [](const Json& j) {
        auto u = WhiteheadClass::from_unit(group_ring_parse(j.at("torsion")));
        if (!u)
            throw std::invalid_argument("torsion is not a unit");
        return HCobordismSymbol(j.at("d").get<long long>(), *u, j.at("twist").get<long long>(),
                                OrientationCharacter{j.value("orientation", 1)});
    });
}

std::string to_json(const ReportDocument& r, int indent)
{
    r.validate();
    Json stages = Json::array();
    for (const auto& s : r.stages) {
        Json o{{"name", s.name}, {"reference", s.reference}, {"status", to_string(s.status)},
               {"witness", witness_json(s.witness)}};
        if (!s.citation.empty())
            o["citation"] = s.citation;
        stages.push_back(std::move(o));
    }
    Json assumptions = Json::array();
    for (const auto& a : r.assumptions)
        assumptions.push_back(Json{{"id", a.id}, {"statement", a.statement}, {"citation", a.citation}});
    Json doc{{"tool", r.tool},
             {"version", r.version},
             {"command", r.command},
             {"parameters", witness_json(r.parameters)},
             {"ok", r.ok()},
             {"stages", stages},
             {"assumptions", assumptions},
             {"conclusion", r.conclusion ? Json(*r.conclusion) : Json(nullptr)}};
    return dump(doc, indent);
}

ReportDocument report_from_json(const std::string& text)
{
    return parse_with(text, [](const Json& j) {
        ReportDocument r(j.at("command").get<std::string>(), witness_parse(j.at("parameters")));
        r.tool = j.at("tool").get<std::string>();
        r.version = j.at("version").get<std::string>();
        for (const auto& s : j.at("stages"))
            r.add_stage(Stage{s.at("name").get<std::string>(), s.at("reference").get<std::string>(),
                              parse_stage_status(s.at("status").get<std::string>()), witness_parse(s.at("witness")),
                              s.value("citation", std::string())});
        for (const auto& a : j.at("assumptions"))
            r.assumptions.push_back(Assumption{a.at("id").get<std::string>(), a.at("statement").get<std::string>(),
                                               a.at("citation").get<std::string>()});
        if (!j.at("conclusion").is_null())
            r.conclusion = j.at("conclusion").get<std::string>();
        r.validate();
        return r;
    });
}

}  // namespace hcob
