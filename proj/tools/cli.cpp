#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "hcob/falg.hpp"
#include "hcob/json_io.hpp"
#include "hcob/k_appendix.hpp"
#include "hcob/lens_space.hpp"
#include "hcob/simplicial_complex.hpp"
#include "hcob/torsion_calculus.hpp"

namespace hcob::cli {

namespace {

/// A request beyond an enforced size limit.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kHardMaxSubcomplexP = 3;
constexpr int kHardMaxHomotopyN = FAlgModel::kMaxDegree - 1;

std::vector<long long> parse_int_list(const std::string& s)
{
    std::vector<long long> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer list: " + s);
        }
        if (pos != item.size())
            throw std::invalid_argument("not an integer list: " + s);
        out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument("empty integer list");
    return out;
}

GroupRingElement parse_element(long long order, const std::string& coeffs)
{
    if (order < 1)
        throw std::invalid_argument("group order must be positive");
    // Missing trailing coefficients are zero.
    auto c = parse_int_list(coeffs);
    if (c.size() > static_cast<std::size_t>(order))
        throw std::invalid_argument("expected at most " + std::to_string(order) + " coefficients");
    c.resize(static_cast<std::size_t>(order), 0);
    return GroupRingElement::from_ints(static_cast<std::size_t>(order), c);
}

std::string read_source(const std::string& arg)
{
    if (arg.empty() || arg[0] != '@')
        return arg;
    std::ifstream f(arg.substr(1));
    if (!f)
        throw std::invalid_argument("cannot read " + arg.substr(1));
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

struct TargetOptions {
    std::string target = "z2-trivial";
    std::string group_json;

    InvolutiveAbelianGroup resolve() const
    {
        if (!group_json.empty())
            return involutive_group_from_json(read_source(group_json));
        return parse_target(target);
    }
    std::string label() const { return group_json.empty() ? target : std::string("json"); }
};

void add_target_options(CLI::App* sub, TargetOptions& t)
{
    sub->add_option("--target", t.target, "named coefficient group, e.g. z2-trivial, z3-sign, z2xz2-sign, zxz-trivial");
    sub->add_option("--group", t.group_json, "coefficient group as JSON text, or @file");
}

std::string join(const std::vector<long long>& v)
{
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? "," : "") + std::to_string(v[k]);
    return s;
}

std::string witness_string(const TrivialUnitWitness& w)
{
    return std::string(w.sign < 0 ? "-" : "") + "t^" + std::to_string(w.power);
}

}  // namespace

InvolutiveAbelianGroup parse_target(const std::string& name)
{
    if (name == "zero")
        return InvolutiveAbelianGroup::zero();
    const auto dash = name.rfind('-');
    if (dash == std::string::npos)
        throw std::invalid_argument("target needs a -trivial or -sign suffix: " + name);
    const std::string action = name.substr(dash + 1);
    int sign = 0;
    if (action == "trivial")
        sign = 1;
    else if (action == "sign")
        sign = -1;
    else
        throw std::invalid_argument("unknown action '" + action + "' in target " + name);
    std::vector<long long> orders;
    std::stringstream in(name.substr(0, dash));
    std::string factor;
    while (std::getline(in, factor, 'x')) {
        if (factor.empty() || factor[0] != 'z')
            throw std::invalid_argument("bad factor '" + factor + "' in target " + name);
        if (factor.size() == 1) {
            orders.push_back(0);
            continue;
        }
        const std::string digits = factor.substr(1);
        if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
            digits.size() > 9)
            throw std::invalid_argument("bad factor '" + factor + "' in target " + name);
        const long long m = std::stoll(digits);
        if (m < 2)
            throw std::invalid_argument("cyclic factors need order at least 2 in target " + name);
        orders.push_back(m);
    }
    if (orders.empty())
        throw std::invalid_argument("empty target " + name);
    return InvolutiveAbelianGroup::sum_of_cyclic(orders, sign);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact verification of Whitehead torsion, C_2-homology and lens space inertia computations", "hcob"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", library_version());

    bool json = false;
    std::string out_path;
    int max_p = 3;
    app.add_flag("--json", json, "emit the report as JSON");
    app.add_option("--out", out_path, "write the report to a file");
    app.add_option("--max-p", max_p, "cap on the simplicial dimension of enumerations")->check(CLI::Range(0, 10));

    std::function<ReportDocument()> action;

    // unit verify
    long long order = 7;
    std::string coeffs, coeffs2;
    auto* unit = app.add_subcommand("unit", "group ring units");
    unit->require_subcommand(1);
    auto* unit_verify = unit->add_subcommand("verify", "check that an element of Z[C_n] is a unit");
    unit_verify->add_option("--order", order, "order n of the cyclic group")->required();
    unit_verify->add_option("--coeffs", coeffs, "coefficients c_0,...,c_{n-1}; missing ones are 0")->required();
    unit_verify->callback([&] {
        action = [&] {
            const GroupRingElement x = parse_element(order, coeffs);
            ReportDocument r("unit verify", {{"order", std::to_string(order)}, {"element", x.to_string()}});
            const auto inv = invert_unit(x);
            if (!inv) {
                r.add("u * u^-1 = 1", "units of Z[C_n]", StageStatus::failed,
                      {{"element", x.to_string()}, {"augmentation", to_string(x.augmentation())}, {"reason", "not a unit"}});
                return r;
            }
            const GroupRingElement prod = x * *inv;
            r.add("u * u^-1 = 1", "units of Z[C_n]",
                  prod == GroupRingElement::one(x.order()) ? StageStatus::verified : StageStatus::failed,
                  {{"element", x.to_string()}, {"inverse", inv->to_string()}, {"product", prod.to_string()}});
            return r;
        };
    });

    // wh eq
    auto* wh = app.add_subcommand("wh", "Whitehead classes");
    wh->require_subcommand(1);
    auto* wh_eq = wh->add_subcommand("eq", "compare two unit classes modulo trivial units");
    wh_eq->add_option("--order", order, "order n of the cyclic group")->required();
    wh_eq->add_option("--x", coeffs, "coefficients of the first unit")->required();
    wh_eq->add_option("--y", coeffs2, "coefficients of the second unit")->required();
    wh_eq->callback([&] {
        action = [&] {
            const GroupRingElement x = parse_element(order, coeffs);
            const GroupRingElement y = parse_element(order, coeffs2);
            ReportDocument r("wh eq", {{"order", std::to_string(order)}, {"x", x.to_string()}, {"y", y.to_string()}});
            const auto cx = WhiteheadClass::from_unit(x);
            const auto cy = WhiteheadClass::from_unit(y);
            r.add("both elements are units", "Whitehead classes need unit representatives",
                  cx && cy ? StageStatus::verified : StageStatus::failed,
                  {{"x", cx ? "unit" : "not a unit"}, {"y", cy ? "unit" : "not a unit"}});
            if (!cx || !cy)
                return r;
            r.assume("sk1-cyclic-prime", "class equality by trivial units");
            const auto w = wh_class_witness(*cx, *cy);
            r.add("[x] = [y] in Wh(C_n)", "quotient by trivial units", StageStatus::derived,
                  {{"equal", w ? "true" : "false"}, {"x/y", w ? witness_string(*w) : std::string("not a trivial unit")}});
            return r;
        };
    });

    // homology / tate
    TargetOptions target;
    int degree = 0;
    auto* hom = app.add_subcommand("homology", "H_n(C_2; A)");
    add_target_options(hom, target);
    hom->add_option("--n", degree, "degree")->required()->check(CLI::NonNegativeNumber);
    hom->callback([&] {
        action = [&] {
            const auto a = target.resolve();
            ReportDocument r("homology", {{"target", target.label()}, {"n", std::to_string(degree)}});
            r.add("H_" + std::to_string(degree) + "(C_2; A)", "periodic resolution with d_n = 1 + (-1)^n T",
                  StageStatus::derived, {{"A", a.underlying().to_string()}, {"group", homology_c2(a, degree).to_string()}});
            return r;
        };
    });
    auto* tate = app.add_subcommand("tate", "Tate homology of C_2");
    add_target_options(tate, target);
    tate->add_option("--n", degree, "degree, any integer")->required();
    tate->callback([&] {
        action = [&] {
            const auto a = target.resolve();
            ReportDocument r("tate", {{"target", target.label()}, {"n", std::to_string(degree)}});
            r.add("Tate H_" + std::to_string(degree) + "(C_2; A)", "norm sequence splice", StageStatus::derived,
                  {{"A", a.underlying().to_string()}, {"group", tate_homology_c2(a, degree).to_string()}});
            return r;
        };
    });

    // falg pi / falg check
    int falg_p = 0;
    auto* falg = app.add_subcommand("falg", "the simplicial abelian group of torsion functors");
    falg->require_subcommand(1);
    auto* falg_pi = falg->add_subcommand("pi", "homotopy group of the normalized complex");
    add_target_options(falg_pi, target);
    falg_pi->add_option("--n", degree, "degree")->required()->check(CLI::NonNegativeNumber);
    falg_pi->callback([&] {
        action = [&] {
            if (degree > kHardMaxHomotopyN || degree + 1 > max_p + 1)
                throw CapError("falg pi supports n <= " + std::to_string(std::min(kHardMaxHomotopyN, max_p)));
            const auto a = target.resolve();
            ReportDocument r("falg pi", {{"target", target.label()}, {"n", std::to_string(degree)}});
            const FgAbGroup pi = FAlgModel(a).moore_homotopy(degree);
            const FgAbGroup h = homology_c2(a, degree);
            r.add("pi_n F^alg(A)", "normalized Moore complex, constraint solving", StageStatus::derived,
                  {{"group", pi.to_string()}});
            r.add("H_n(C_2; A)", "periodic resolution", StageStatus::derived, {{"group", h.to_string()}});
            r.add("pi_n F^alg(A) = H_n(C_2; A)", "quasi-isomorphism to C_2-homology",
                  pi == h ? StageStatus::verified : StageStatus::failed,
                  {{"pi_n", pi.to_string()}, {"H_n", h.to_string()}});
            return r;
        };
    });
    auto* falg_check = falg->add_subcommand("check", "solve and check the degree p group");
    add_target_options(falg_check, target);
    falg_check->add_option("--p", falg_p, "simplicial degree")->required()->check(CLI::NonNegativeNumber);
    falg_check->callback([&] {
        action = [&] {
            if (falg_p > FAlgModel::kMaxDegree || falg_p > max_p)
                throw CapError("falg check supports p <= " + std::to_string(std::min(FAlgModel::kMaxDegree, max_p)));
            const auto a = target.resolve();
            ReportDocument r("falg check", {{"target", target.label()}, {"p", std::to_string(falg_p)}});
            const FAlgModel model(a);
            const SubgroupBasis basis = model.group(falg_p).basis();
            r.add("F^alg_p(A)", "vanishing and face-horn duality constraints", StageStatus::derived,
                  {{"group", basis.iso_type().to_string()}});
            if (!basis.is_finite())
                return r;
            const BigInt order_found = basis.order();
            const BigInt a_order = a.underlying().order();
            BigInt expected = 1;
            for (long long k = 0; k < (1LL << falg_p); ++k)
                expected *= a_order;
            r.add("|F^alg_p(A)| = |A|^(2^p)", "normalized chains are A in each degree",
                  order_found == expected ? StageStatus::verified : StageStatus::failed,
                  {{"order", to_string(order_found)}, {"expected", to_string(expected)}});
            if (order_found > 4096)
                return r;
            bool all_ok = true;
            std::size_t count = 0;
            for (const auto& x : model.enumerate(falg_p)) {
                ++count;
                all_ok = all_ok && model.is_element(x);
                if (x.ambient_dim() <= 3)
                    all_ok = all_ok && check_square(x);
            }
            r.add("every solution satisfies vanishing, duality and the square condition", "direct check",
                  all_ok ? StageStatus::verified : StageStatus::failed, {{"elements", std::to_string(count)}});
            return r;
        };
    });

    // subcomplex enum
    int sub_p = 0;
    bool list = false;
    auto* subc = app.add_subcommand("subcomplex", "subcomplexes of a simplex");
    subc->require_subcommand(1);
    auto* subc_enum = subc->add_subcommand("enum", "enumerate contractible subcomplexes");
    subc_enum->add_option("--p", sub_p, "ambient dimension")->required()->check(CLI::NonNegativeNumber);
    subc_enum->add_flag("--list", list, "list every complex");
    subc_enum->callback([&] {
        action = [&] {
            if (sub_p > kHardMaxSubcomplexP || sub_p > max_p)
                throw CapError("subcomplex enum supports p <= " + std::to_string(std::min(kHardMaxSubcomplexP, max_p)));
            ReportDocument r("subcomplex enum", {{"p", std::to_string(sub_p)}});
            const auto all = enumerate_subcomplexes(sub_p);
            const auto contractible = enumerate_contractible_subcomplexes(sub_p);
            Witness w{{"subcomplexes", std::to_string(all.size())}, {"contractible", std::to_string(contractible.size())}};
            if (list)
                for (std::size_t k = 0; k < contractible.size(); ++k)
                    w.emplace_back("K" + std::to_string(k), contractible[k].to_string());
            r.add("contractible subcomplexes of the p-simplex", "collapsibility", StageStatus::derived, std::move(w));
            return r;
        };
    });

    // torsion compose | reverse | double
    long long dim = 11, twist = 1, twist2 = 1;
    int orientation = 1;
    auto* tor = app.add_subcommand("torsion", "h-cobordism torsion calculus");
    tor->require_subcommand(1);
    auto symbol_options = [&](CLI::App* s) {
        s->add_option("--order", order, "order n of the fundamental group C_n")->required();
        s->add_option("--d", dim, "dimension of the manifold");
        s->add_option("--torsion", coeffs, "unit coefficients of tau(W, M)")->required();
        s->add_option("--twist", twist, "h^W_* acts by t -> t^twist");
        s->add_option("--orientation", orientation, "orientation character on the generator, 1 or -1");
    };
    auto symbol = [&](const std::string& c, long long tw) {
        return HCobordismSymbol(dim, WhiteheadClass(parse_element(order, c)), tw, OrientationCharacter{orientation});
    };
    auto symbol_witness = [](const HCobordismSymbol& s) {
        return Witness{{"d", std::to_string(s.dim())},
                       {"torsion", s.torsion().representative().to_string()},
                       {"twist", std::to_string(s.twist())}};
    };
    auto* tor_compose = tor->add_subcommand("compose", "W followed by W'");
    symbol_options(tor_compose);
    tor_compose->add_option("--torsion2", coeffs2, "unit coefficients of tau(W', M')")->required();
    tor_compose->add_option("--twist2", twist2, "twist of W'");
    tor_compose->callback([&] {
        action = [&] {
            const auto w = symbol(coeffs, twist);
            const auto w2 = symbol(coeffs2, twist2);
            ReportDocument r("torsion compose", {{"W", to_json(w)}, {"W'", to_json(w2)}});
            r.add("W' o W", "tau = tau(W) + (h^W)^-1_* tau(W')", StageStatus::derived, symbol_witness(compose(w, w2)));
            return r;
        };
    });
    auto* tor_reverse = tor->add_subcommand("reverse", "W read from its other end");
    symbol_options(tor_reverse);
    tor_reverse->callback([&] {
        action = [&] {
            const auto w = symbol(coeffs, twist);
            ReportDocument r("torsion reverse", {{"W", to_json(w)}});
            r.add("reverse(W)", "tau(W, M') = (-1)^d h^W_* conj(tau)", StageStatus::derived, symbol_witness(reverse(w)));
            return r;
        };
    });
    auto* tor_double = tor->add_subcommand("double", "D(W) = reverse(W) o W");
    symbol_options(tor_double);
    tor_double->callback([&] {
        action = [&] {
            const auto w = symbol(coeffs, twist);
            ReportDocument r("torsion double", {{"W", to_json(w)}});
            const auto dw = double_of(w);
            Witness wit = symbol_witness(dw);
            wit.emplace_back("trivial_class", as_trivial_unit(dw.torsion().representative()) ? "true" : "false");
            r.add("D(W)", "tau + (-1)^d conj(tau)", StageStatus::derived, std::move(wit));
            return r;
        };
    });

    // lens inertia / report-theorem-a
    long long lens_p = 7, lens_k = 1;
    std::string weights, unit_coeffs;
    auto* lens = app.add_subcommand("lens", "lens spaces");
    lens->require_subcommand(1);
    auto* lens_inertia = lens->add_subcommand("inertia", "inertia classes phi_i(u) u^-1");
    lens_inertia->add_option("--p", lens_p, "odd prime order");
    lens_inertia->add_option("--k", lens_k, "multiplicity of the balanced weights 1..p-1");
    lens_inertia->add_option("--weights", weights, "explicit weights r_1,...,r_n instead of balanced ones");
    lens_inertia->add_option("--unit", unit_coeffs, "coefficients of u in Z[C_p]");
    lens_inertia->callback([&] {
        action = [&] {
            const LensSpace l = weights.empty() ? LensSpace::balanced(lens_p, lens_k) : LensSpace(lens_p, parse_int_list(weights));
            GroupRingElement u;
            if (!unit_coeffs.empty())
                u = parse_element(lens_p, unit_coeffs);
            else if (lens_p == 7)
                u = theorem_a_unit();
            else if (lens_p == 5)
                u = GroupRingElement::from_ints(5, {1, -1, 0, 0, -1});
            else
                throw std::invalid_argument("--unit is required for p other than 5 and 7");
            ReportDocument r("lens inertia", {{"lens_space", l.to_string()}, {"unit", u.to_string()}});
            const auto cu = WhiteheadClass::from_unit(u);
            r.add("u is a unit", "torsion of W", cu ? StageStatus::verified : StageStatus::failed, {{"unit", u.to_string()}});
            if (!cu)
                return r;
            const InertiaSet s = inertia_set(l, *cu);
            Witness w;
            for (const auto& c : s.classes)
                w.emplace_back("phi_{" + join(c.labels) + "}", c.value.representative().to_string());
            w.emplace_back("cardinality", std::to_string(s.cardinality()));
            r.add("inertia classes", "phi_i(u) u^-1 over simple automorphisms", StageStatus::derived, std::move(w));
            return r;
        };
    });
    auto* lens_report = lens->add_subcommand("report-theorem-a", "full inertia pipeline in dimension 12k-1");
    lens_report->add_option("--k", lens_k, "dimension parameter, d = 12k - 1")->check(CLI::PositiveNumber);
    lens_report->add_option("--unit", unit_coeffs, "replace u by another element of Z[C_7]");
    lens_report->callback([&] {
        action = [&] {
            std::optional<GroupRingElement> u;
            if (!unit_coeffs.empty())
                u = parse_element(7, unit_coeffs);
            return theorem_a_report(lens_k, u);
        };
    });

    // kapp tor / k3
    long long kp = 7;
    int ki = 0;
    auto* kapp = app.add_subcommand("kapp", "K-theory bookkeeping");
    kapp->require_subcommand(1);
    auto* kapp_tor = kapp->add_subcommand("tor", "Tor_i over Z[C_p] of Z and Z[zeta_p]");
    kapp_tor->add_option("--p", kp, "prime")->required();
    kapp_tor->add_option("--i", ki, "degree")->required()->check(CLI::NonNegativeNumber);
    kapp_tor->callback([&] {
        action = [&] {
            ReportDocument r("kapp tor", {{"p", std::to_string(kp)}, {"i", std::to_string(ki)}});
            r.add("Tor_i(Z, Z[zeta_p])", "periodic resolution of Z over Z[C_p]", StageStatus::derived,
                  {{"group", tor_pi_r(kp, ki).to_string()}});
            return r;
        };
    });
    auto* kapp_k3 = kapp->add_subcommand("k3", "divisibility of |K_3(F_p)| by 3");
    kapp_k3->add_option("--p", kp, "prime")->required();
    kapp_k3->callback([&] {
        action = [&] {
            ReportDocument r("kapp k3", {{"p", std::to_string(kp)}});
            const K3Divisibility k = k3_divisibility(kp);
            r.assume("k3-finite-field", "order of K_3(F_p)");
            r.add("p^2 - 1", "3-adic valuation of |K_3(F_p)|", StageStatus::derived,
                  {{"order", std::to_string(k.order)},
                   {"v_3", std::to_string(k.three_adic_valuation)},
                   {"divisible_by_3", k.divisible_by_three ? "true" : "false"},
                   {"injective", k.injective ? "true" : "false"}});
            return r;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion& e) {
        out << library_version() << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    if (!action) {
        err << "error: incomplete command\n";
        return kUsage;
    }

    ReportDocument report;
    try {
        report = action();
    } catch (const CapError& e) {
        err << "error: cap exceeded: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    const std::string text = json ? to_json(report) + "\n" : report.to_text();
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << out_path << '\n';
            return kUsage;
        }
        f << text;
    } else {
        out << text;
    }
    return report.exit_code();
}

}  // namespace hcob::cli
