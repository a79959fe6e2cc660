#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sintk/acceptance.hpp"
#include "sintk/io/json.hpp"

namespace {

using namespace sintk;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw UsageError("empty list entry");
        out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

template <class F>
auto parse_flag(const std::string& flag, F&& f) {
    try {
        return f();
    } catch (const UsageError& e) {
        throw UsageError(flag + ": " + e.what());
    } catch (const std::exception& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

QVec rational_list(const std::string& flag, const std::string& s) {
    return parse_flag(flag, [&] {
        QVec v;
        for (const auto& x : split(s)) v.push_back(parse_rational(x));
        return v;
    });
}

std::vector<Integer> integer_list(const std::string& flag, const std::string& s) {
    return parse_flag(flag, [&] {
        std::vector<Integer> v;
        for (const auto& x : split(s)) {
            Rational r = parse_rational(x);
            if (!is_integer(r)) throw UsageError("'" + x + "' is not an integer");
            v.push_back(r.get_num());
        }
        return v;
    });
}

std::vector<int> int_list(const std::string& flag, const std::string& s) {
    std::vector<int> v;
    for (const auto& z : integer_list(flag, s)) {
        if (!z.fits_sint_p()) throw UsageError(flag + ": entry out of range");
        v.push_back(static_cast<int>(z.get_si()));
    }
    return v;
}

std::string join(const std::vector<Integer>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

std::string join(const std::vector<int>& v) {
    std::vector<Integer> z(v.begin(), v.end());
    return join(z);
}

// key: value lines
class TextOut {
public:
    template <class V>
    TextOut& operator()(const std::string& key, const V& value) {
        std::ostringstream os;
        os << value;
        lines_ += key + ": " + os.str() + "\n";
        return *this;
    }
    TextOut& raw(const std::string& line) {
        lines_ += line + "\n";
        return *this;
    }
    const std::string& str() const { return lines_; }

private:
    std::string lines_;
};

std::ostream& operator<<(std::ostream& os, const QVec& v) { return os << sintk::to_string(v); }
std::ostream& operator<<(std::ostream& os, const AbelianGroup& g) { return os << g.to_string(); }

std::string graded_text(const GradedGroup& g) {
    std::string s;
    for (const auto& [d, grp] : g.by_degree) s += (s.empty() ? "" : ", ") + ("H" + std::to_string(d) + "=" + grp.to_string());
    return s.empty() ? "0" : s;
}

// Options shared by every subcommand that needs a holonomy parameter Phi.
struct PhiArgs {
    std::string group, phi, lambda, s0, blocks;

    void add(CLI::App* app, bool with_blocks = true) {
        app->add_option("--group", group, "Cartan type, e.g. A1, B4, G2");
        app->add_option("--phi", phi, "simple-root values alpha_i(Phi), p/q list");
        app->add_option("--lambda", lambda, "type A eigenvalues; the last one may be omitted");
        app->add_option("--s0", s0, "1-based simple roots vanishing on the monotone Phi");
        if (with_blocks) app->add_option("--blocks", blocks, "SU(N) eigenvalue multiplicities, monotone Phi");
    }

    WeylChamberPoint resolve() const {
        if (!blocks.empty()) {
            if (!phi.empty() || !lambda.empty() || !s0.empty())
                throw UsageError("--blocks cannot be combined with --phi, --lambda or --s0");
            auto mult = int_list("--blocks", blocks);
            return su_n_point(su_n_monotone(mult));
        }
        if (group.empty()) throw UsageError("--group is required");
        auto rs = parse_flag("--group", [&] { return build_root_system(group); });
        if (!phi.empty() + !lambda.empty() + !s0.empty() > 1)
            throw UsageError("give at most one of --phi, --lambda, --s0");
        if (!phi.empty()) {
            QVec c = rational_list("--phi", phi);
            if (c.size() != static_cast<size_t>(rs->rank()))
                throw UsageError("--phi: expected " + std::to_string(rs->rank()) + " values");
            WeylChamberPoint p(rs, c);
            p.require_valid();
            return p;
        }
        if (!lambda.empty()) {
            QVec ev = rational_list("--lambda", lambda);
            if (ev.size() == static_cast<size_t>(rs->rank())) {
                Rational sum = 0;
                for (const auto& x : ev) sum += x;
                ev.push_back(-sum);
            }
            auto p = WeylChamberPoint::from_eigenvalues(rs, ev);
            p.require_valid();
            return p;
        }
        std::vector<int> zero_based;
        if (!s0.empty())
            for (int i : int_list("--s0", s0)) zero_based.push_back(i - 1);
        return solve_monotone({rs, zero_based});
    }
};

struct ChargeArgs {
    long k = 0;
    std::string l;

    void add(CLI::App* app) {
        app->add_option("--k", k, "instanton number");
        app->add_option("--l", l, "monopole charge in lattice coordinates");
    }
    ChargePair resolve(const WeylChamberPoint& phi) const {
        ChargePair c{k, {}};
        size_t rank = monopole_lattice(phi).rank();
        if (l.empty()) c.l.assign(rank, Integer(0));
        else c.l = integer_list("--l", l);
        return c;
    }
};

struct SurfaceArgs {
    long chi = 2;
    std::string genus;
    long self = 0;

    void add(CLI::App* app) {
        app->add_option("--chi", chi, "Euler characteristic of the surface");
        app->add_option("--genus", genus, "genus of each component (overrides --chi)");
        app->add_option("--self,--self-intersection", self, "self-intersection of the surface");
    }
    SurfaceData resolve() const {
        if (genus.empty()) return parse_flag("--chi", [&] { return SurfaceData::with_chi(chi, self); });
        SurfaceData s{int_list("--genus", genus), self};
        for (int g : s.genus_list)
            if (g < 0) throw UsageError("--genus: negative genus");
        return s;
    }
};

struct KnotArgs {
    std::string knot, pd_file;

    void add(CLI::App* app) {
        app->add_option("--knot", knot, "unknot | 2bridge:p/q | torus:p,q | pd:PD[...] | pdfile:path");
        app->add_option("--pd-file", pd_file, "file holding a PD code");
    }
    KnotPresentation resolve() const {
        if (knot.empty() == pd_file.empty()) throw UsageError("give exactly one of --knot, --pd-file");
        return parse_knot(knot.empty() ? "pdfile:" + pd_file : knot);
    }
};

struct Output {
    std::string format = "json";
    void emit(const json& j, const TextOut& text) const {
        if (format == "json") std::cout << j.dump(2) << "\n";
        else std::cout << text.str();
    }
};

// --- subcommands

int run_lie(const Output& out, const std::string& type, const std::string& show) {
    auto rs = parse_flag("--type", [&] { return build_root_system(type); });
    auto s = summarize(*rs, show == "roots");
    TextOut t;
    t("type", s.type);
    if (show == "weyl") {
        t("2rho", s.twice_rho)("rho", Rational(1, 2) * s.twice_rho);
    } else if (show == "roots") {
        t("positive roots", s.positive_roots);
        for (const auto& r : s.positive_root_list) t.raw("  " + sintk::to_string(r));
    } else if (show == "cartan") {
        for (const auto& row : s.cartan_matrix) t.raw("  " + join(row));
    } else {
        t("rank", s.rank)("dim", s.dim_group)("positive roots", s.positive_roots)("coxeter", s.coxeter)(
            "dual coxeter", s.dual_coxeter)("killing", s.killing_scale.get_str() + " x euclidean")("2rho", s.twice_rho)(
            "theta", s.highest_root)("<theta,theta>", s.theta_norm)("2<rho,theta>", s.twice_rho_theta)(
            "identities", s.identities_hold() ? "hold" : "FAIL");
    }
    out.emit(s, t);
    return 0;
}

int run_monotone(const Output& out, const PhiArgs& pa) {
    MonotoneReport r;
    if (!pa.blocks.empty()) {
        r = monotone_report(int_list("--blocks", pa.blocks));
    } else {
        if (!pa.phi.empty() || !pa.lambda.empty()) throw UsageError("monotone takes --group/--s0 or --blocks");
        if (pa.group.empty()) throw UsageError("--group is required");
        std::vector<int> s0;
        if (!pa.s0.empty())
            for (int i : int_list("--s0", pa.s0)) s0.push_back(i - 1);
        r = monotone_report({parse_flag("--group", [&] { return build_root_system(pa.group); }), s0});
    }
    std::vector<int> s0_one_based;
    for (int i : r.s0) s0_one_based.push_back(i + 1);
    TextOut t;
    t("group", r.group)("s0", join(s0_one_based))("phi", r.phi)("phi vector", r.phi_vector)("theta(phi)", r.theta_value);
    if (!r.lambdas.empty()) t("blocks", join(r.multiplicities))("lambdas", r.lambdas);
    t("monotone", r.monotone ? "yes" : "no")("kahler consistent", r.kahler_consistent ? "yes" : "no");
    out.emit(r, t);
    return 0;
}

int run_dim(const Output& out, const PhiArgs& pa, const ChargeArgs& ca, const SurfaceArgs& sa, long bplus, long bone) {
    auto phi = pa.resolve();
    auto r = dimension_report(phi, ca.resolve(phi), sa.resolve(), {bplus, bone});
    TextOut t;
    t("group", r.group)("phi", r.phi)("k", r.k)("l", join(r.l))("chi", r.chi)("self-intersection", r.self_intersection)(
        "b+", r.b_plus)("b1", r.b_one)("dimension", r.dimension)("framed dimension", r.framed_dimension);
    out.emit(r, t);
    return 0;
}

int run_energy(const Output& out, const PhiArgs& pa, const ChargeArgs& ca, const SurfaceArgs& sa) {
    auto phi = pa.resolve();
    auto r = energy_report(phi, ca.resolve(phi), sa.resolve());
    TextOut t;
    t("group", r.group)("phi", r.phi)("k", r.k)("l", join(r.l))("self-intersection", r.self_intersection)(
        "energy", r.energy_over_pi2.get_str() + " pi^2");
    out.emit(r, t);
    return 0;
}

int run_framed(const Output& out, const PhiArgs& pa, const ChargeArgs& ca) {
    auto phi = pa.resolve();
    auto c = ca.resolve(phi);
    Integer d = framed_dimension(phi, c);
    json j = {{"group", phi.root_system().cartan_type().name()},
              {"phi", phi.coords()},
              {"k", c.k},
              {"l", c.l},
              {"framed_dimension", d}};
    TextOut t;
    t("group", phi.root_system().cartan_type().name())("phi", phi.coords())("k", c.k)("l", join(c.l))("framed dimension", d);
    out.emit(j, t);
    return 0;
}

int run_bubbles(const Output& out, const PhiArgs& pa, const ChargeArgs& ca, bool scan, long kbound, long lbound) {
    if (scan) {
        auto blocks = int_list("--blocks", pa.blocks.empty() ? std::string() : pa.blocks);
        if (blocks.size() != 2) throw UsageError("--scan needs --blocks n1,n2");
        if (kbound < 0 || lbound < -1) throw UsageError("--kbound/--lbound must be non-negative");
        long lb = lbound < 0 ? 3L * (blocks[0] + blocks[1]) : lbound;
        auto r = two_block_bubble_scan(blocks[0], blocks[1], kbound, lb);
        TextOut t;
        t("blocks", join(r.blocks))("k bound", r.k_bound)("l bound", r.l_bound)("feasible charges", r.feasible_charges)(
            "min positive dimension", r.min_positive_dimension);
        out.emit(r, t);
        return 0;
    }
    auto phi = pa.resolve();
    auto r = bubble_feasible(phi, ca.resolve(phi));
    TextOut t;
    t("feasible", r.feasible ? "yes" : "no")("k slack", r.k_slack);
    for (size_t i = 0; i < r.slacks.size(); ++i) t("slack alpha" + std::to_string(r.simple_indices[i] + 1), r.slacks[i]);
    t("framed dimension", r.framed_dimension);
    out.emit(r, t);
    return 0;
}

int run_nonintegral(const Output& out, const PhiArgs& pa, const std::string& mult, long c1, int su_multi, int un,
                    const std::string& pairings, std::uint64_t budget) {
    if (un > 0) {
        auto v = check_un_coprime(un, integer_list("--pairings", pairings));
        TextOut t;
        t("verdict", v.pass ? "PASS" : "FAIL");
        if (!v.pass) t("failing k", v.failing_k);
        out.emit(v, t);
        return 0;
    }
    auto m = integer_list("--mult", mult);
    if (su_multi > 0) {
        auto v = check_nonintegral_su_multi(su_multi, m);
        TextOut t;
        t("verdict", v.pass ? "PASS" : "FAIL");
        if (!v.pass) t("k", v.k)("choices", v.choices);
        out.emit(v, t);
        return 0;
    }
    auto phi = pa.resolve();
    auto v = check_nonintegral_simple(phi, {m, c1}, budget);
    TextOut t;
    t("group", phi.root_system().cartan_type().name())("phi", phi.coords())("verdict", v.pass ? "PASS" : "FAIL")(
        "tuples checked", v.tuples_checked);
    if (v.witness) {
        std::string pts;
        for (const auto& p : v.witness->orbit_points) pts += (pts.empty() ? "" : " ") + sintk::to_string(p);
        t("witness weight", "w" + std::to_string(v.witness->weight_index + 1))("orbit points", pts)("sum", v.witness->sum);
    }
    out.emit(v, t);
    return 0;
}

int run_repvar(const Output& out, const KnotArgs& ka, const std::string& constraint, int rank, const RootTolerances& tol) {
    if (!(tol.bracket > 0 && tol.simplicity > 0 && tol.residual > 0)) throw UsageError("tolerances must be positive");
    auto k = ka.resolve();
    if (rank > 0) {
        auto r = critical_set_report(k, rank);
        TextOut t;
        t("knot", r.knot)("N", r.rank)("critical set", graded_text(r.full.total_homology))(
            "critical set total", r.full.ungraded())("quotient", graded_text(r.reduced.total_homology));
        if (r.has_fiber) t("fiber", graded_text(r.fiber.total_homology));
        out.emit(r, t);
        return 0;
    }
    auto c = parse_flag("--constraint", [&] { return parse_constraint(constraint); });
    RepVarietyReport r = k.kind == KnotKind::two_bridge && k.p > 1 && c == TorusConstraint::meridian_traceless
                             ? rep_variety_two_bridge(k.p, k.q, tol)
                             : rep_variety(k, c);
    TextOut t;
    t("knot", r.knot)("constraint", r.constraint)("components", r.components.size())(
        "spheres", r.count(ComponentKind::abelian_sphere))("rp3", r.count(ComponentKind::irreducible_rp3))(
        "points", r.count(ComponentKind::isolated_point));
    for (const auto& comp : r.components) t.raw("  " + to_string(comp.kind) + " " + comp.descriptor);
    t("homology", graded_text(r.total_homology))("total", r.ungraded());
    out.emit(r, t);
    return 0;
}

int run_t3(const Output& out, int n) {
    auto classes = t3_flat_connections(n);
    TextOut t;
    t("N", n)("classes", classes.size());
    for (const auto& c : classes)
        t.raw("  k=" + std::to_string(c.k) + " commutators " +
              (c.commutator_ab && c.commutator_ac && c.commutator_bc ? "ok" : "FAIL") + ", det " +
              (c.unit_determinant ? "1" : "FAIL") + ", commutant dim " + std::to_string(c.commutant_dimension) + "/" +
              std::to_string(c.scalar_dimension) + (c.verified() ? ", verified" : ", NOT verified"));
    out.emit(json{{"N", n}, {"classes", classes}}, t);
    return 0;
}

int run_khovanov(const Output& out, const KnotArgs& ka, int crossings, const std::string& coefficients) {
    if (coefficients != "Z" && coefficients != "F2") throw UsageError("--coefficients must be Z or F2");
    auto k = ka.resolve();
    KhovanovOptions opt;
    if (crossings > 0) opt.crossing_budget = crossings;
    auto kh = khovanov(k.diagram(), opt);
    json j = {{"knot", k.to_string()}, {"coefficients", coefficients}};
    TextOut t;
    t("knot", k.to_string());
    if (coefficients == "F2") {
        auto ranks = khovanov_f2_ranks(kh);
        json arr = json::array();
        long total = 0;
        char buf[64];
        for (const auto& [ij, r] : ranks) {
            arr.push_back({{"i", ij.first}, {"j", ij.second}, {"rank", r}});
            std::snprintf(buf, sizeof buf, "  %4d %4d  %ld", ij.first, ij.second, r);
            t.raw(buf);
            total += r;
        }
        j["ranks"] = arr;
        j["total_rank"] = total;
        t("total rank", total);
    } else {
        char buf[64];
        for (const auto& [ij, g] : kh.entries) {
            std::snprintf(buf, sizeof buf, "  %4d %4d  ", ij.first, ij.second);
            t.raw(buf + g.to_string());
        }
        j["homology"] = kh;
        j["total"] = kh.total();
        t("total", kh.total());
    }
    out.emit(j, t);
    return 0;
}

int run_jones(const Output& out, const KnotArgs& ka, int crossings) {
    auto k = ka.resolve();
    auto v = jones(k.diagram(), crossings > 0 ? crossings : default_crossing_budget());
    json j = {{"knot", k.to_string()}, {"jones", v}};
    j["jones"]["text"] = v.to_string("q");
    TextOut t;
    t("knot", k.to_string())("jones", v.to_string("q"));
    out.emit(j, t);
    return 0;
}

int run_alexander(const Output& out, const KnotArgs& ka) {
    auto k = ka.resolve();
    auto a = alexander(k);
    auto d2 = alexander_second_derivative_at_one(k);
    json j = {{"knot", k.to_string()}, {"alexander", a}, {"second_derivative_at_one", d2}};
    TextOut t;
    t("knot", k.to_string())("alexander", a.to_string("t"))("second derivative at 1", d2);
    out.emit(j, t);
    return 0;
}

int run_compare(const Output& out, const KnotArgs& ka, int crossings) {
    auto k = ka.resolve();
    KhovanovOptions opt;
    if (crossings > 0) opt.crossing_budget = crossings;
    auto r = compare_with_repvar(k, opt);
    TextOut t;
    t("knot", r.knot)("kh", r.kh)("H(R)", r.rep)("kh = H(R)", r.kh_matches_rep ? "yes" : "no")("kh + kh", r.kh_doubled)(
        "critical set", r.critical)("kh + kh = critical", r.doubled_matches_critical ? "yes" : "no")(
        "critical rank - doubled rank", r.critical_rank_minus_doubled);
    out.emit(r, t);
    return 0;
}

int run_corpus(const Output& out) {
    auto results = acceptance::run_all();
    json arr = json::array();
    TextOut t;
    int failed = 0;
    char buf[160];
    for (const auto& r : results) {
        arr.push_back({{"id", r.id},
                       {"title", r.title},
                       {"pass", r.pass()},
                       {"seconds", r.seconds},
                       {"limit_seconds", r.limit_seconds},
                       {"failures", r.failures}});
        std::snprintf(buf, sizeof buf, "%2d  %-36s  %-4s  %8.3f s", r.id, r.title.c_str(), r.pass() ? "PASS" : "FAIL",
                      r.seconds);
        t.raw(buf);
        for (const auto& f : r.failures) t.raw("      " + f);
        failed += !r.pass();
    }
    t("passed", std::to_string(results.size() - failed) + "/" + std::to_string(results.size()));
    out.emit(json{{"criteria", arr}, {"passed", results.size() - failed}, {"total", results.size()}}, t);
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Instanton and knot-invariant toolkit"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--output", out.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    auto output_flag = [&](CLI::App* sub) {
        sub->add_option("--output", out.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };

    std::string lie_type, lie_show = "summary";
    auto* lie = app.add_subcommand("lie", "root system data");
    lie->add_option("--type", lie_type, "Cartan type")->required();
    lie->add_option("--show", lie_show)->check(CLI::IsMember({"summary", "weyl", "roots", "cartan"}));
    output_flag(lie);

    PhiArgs mono_phi;
    auto* mono = app.add_subcommand("monotone", "monotone holonomy parameter");
    mono_phi.add(mono);
    output_flag(mono);

    PhiArgs dim_phi;
    ChargeArgs dim_charge;
    SurfaceArgs dim_surf;
    long bplus = 0, bone = 0;
    auto* dim = app.add_subcommand("dim", "formal dimension");
    dim_phi.add(dim);
    dim_charge.add(dim);
    dim_surf.add(dim);
    dim->add_option("--bplus", bplus);
    dim->add_option("--bone", bone);
    output_flag(dim);

    PhiArgs en_phi;
    ChargeArgs en_charge;
    SurfaceArgs en_surf;
    auto* en = app.add_subcommand("energy", "energy in units of pi^2");
    en_phi.add(en);
    en_charge.add(en);
    en_surf.add(en);
    output_flag(en);

    PhiArgs fr_phi;
    ChargeArgs fr_charge;
    auto* fr = app.add_subcommand("framed", "framed dimension over C^2");
    fr_phi.add(fr);
    fr_charge.add(fr);
    output_flag(fr);

    PhiArgs bub_phi;
    ChargeArgs bub_charge;
    bool bub_scan = false;
    long kbound = 3, lbound = -1;
    auto* bub = app.add_subcommand("bubbles", "bubble feasibility and two-block scans");
    bub_phi.add(bub);
    bub_charge.add(bub);
    bub->add_flag("--scan", bub_scan, "scan all charges for a two-block SU(N) pattern");
    bub->add_option("--kbound", kbound);
    bub->add_option("--lbound", lbound, "defaults to 3N");
    output_flag(bub);

    PhiArgs ni_phi;
    std::string ni_mult = "1", ni_pairings;
    long ni_c1 = 0;
    int ni_su = 0, ni_un = 0;
    std::uint64_t ni_budget = default_budget();
    auto* ni = app.add_subcommand("nonintegral", "non-integrality verdicts");
    ni_phi.add(ni);
    ni->add_option("--mult", ni_mult, "component multiplicities");
    ni->add_option("--c1", ni_c1, "first Chern class pairing");
    ni->add_option("--su-multi", ni_su, "SU(N) multi-component rule for this N");
    ni->add_option("--un", ni_un, "U(N) coprime rule for this N");
    ni->add_option("--pairings", ni_pairings, "c1 pairings for --un");
    ni->add_option("--budget", ni_budget, "enumeration budget")->check(CLI::PositiveNumber);
    output_flag(ni);

    KnotArgs rv_knot;
    std::string rv_constraint = "meridian";
    int rv_rank = 0;
    RootTolerances tol;
    auto* rv = app.add_subcommand("repvar", "traceless SU(2) representation varieties");
    rv_knot.add(rv);
    rv->add_option("--constraint", rv_constraint, "meridian or longitude");
    rv->add_option("--rank", rv_rank, "report the SU(N) critical set instead");
    rv->add_option("--bracket-tol", tol.bracket);
    rv->add_option("--simplicity-tol", tol.simplicity);
    rv->add_option("--residual-tol", tol.residual);
    output_flag(rv);

    int t3_n = 2;
    auto* t3 = app.add_subcommand("t3", "flat PU(N) connections on T^3");
    t3->add_option("--n,-N", t3_n)->required()->check(CLI::Range(2, 64));
    output_flag(t3);

    KnotArgs kh_knot;
    int kh_cross = 0;
    std::string kh_coeff = "Z";
    auto* kh = app.add_subcommand("khovanov", "Khovanov homology");
    kh_knot.add(kh);
    kh->add_option("--crossings", kh_cross, "crossing budget")->check(CLI::PositiveNumber);
    kh->add_option("--coefficients", kh_coeff, "Z or F2");
    output_flag(kh);

    KnotArgs jo_knot;
    int jo_cross = 0;
    auto* jo = app.add_subcommand("jones", "Jones polynomial");
    jo_knot.add(jo);
    jo->add_option("--crossings", jo_cross, "crossing budget")->check(CLI::PositiveNumber);
    output_flag(jo);

    KnotArgs al_knot;
    auto* al = app.add_subcommand("alexander", "Alexander polynomial");
    al_knot.add(al);
    output_flag(al);

    KnotArgs cmp_knot;
    int cmp_cross = 0;
    auto* cmp = app.add_subcommand("compare", "Khovanov homology against the representation variety");
    cmp_knot.add(cmp);
    cmp->add_option("--crossings", cmp_cross, "crossing budget")->check(CLI::PositiveNumber);
    output_flag(cmp);

    auto* corpus = app.add_subcommand("corpus", "run the acceptance suite");
    output_flag(corpus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*lie) return run_lie(out, lie_type, lie_show);
        if (*mono) return run_monotone(out, mono_phi);
        if (*dim) return run_dim(out, dim_phi, dim_charge, dim_surf, bplus, bone);
        if (*en) return run_energy(out, en_phi, en_charge, en_surf);
        if (*fr) return run_framed(out, fr_phi, fr_charge);
        if (*bub) return run_bubbles(out, bub_phi, bub_charge, bub_scan, kbound, lbound);
        if (*ni) return run_nonintegral(out, ni_phi, ni_mult, ni_c1, ni_su, ni_un, ni_pairings, ni_budget);
        if (*rv) return run_repvar(out, rv_knot, rv_constraint, rv_rank, tol);
        if (*t3) return run_t3(out, t3_n);
        if (*kh) return run_khovanov(out, kh_knot, kh_cross, kh_coeff);
        if (*jo) return run_jones(out, jo_knot, jo_cross);
        if (*al) return run_alexander(out, al_knot);
        if (*cmp) return run_compare(out, cmp_knot, cmp_cross);
        if (*corpus) return run_corpus(out);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const sintk::Error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "InternalError: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
