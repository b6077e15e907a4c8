#include "partcat/cli.hpp"

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "partcat/category.hpp"
#include "partcat/idempotents.hpp"
#include "partcat/json_io.hpp"
#include "partcat/lattice.hpp"
#include "partcat/morphism.hpp"
#include "partcat/perm_group.hpp"
#include "partcat/projectives.hpp"
#include "partcat/roots.hpp"

namespace partcat::cli {

namespace {

struct Options {
    std::string category = "P";
    int k = -1;
    int kmax = -1;
    std::vector<int> points;
    std::string t;
    std::string format = "text";
    int bound = 8;
    std::uint64_t seed = 1;
    bool det = false;
    std::string partition;
    bool x = false;
    int jw = -1;
    std::string morphism;
    std::string map;
    int l = -1;
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Category load_category(const std::string& arg) {
    if (auto f = parse_family(arg)) return Category::named(*f);
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("unknown family and no such generator file: " + arg);
    Json j = Json::parse(in);
    return category_from_json(j);
}

bool group_theoretical(const Category& c) { return c.contains(fattened_crossing()); }

int need_k(const Options& o, int dflt) {
    int k = o.k >= 0 ? o.k : dflt;
    if (k < 0) throw std::invalid_argument("--k is required");
    return k;
}

std::string join_counts(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

// ---- verbs ----

int cmd_enumerate(const Options& o, std::ostream& out) {
    if (o.points.size() != 2) throw std::invalid_argument("--points k l is required");
    Category c = load_category(o.category);
    const auto& ps = c.enumerate(o.points[0], o.points[1]);
    if (o.format == "json") {
        Json a = Json::array();
        for (const auto& p : ps) a.push_back(to_json(p));
        out << a.dump(2) << '\n';
    } else if (o.format == "csv") {
        out << "index,partition\n";
        for (std::size_t i = 0; i < ps.size(); ++i) out << i << ",\"" << to_text(ps[i]) << "\"\n";
    } else {
        for (const auto& p : ps) out << to_text(p) << '\n';
    }
    return 0;
}

int cmd_gram(const Options& o, std::ostream& out) {
    Category c = load_category(o.category);
    const int k = need_k(o, -1);
    GramMatrix g = gram(c, k);
    if (!o.det) {
        if (o.format == "json") {
            Json b = Json::array();
            for (const auto& p : g.basis) b.push_back(to_json(p));
            out << Json{{"basis", b}, {"exponents", g.exponents}}.dump(2) << '\n';
        } else if (o.format == "csv") {
            out << "row,col,exponent\n";
            for (std::size_t i = 0; i < g.exponents.size(); ++i)
                for (std::size_t j = 0; j < g.exponents.size(); ++j) out << i << ',' << j << ',' << g.exponents[i][j] << '\n';
        } else {
            for (const auto& row : g.exponents) {
                for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << "t^" << row[j];
                out << '\n';
            }
        }
        return 0;
    }
    IntPoly d = det_monomial(g.exponents);
    if (g.basis.size() <= 8 && IntPoly::from_laurent(det_bareiss(g.entries())) != d)
        throw Failure("modular determinant disagrees with fraction-free elimination");
    if (group_theoretical(c) && IntPoly::from_laurent(omega(c, k)) != d) throw Failure("det(G) differs from the Moebius product");
    if (o.format == "json")
        out << Json{{"k", k}, {"size", g.basis.size()}, {"det", to_string(d)}}.dump(2) << '\n';
    else if (o.format == "csv")
        out << "k,size,det\n" << k << ',' << g.basis.size() << ",\"" << to_string(d) << "\"\n";
    else
        out << to_string(d) << '\n';
    return 0;
}

std::string describe_roots(const RootReport& r) {
    std::ostringstream s;
    bool first = true;
    for (const auto& e : r.rational_roots) {
        s << (first ? "" : ", ") << to_string(e.value) << "^" << e.multiplicity;
        first = false;
    }
    for (const auto& n : r.numeric_roots) {
        bool exact = false;
        for (const auto& e : r.rational_roots)
            if (n.im == 0 && e.value.get_d() == n.re) exact = true;
        if (exact) continue;
        s << (first ? "" : ", ") << "~" << format_double(n.re);
        if (n.im != 0) s << (n.im > 0 ? "+" : "-") << format_double(std::abs(n.im)) << "i";
        s << "^" << n.multiplicity;
        first = false;
    }
    return s.str();
}

int cmd_scan(const Options& o, std::ostream& out) {
    Category c = load_category(o.category);
    const int kmax = o.kmax >= 0 ? o.kmax : 5;
    auto scan = semisimplicity_scan(c, kmax);
    if (o.format == "json")
        out << to_json(scan).dump(2) << '\n';
    else if (o.format == "csv")
        write_scan_csv(out, scan);
    else
        for (const auto& e : scan)
            out << "k=" << e.k << " n=" << e.basis_size << " det=" << to_string(e.roots.poly) << "\n  roots: " << describe_roots(e.roots)
                << "\n  all_roots_in: " << e.roots.verdict << '\n';
    if (group_theoretical(c))
        for (const auto& e : scan)
            if (!e.roots.all_in_n0 || !e.roots.real_roots_rational())
                throw Failure("group-theoretical category with a root outside N0 at k=" + std::to_string(e.k));
    return 0;
}

int cmd_mobius(const Options& o, std::ostream& out) {
    Category c = load_category(o.category);
    Poset ps = Poset::of(c.enumerate(0, need_k(o, -1)));
    IntMatrix mu = mobius(ps), z = zeta_matrix(ps);
    const std::size_t n = ps.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t s = 0;
            for (std::size_t m = 0; m < n; ++m) s += mu[i][m] * z[m][j];
            if (s != (i == j ? 1 : 0)) throw Failure("mobius * zeta is not the identity");
        }
    if (o.format == "json") {
        Json el = Json::array();
        for (const auto& p : ps.elements) el.push_back(to_json(p));
        out << Json{{"elements", el}, {"mobius", mu}}.dump(2) << '\n';
    } else if (o.format == "csv") {
        out << "row,col,mu\n";
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (mu[i][j] != 0) out << i << ',' << j << ',' << mu[i][j] << '\n';
    } else {
        for (std::size_t i = 0; i < n; ++i) out << i << ": " << to_text(ps.elements[i]) << '\n';
        for (const auto& row : mu) {
            for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
            out << '\n';
        }
    }
    return 0;
}

int cmd_omega(const Options& o, std::ostream& out) {
    Category c = load_category(o.category);
    const int k = need_k(o, -1);
    LaurentPoly w = omega(c, k);
    if (w != gram_det(c, k).to_laurent()) throw Failure("omega differs from det(G)");
    if (o.format == "json")
        out << Json{{"k", k}, {"omega", to_string(w)}}.dump(2) << '\n';
    else
        out << to_string(w) << '\n';
    return 0;
}

int cmd_wscalar(const Options& o, std::ostream& out) {
    if (o.l < 0) throw std::invalid_argument("--l is required");
    std::vector<int> e;
    std::stringstream ss(o.map);
    for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty()) e.push_back(std::stoi(tok) - 1);
    LaurentPoly w = w_scalar(e, o.l);
    if (o.format == "json")
        out << Json{{"map", o.map}, {"l", o.l}, {"w", to_string(w)}}.dump(2) << '\n';
    else
        out << to_string(w) << '\n';
    return 0;
}

int cmd_projectives(const Options& o, std::ostream& out) {
    Category c = load_category(o.category);
    const int k = need_k(o, -1);
    auto proj = proj_C(c, k);
    auto sp = script_P(c, k);
    std::set<Partition> in_sp(sp.begin(), sp.end());
    if (c.is_named())
        for (const auto& p : proj)
            if (closed_form_in_script_P(c.family(), p) != (in_sp.count(p) > 0)) throw Failure("script P disagrees with the closed form at " + to_text(p));
    if (k <= 3) {
        auto via = script_P_via_ideal(c, k);
        if (via != sp) throw Failure("script P disagrees with the nu_k ideal route");
    }
    Json a = Json::array();
    if (o.format == "csv") out << "partition,through_blocks,in_script_P,group_order,class_count\n";
    for (const auto& p : proj) {
        ProjectivePartition pp = make_projective(p);
        PermGroup g = group_S(c, pp);
        bool in = in_sp.count(p) > 0;
        if (o.format == "json")
            a.push_back({{"partition", to_json(p)}, {"through_blocks", pp.T}, {"in_script_P", in}, {"group_order", g.order()}, {"class_count", g.class_count()}});
        else if (o.format == "csv")
            out << '"' << to_text(p) << "\"," << pp.T << ',' << (in ? 1 : 0) << ',' << g.order() << ',' << g.class_count() << '\n';
        else
            out << to_text(p) << "  T=" << pp.T << (in ? "  in P" : "") << "  |S|=" << g.order() << '\n';
    }
    if (o.format == "json") out << a.dump(2) << '\n';
    return 0;
}

Rational parse_t(const Options& o, const char* dflt) { return parse_rational(o.t.empty() ? dflt : o.t); }

int cmd_census(const Options& o, std::ostream& out) {
    Category c = load_category(o.category);
    auto cen = census(c, o.kmax >= 0 ? o.kmax : 4, parse_t(o, "1"));
    if (c.is_named())
        for (const auto& d : cen)
            for (const auto& p : proj_C(c, d.k)) {
                bool in = false;
                for (const auto& cl : d.classes)
                    for (const auto& m : cl.members) in = in || m == p;
                if (in != closed_form_in_script_P(c.family(), p)) throw Failure("census support disagrees with the closed form");
            }
    if (o.format == "json")
        out << to_json(cen).dump(2) << '\n';
    else if (o.format == "csv")
        write_census_csv(out, cen);
    else
        for (const auto& d : cen) {
            out << "k=" << d.k << " new_indecomposables=" << d.new_indecomposables << '\n';
            for (const auto& cl : d.classes)
                out << "  " << to_text(cl.representative) << "  T=" << cl.T << " |S|=" << cl.group_order << " classes=" << cl.class_count << '\n';
        }
    return 0;
}

int cmd_surjective(const Options& o, std::ostream& out) {
    Category c = load_category(o.category);
    auto cen = census(c, o.kmax >= 0 ? o.kmax : 4);
    auto sur = surjective_census(c, cen);
    bool ok = true;
    Json a = Json::array();
    if (o.format == "csv") out << "k,sur,Q,Q_classes,P_classes,bijection,groups_match\n";
    for (const auto& d : sur) {
        ok = ok && d.bijection && d.groups_match;
        if (o.format == "json")
            a.push_back({{"k", d.k}, {"sur", d.sur_size}, {"Q", d.q_size}, {"Q_classes", d.q_classes}, {"P_classes", d.p_classes},
                         {"bijection", d.bijection}, {"groups_match", d.groups_match}});
        else if (o.format == "csv")
            out << d.k << ',' << d.sur_size << ',' << d.q_size << ',' << d.q_classes << ',' << d.p_classes << ',' << d.bijection << ','
                << d.groups_match << '\n';
        else
            out << "k=" << d.k << " |Sur|=" << d.sur_size << " |Q|=" << d.q_size << " Q/~=" << d.q_classes << " P/~=" << d.p_classes
                << " bijection=" << (d.bijection ? "yes" : "no") << " groups=" << (d.groups_match ? "equal" : "differ") << '\n';
    }
    if (o.format == "json") out << a.dump(2) << '\n';
    if (!ok) throw Failure("surjective description disagrees with the projective census");
    return 0;
}

int cmd_jw(const Options& o, std::ostream& out) {
    const int k = need_k(o, -1);
    const JWIdempotent& jw = jones_wenzl(k);
    JWReport rep = check_jones_wenzl(jw);
    if (!rep.idempotent || !rep.cap_kill || !rep.cup_kill || !rep.unit_identity) throw Failure("Jones-Wenzl checks failed");
    if (!o.t.empty()) {
        RationalMorphism e = evaluate_jw(k, parse_rational(o.t));
        if (o.format == "json") {
            Json terms = Json::array();
            for (const auto& [p, c] : e.terms()) terms.push_back({{"partition", to_json(p)}, {"coeff", to_string(c)}});
            out << Json{{"k", k}, {"t", o.t}, {"terms", terms}}.dump(2) << '\n';
        } else {
            for (const auto& [p, c] : e.terms()) out << to_string(c) << "  " << to_text(p) << '\n';
        }
        return 0;
    }
    if (o.format == "json") {
        Json ladder = Json::array(), terms = Json::array();
        for (const auto& a : jw.ladder) ladder.push_back(to_string(a));
        for (const auto& [p, c] : jw.e.terms()) terms.push_back({{"partition", to_json(p)}, {"coeff", to_string(c)}});
        out << Json{{"k", k}, {"ladder", ladder}, {"terms", terms}, {"trace", to_string(rep.trace)}}.dump(2) << '\n';
    } else if (o.format == "csv") {
        out << "partition,coeff\n";
        for (const auto& [p, c] : jw.e.terms()) out << '"' << to_text(p) << "\",\"" << to_string(c) << "\"\n";
    } else {
        for (std::size_t i = 0; i < jw.ladder.size(); ++i) out << "a_" << i + 1 << " = " << to_string(jw.ladder[i]) << '\n';
        for (const auto& [p, c] : jw.e.terms()) out << to_string(c) << "  " << to_text(p) << '\n';
        out << "trace = " << to_string(rep.trace) << '\n';
    }
    return 0;
}

const char* yes(bool b) { return b ? "ok" : "FAILED"; }

int cmd_fatten(const Options& o, std::ostream& out) {
    if (!o.partition.empty()) {
        Partition thin = parse_text(o.partition);
        if (o.points.size() == 2) thin = Partition::from_blocks(o.points[0], o.points[1], thin.blocks());
        Partition fat = fatten(thin);
        if (unfatten(fat) != thin) throw Failure("fattening does not invert");
        std::string a = to_string(fatten_scalar(thin), "s");
        if (o.format == "json")
            out << Json{{"thin", to_json(thin)}, {"fat", to_json(fat)}, {"scalar", a}}.dump(2) << '\n';
        else
            out << to_text(fat) << "\na(p) = " << a << '\n';
        return 0;
    }
    FatteningReport r = check_fattening(o.bound, 5, o.seed);
    if (o.format == "json")
        out << Json{{"bijective", r.bijective},
                    {"compose_symbolic", r.compose_symbolic},
                    {"compose_numeric", r.compose_numeric},
                    {"tensor_symbolic", r.tensor_symbolic},
                    {"tensor_numeric", r.tensor_numeric},
                    {"compose_pairs", r.compose_pairs},
                    {"tensor_pairs", r.tensor_pairs}}
                   .dump(2)
            << '\n';
    else
        out << "bijection: " << yes(r.bijective) << "\ncompose: " << yes(r.compose_symbolic && r.compose_numeric) << " over " << r.compose_pairs
            << " pairs\ntensor: " << yes(r.tensor_symbolic && r.tensor_numeric) << " over " << r.tensor_pairs << " pairs\n";
    if (!r.ok()) throw Failure("fattening checks failed");
    return 0;
}

int cmd_negligible(const Options& o, std::ostream& out) {
    if (o.t.empty()) throw std::invalid_argument("--t is required");
    Rational t0 = parse_rational(o.t);
    Category c = load_category(o.category);
    bool neg;
    if (o.jw >= 0) {
        neg = is_negligible(c, evaluate_jw(o.jw, t0), t0);
    } else if (!o.morphism.empty()) {
        std::ifstream in(o.morphism);
        if (!in) throw std::invalid_argument("cannot read " + o.morphism);
        neg = is_negligible(c, morphism_from_json(Json::parse(in)), t0);
    } else if (!o.partition.empty()) {
        Partition p = parse_text(o.partition);
        if (o.points.size() == 2) p = Partition::from_blocks(o.points[0], o.points[1], p.blocks());
        Morphism f = o.x ? x_basis(c, p) : Morphism::basis(p);
        neg = is_negligible(c, f, t0);
    } else {
        throw std::invalid_argument("one of --partition, --jw, --morphism is required");
    }
    if (o.format == "json")
        out << Json{{"t", o.t}, {"negligible", neg}}.dump(2) << '\n';
    else
        out << (neg ? "negligible" : "not negligible") << '\n';
    return 0;
}

struct TableRow {
    Family f;
    const char* rep;
    int scan_k;
};

// Every candidate set holding all roots seen; Z is dropped when N0 holds.
std::string non_semisimple_label(const std::vector<ScanEntry>& scan) {
    bool n0 = true, z = true, c2 = true, c4 = true;
    for (const auto& e : scan) {
        n0 = n0 && e.roots.all_in_n0;
        z = z && e.roots.all_in_z;
        c2 = c2 && e.roots.all_in_2cos;
        c4 = c4 && e.roots.all_in_4cos2;
    }
    std::vector<std::string> hits;
    if (n0) hits.push_back("t in N0");
    if (z && !n0) hits.push_back("t in Z");
    if (c2) hits.push_back("t = 2cos(j pi/l)");
    if (c4) hits.push_back("t = 4cos(j pi/l)^2 or 0");
    if (hits.empty()) return "mixed";
    std::string r;
    for (std::size_t i = 0; i < hits.size(); ++i) r += (i ? "; " : "") + hits[i];
    return r;
}

std::string indecomposable_label(Family f, const std::vector<std::size_t>& counts) {
    auto matches = [&](const std::function<std::size_t(int)>& seq) {
        for (std::size_t k = 0; k < counts.size(); ++k)
            if (counts[k] != seq(static_cast<int>(k))) return false;
        return true;
    };
    if (matches([](int) { return std::size_t(1); })) return f == Family::NC2 ? "Jones-Wenzl idempotents" : "modified Jones-Wenzl idempotents";
    if (matches([](int k) { return partition_count(k); })) return "Young diagrams of arbitrary size";
    if (matches([](int k) {
            std::size_t s = 0;
            for (int k2 = 0; 2 * k2 <= k; ++k2) s += partition_count(k - 2 * k2) * partition_count(k2);
            return s;
        }))
        return "bipartitions of arbitrary size";
    if (matches([](int k) {
            std::size_t a = 1, b = 1;
            for (int i = 1; i <= k; ++i) {
                std::size_t c = i == 1 ? 1 : a + b;
                a = b;
                b = c;
            }
            return k == 0 ? std::size_t(1) : b;
        }))
        return "finite binary sequences of arbitrary length";
    return "see counts";
}

int cmd_table(const Options& o, std::ostream& out) {
    const std::vector<TableRow> rows = {{Family::P, "Rep(S_t)", 5},      {Family::P2, "Rep(O_t)", 6},   {Family::P_even, "Rep(H_t)", 6},
                                        {Family::NC, "Rep(S_t^+)", 6}, {Family::NC2, "Rep(O_t^+)", 10}, {Family::NC_even, "Rep(H_t^+)", 6}};
    const int kmax = o.kmax >= 0 ? o.kmax : 5;
    Json a = Json::array();
    if (o.format == "csv") out << "category,rep,non_semisimple,indecomposables,counts\n";
    for (const auto& r : rows) {
        Category c = Category::named(r.f);
        auto scan = semisimplicity_scan(c, o.k >= 0 ? o.k : r.scan_k);
        auto cen = census(c, kmax);
        std::vector<std::size_t> counts;
        for (const auto& d : cen) counts.push_back(d.new_indecomposables);
        std::string ns = non_semisimple_label(scan), ind = indecomposable_label(r.f, counts);
        if (o.format == "json")
            a.push_back({{"category", family_name(r.f)}, {"rep", r.rep}, {"non_semisimple", ns}, {"indecomposables", ind}, {"counts", counts}});
        else if (o.format == "csv")
            out << family_name(r.f) << ',' << r.rep << ",\"" << ns << "\",\"" << ind << "\",\"" << join_counts(counts) << "\"\n";
        else
            out << family_name(r.f) << " | " << r.rep << " | " << ns << " | " << ind << " | " << join_counts(counts) << '\n';
    }
    if (o.format == "json") out << a.dump(2) << '\n';
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    if (const char* th = std::getenv("PARTCAT_THREADS")) {
        int n = std::atoi(th);
        if (n > 0) omp_set_num_threads(n);
    }
    CLI::App app{"partcat: interpolating partition categories"};
    app.require_subcommand(1);
    Options o;
    std::map<std::string, std::function<int(const Options&, std::ostream&)>> verbs = {
        {"enumerate", cmd_enumerate}, {"gram", cmd_gram},       {"scan", cmd_scan},       {"mobius", cmd_mobius},
        {"omega", cmd_omega},         {"wscalar", cmd_wscalar}, {"projectives", cmd_projectives}, {"census", cmd_census},
        {"surjective-check", cmd_surjective}, {"jw", cmd_jw},   {"fatten", cmd_fatten},   {"negligible", cmd_negligible},
        {"table", cmd_table}};
    const std::map<std::string, std::string> about = {
        {"enumerate", "list C(k,l)"},
        {"gram", "Gram matrix of C(0,k), or its determinant with --det"},
        {"scan", "determinant roots up to --kmax"},
        {"mobius", "Moebius function of the refinement lattice on C(0,k)"},
        {"omega", "product formula for the Gram determinant"},
        {"wscalar", "scalar w of a map on --l points (--map)"},
        {"projectives", "projective partitions and the set script P"},
        {"census", "new indecomposables per degree"},
        {"surjective-check", "compare the census with the surjective description"},
        {"jw", "Jones-Wenzl idempotent"},
        {"fatten", "fattening of thin noncrossing pairings"},
        {"negligible", "test whether a morphism is negligible at --t"},
        {"table", "summary table over the named families"}};
    for (const auto& [name, fn] : verbs) {
        CLI::App* sub = app.add_subcommand(name, about.at(name));
        sub->add_option("--category", o.category, "family name or generator JSON file");
        sub->add_option("--k", o.k);
        sub->add_option("--kmax", o.kmax);
        sub->add_option("--points", o.points)->expected(2);
        sub->add_option("--t", o.t, "exact rational p/q");
        sub->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--bound", o.bound);
        sub->add_option("--seed", o.seed);
        sub->add_flag("--det", o.det);
        sub->add_option("--partition", o.partition, "text notation, e.g. \"1 2' | 2 1'\"");
        sub->add_flag("--x", o.x, "use x_p instead of p");
        sub->add_option("--jw", o.jw);
        sub->add_option("--morphism", o.morphism);
        sub->add_option("--map", o.map, "comma separated 1-based images");
        sub->add_option("--l", o.l);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o1, o2;
        int rc = app.exit(e, o1, o2);
        out << o1.str();
        err << o2.str();
        return rc == 0 ? 0 : 2;
    }
    try {
        for (const auto& [name, fn] : verbs)
            if (app.got_subcommand(name)) return fn(o, out);
    } catch (const Failure& e) {
        err << "cross-check failed: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace partcat::cli
