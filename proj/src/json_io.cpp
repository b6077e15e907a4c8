#include "partcat/json_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace partcat {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x == 0 ? 0.0 : x);
    return buf;
}

Json to_json(const Partition& p) {
    Json j;
    j["upper"] = p.upper();
    j["lower"] = p.lower();
    j["blocks"] = p.blocks();
    return j;
}

Partition partition_from_json(const Json& j) {
    return Partition::from_blocks(j.at("upper").get<int>(), j.at("lower").get<int>(),
                                  j.at("blocks").get<std::vector<std::vector<int>>>());
}

Json to_json(const Category& c) {
    Json j;
    if (c.is_named()) {
        j["named"] = family_name(c.family());
        return j;
    }
    Json gens = Json::array();
    for (const auto& g : c.generators()) gens.push_back(to_json(g));
    j["generated"] = {{"generators", gens}, {"bound", c.bound()}};
    return j;
}

Category category_from_json(const Json& j) {
    if (j.contains("named")) {
        auto f = parse_family(j["named"].get<std::string>());
        if (!f) throw std::invalid_argument("unknown family " + j["named"].get<std::string>());
        return Category::named(*f);
    }
    const Json& g = j.at("generated");
    std::vector<Partition> gens;
    for (const auto& x : g.at("generators")) gens.push_back(partition_from_json(x));
    return Category::generated(std::move(gens), g.at("bound").get<int>());
}

Json to_json(const LaurentPoly& p) {
    Json j = Json::object();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) j[std::to_string(it->first)] = to_string(it->second);
    return j;
}

LaurentPoly laurent_from_json(const Json& j) {
    LaurentPoly p;
    for (const auto& [e, v] : j.items()) p.add_term(std::stoi(e), parse_rational(v.get<std::string>()));
    return p;
}

Json to_json(const Morphism& f) {
    Json terms = Json::array();
    for (const auto& [p, c] : f.terms()) terms.push_back({{"partition", to_json(p)}, {"coeff", to_json(c)}});
    return {{"source", f.source()}, {"target", f.target()}, {"terms", terms}};
}

Morphism morphism_from_json(const Json& j) {
    Morphism f(j.at("source").get<int>(), j.at("target").get<int>());
    for (const auto& t : j.at("terms")) f.add(partition_from_json(t.at("partition")), laurent_from_json(t.at("coeff")));
    return f;
}

Json to_json(const RootReport& r) {
    Json coeffs = Json::array();
    for (const auto& c : r.poly.coeffs()) coeffs.push_back(c.get_str());
    Json exact = Json::array();
    for (const auto& e : r.rational_roots) exact.push_back({{"value", to_string(e.value)}, {"multiplicity", e.multiplicity}});
    Json num = Json::array();
    for (const auto& n : r.numeric_roots)
        num.push_back({{"re", format_double(n.re)},
                       {"im", format_double(n.im)},
                       {"multiplicity", n.multiplicity},
                       {"in_N0", n.in_n0},
                       {"in_2cos", n.in_2cos},
                       {"in_4cos2", n.in_4cos2}});
    return {{"det", to_string(r.poly)},
            {"coefficients", coeffs},
            {"exact_roots", exact},
            {"numeric_roots", num},
            {"distinct_real_roots", r.distinct_real_roots},
            {"distinct_rational_roots", r.distinct_rational_roots},
            {"all_roots_in", r.verdict}};
}

Json to_json(const std::vector<ScanEntry>& scan) {
    Json a = Json::array();
    for (const auto& e : scan) {
        Json j = to_json(e.roots);
        Json out = {{"k", e.k}, {"basis_size", e.basis_size}};
        for (auto& [key, v] : j.items()) out[key] = v;
        a.push_back(out);
    }
    return a;
}

Json to_json(const std::vector<CensusDegree>& census) {
    Json a = Json::array();
    for (const auto& d : census) {
        Json cls = Json::array();
        for (const auto& c : d.classes)
            cls.push_back({{"representative", to_json(c.representative)},
                           {"through_blocks", c.T},
                           {"group_order", c.group_order},
                           {"class_count", c.class_count}});
        a.push_back({{"k", d.k}, {"script_P_size", d.script_p_size}, {"new_indecomposables", d.new_indecomposables}, {"classes", cls}});
    }
    return a;
}

void write_scan_csv(std::ostream& os, const std::vector<ScanEntry>& scan) {
    os << "k,basis,degree,root_re,root_im,multiplicity,exact,verdict\n";
    for (const auto& e : scan) {
        for (std::size_t i = 0; i < e.roots.numeric_roots.size(); ++i) {
            const auto& n = e.roots.numeric_roots[i];
            std::string ex;
            for (const auto& r : e.roots.rational_roots)
                if (n.im == 0 && r.value.get_d() == n.re) ex = to_string(r.value);
            os << e.k << ',' << e.basis_size << ',' << e.roots.poly.degree() << ',' << format_double(n.re) << ','
               << format_double(n.im) << ',' << n.multiplicity << ',' << ex << ',' << e.roots.verdict << '\n';
        }
        if (e.roots.numeric_roots.empty())
            os << e.k << ',' << e.basis_size << ',' << e.roots.poly.degree() << ",,,,," << e.roots.verdict << '\n';
    }
}

void write_census_csv(std::ostream& os, const std::vector<CensusDegree>& census) {
    os << "k,representative,through_blocks,group_order,class_count\n";
    for (const auto& d : census)
        for (const auto& c : d.classes)
            os << d.k << ",\"" << to_text(c.representative) << "\"," << c.T << ',' << c.group_order << ',' << c.class_count << '\n';
}

}  // namespace partcat
