// toric: command-line front end for the toric library.
//
// Exit codes: 0 success, 1 semantic failure (invalid fan, predicate false),
// 2 usage or parse error.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toric/toric.hpp"

namespace {

using namespace toric;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    std::string bound_text = "3";
    bool bound_given = false;
};

Int parse_int(const std::string& s, const std::string& what)
{
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() <= start || s.find_first_not_of("0123456789", start) != std::string::npos)
        throw UsageError(what + ": expected an integer, got \"" + s + "\"");
    return Int(s);
}

Int parse_bound(const Options& o)
{
    Int b = parse_int(o.bound_text, "--bound");
    if (b < 0)
        throw UsageError("--bound must be nonnegative");
    if (b > 1000)
        throw UsageError("--bound is limited to 1000");
    return b;
}

void print_json(const Json& j) { std::cout << pretty(j) << "\n"; }

std::string join(const std::vector<Int>& v, const std::string& sep = " ")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? sep : "") + v[i].str();
    return out;
}

Json ints_to_json(const std::vector<Int>& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(int_to_json(x));
    return a;
}

void print_report_text(const FanReport& r)
{
    std::cout << "valid: " << (r.valid ? "yes" : "no") << "\n"
              << "complete: " << (r.complete ? "yes" : "no") << "\n"
              << "smooth: " << (r.smooth ? "yes" : "no") << "\n";
    for (const auto& v : r.violations)
        std::cout << "violation: " << v << "\n";
}

// Loads a fan that must be valid, complete and smooth; otherwise prints the
// report and returns false.
bool load_manifold_fan(const std::string& path, const Options& o, Fan& out)
{
    out = read_fan_file(path);
    FanReport r = validate_fan(out);
    if (r.ok())
        return true;
    if (o.json) {
        Json j = fan_report_to_json(r);
        j["file"] = path;
        print_json(j);
    } else {
        std::cout << path << ": not a toric manifold fan\n";
        print_report_text(r);
    }
    return false;
}

int cmd_check(const std::string& path, const Options& o)
{
    Fan f = read_fan_file(path);
    FanReport r = validate_fan(f);
    if (o.json)
        print_json(fan_report_to_json(r));
    else
        print_report_text(r);
    return r.ok() ? 0 : 1;
}

std::string partition_label(const char* letter, const std::vector<int>& part)
{
    // c_1^2 c_2 style: parts are listed largest first
    std::string out;
    std::size_t i = 0;
    while (i < part.size()) {
        std::size_t j = i;
        while (j < part.size() && part[j] == part[i])
            ++j;
        if (!out.empty())
            out += " ";
        out += std::string(letter) + "_" + std::to_string(part[i]);
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

int cmd_cohomology(const std::string& path, const Options& o)
{
    Fan f;
    if (!load_manifold_fan(path, o, f))
        return 1;
    GradedRing R = ordinary_cohomology(f);
    Presentation pr = presentation(f);
    auto betti = betti_numbers(R);
    auto fv = underlying_complex(f).f_vector();
    auto cn = chern_numbers(f, R);
    auto pn = pontrjagin_numbers(f, R);
    if (o.json) {
        Json j;
        j["presentation"] = pr.str();
        j["generators"] = pr.names;
        Json rels = Json::array();
        for (const auto& r : pr.relations)
            rels.push_back(pr.format_polynomial(r));
        j["relations"] = rels;
        Json gens = Json::array();
        for (std::size_t i = 0; i < pr.mu_in_x.size(); ++i)
            gens.push_back(ints_to_json(pr.mu_in_x[i]));
        j["divisor_classes"] = gens;
        j["betti"] = ints_to_json(betti);
        j["f_vector"] = ints_to_json(fv);
        Json c = Json::array();
        for (const auto& [part, v] : cn)
            c.push_back({{"monomial", partition_label("c", part)}, {"partition", part}, {"value", int_to_json(v)}});
        j["chern_numbers"] = c;
        Json p = Json::array();
        for (const auto& [part, v] : pn)
            p.push_back({{"monomial", partition_label("p", part)}, {"partition", part}, {"value", int_to_json(v)}});
        j["pontrjagin_numbers"] = p;
        print_json(j);
        return 0;
    }
    std::cout << "presentation: " << pr.str() << "\n";
    std::cout << "betti: " << join(betti) << "\n";
    std::cout << "f-vector: " << join(fv) << "\n";
    std::cout << "chern numbers:\n";
    for (const auto& [part, v] : cn)
        std::cout << "  int " << partition_label("c", part) << " = " << v.str() << "\n";
    std::cout << "pontrjagin numbers:";
    if (pn.empty())
        std::cout << " none";
    std::cout << "\n";
    for (const auto& [part, v] : pn)
        std::cout << "  int " << partition_label("p", part) << " = " << v.str() << "\n";
    return 0;
}

std::optional<CorpusEntry> corpus_lookup(const std::string& id)
{
    for (auto& e : corpus())
        if (e.id == id)
            return e;
    return std::nullopt;
}

int cmd_classify(const std::vector<std::string>& args, const Options& o)
{
    Int bound = parse_bound(o);
    std::vector<std::string> ids;
    std::vector<Fan> fans;
    for (const auto& a : args) {
        if (a == "example-4-3" && !std::filesystem::exists(a)) {
            auto t = example_4_3_triple();
            for (std::size_t i = 0; i < t.size(); ++i) {
                ids.push_back("example_4_3_" + std::to_string(i + 1));
                fans.push_back(t[i]);
            }
            continue;
        }
        if (!std::filesystem::exists(a)) {
            if (auto e = corpus_lookup(a)) {
                ids.push_back(e->id);
                fans.push_back(e->fan);
                continue;
            }
        }
        Fan f;
        if (!load_manifold_fan(a, o, f))
            return 1;
        ids.push_back(a);
        fans.push_back(f);
    }
    ClassificationReport rep = classify_family(ids, fans, bound);
    if (o.json) {
        print_json(classification_to_json(rep));
        return 0;
    }
    auto show = [&](const char* title, const std::vector<std::vector<std::size_t>>& parts) {
        std::cout << title << " (" << parts.size() << "):\n";
        for (const auto& p : parts) {
            std::cout << "  {";
            for (std::size_t i = 0; i < p.size(); ++i)
                std::cout << (i ? ", " : "") << rep.members[p[i]];
            std::cout << "}\n";
        }
    };
    std::cout << "ring search bound: " << rep.search_bound.str() << " (ring classes are \"isomorphic up to bound\")\n";
    show("fan isomorphism classes", rep.fan_iso_classes);
    show("complex isomorphism classes", rep.complex_iso_classes);
    show("ring isomorphism classes", rep.ring_iso_classes);
    std::cout << "ring-isomorphic pairs:\n";
    if (rep.ring_pairs.empty())
        std::cout << "  none found up to bound\n";
    for (const auto& p : rep.ring_pairs)
        std::cout << "  " << rep.members[p.first] << " ~ " << rep.members[p.second] << ": " << p.maps_found
                  << " maps, witness " << p.witness->matrix.str() << ", preserve p: " << p.pontrjagin_status()
                  << ", preserve c: "
                  << (p.all_preserve_chern ? "all" : (p.some_preserve_chern ? "some" : "none found")) << "\n";
    std::cout << "rigidity witnesses:\n";
    if (rep.rigidity_witnesses.empty())
        std::cout << "  none\n";
    for (auto [a, b] : rep.rigidity_witnesses)
        std::cout << "  " << rep.members[a] << " ~ " << rep.members[b] << " (rings isomorphic, complexes not)\n";
    std::cout << "complex classes:\n";
    for (std::size_t c = 0; c < rep.complex_iso_classes.size(); ++c)
        std::cout << "  class " << (c + 1) << ": " << rep.complex_rigidity[c] << "\n";
    return 0;
}

// Twists as one vector per fiber of stages 2..h in order, or nested per stage.
BottTowerData parse_bott(const std::string& dims_text, const std::string& twists_text)
{
    BottTowerData d;
    std::stringstream ss(dims_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        Int x = parse_int(tok, "bott dimensions");
        if (x < 1 || x > 64)
            throw UsageError("bott dimensions must be between 1 and 64");
        d.stage_dims.push_back(static_cast<int>(x));
    }
    if (d.stage_dims.empty())
        throw UsageError("bott: no stage dimensions");
    d.twists.resize(d.stage_dims.size());
    if (twists_text.empty())
        return d;
    Json j;
    try {
        j = parse_json_text(twists_text, "--twists");
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
    if (!j.is_array())
        throw UsageError("--twists must be a JSON array");
    bool nested = !j.empty() && j[0].is_array() && !j[0].empty() && j[0][0].is_array();
    std::vector<IntVector> flat;
    try {
        if (nested) {
            for (const auto& stage : j)
                for (const auto& v : stage)
                    flat.push_back(vector_from_json(v, "--twists"));
        } else {
            for (const auto& v : j)
                flat.push_back(vector_from_json(v, "--twists"));
        }
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
    std::size_t pos = 0;
    for (std::size_t s = 1; s < d.stage_dims.size(); ++s)
        for (int i = 0; i < d.stage_dims[s]; ++i) {
            if (pos >= flat.size())
                throw UsageError("--twists: too few twist vectors");
            const auto& v = flat[pos++];
            if (v.size() != s)
                throw UsageError("--twists: stage " + std::to_string(s + 1) + " twist vectors must have length " +
                                 std::to_string(s));
            d.twists[s].push_back(v.entries());
        }
    if (pos != flat.size())
        throw UsageError("--twists: too many twist vectors");
    return d;
}

int cmd_construct(const std::string& kind, const std::vector<std::string>& params, const std::string& twists)
{
    auto arity = [&](std::size_t lo, std::size_t hi) {
        if (params.size() < lo || params.size() > hi)
            throw UsageError("construct " + kind + ": wrong number of parameters");
    };
    if (kind == "cpn") {
        arity(1, 1);
        Int n = parse_int(params[0], "cpn");
        if (n < 1 || n > 64)
            throw UsageError("cpn: dimension must be between 1 and 64");
        print_json(fan_to_json(projective_space(static_cast<int>(n))));
    } else if (kind == "hirzebruch") {
        arity(1, 1);
        print_json(fan_to_json(hirzebruch(parse_int(params[0], "hirzebruch"))));
    } else if (kind == "bott") {
        arity(1, 1);
        BottTowerData d = parse_bott(params[0], twists);
        print_json(fan_to_json(bott_tower(d)));
    } else if (kind == "product") {
        arity(2, 2);
        print_json(fan_to_json(product(read_fan_file(params[0]), read_fan_file(params[1]))));
    } else if (kind == "blowup") {
        arity(2, 2);
        Fan f = read_fan_file(params[0]);
        Int idx = parse_int(params[1], "blowup cone index");
        if (idx < 1 || idx > static_cast<long>(f.max_cones().size()))
            throw UsageError("blowup: cone index out of range");
        print_json(fan_to_json(stellar_subdivide(f, f.max_cones()[static_cast<std::size_t>(idx) - 1])));
    } else if (kind == "example43") {
        arity(0, 1);
        if (params.empty()) {
            Json a = Json::array();
            for (const auto& f : example_4_3_triple())
                a.push_back(fan_to_json(f));
            print_json(a);
        } else if (params[0] == "base") {
            print_json(fan_to_json(example_4_3_base()));
        } else {
            auto t = example_4_3_triple();
            Int k = parse_int(params[0], "example43");
            if (k < 1 || k > static_cast<long>(t.size()))
                throw UsageError("example43: index must be between 1 and " + std::to_string(t.size()));
            print_json(fan_to_json(t[static_cast<std::size_t>(k) - 1]));
        }
    } else {
        throw UsageError("construct: unknown kind \"" + kind + "\" (cpn, hirzebruch, bott, product, blowup, example43)");
    }
    return 0;
}

int cmd_quasitoric(const std::string& sub, const std::string& path, int n, const Options& o)
{
    Json j = read_json_file(path);
    auto load = [&]() {
        try {
            return characteristic_from_json(j);
        } catch (const ParseError& e) {
            throw ParseError(path + ": " + e.what());
        }
    };
    try {
        if (sub == "check") {
            bool ok = is_characteristic(load());
            if (o.json)
                print_json({{"characteristic", ok}});
            else
                std::cout << (ok ? "valid" : "invalid") << "\n";
            return ok ? 0 : 1;
        }
        if (sub == "realizable") {
            CharacteristicFunction c = load();
            if (!is_characteristic(c)) {
                std::cout << "invalid characteristic function\n";
                return 1;
            }
            bool ok = is_toric_realizable(c);
            if (o.json)
                print_json({{"toric", ok}});
            else
                std::cout << (ok ? "toric" : "not toric") << "\n";
            return ok ? 0 : 1;
        }
        if (sub == "enumerate") {
            if (!o.bound_given)
                throw UsageError("quasitoric enumerate requires --bound");
            if (n < 1)
                throw UsageError("quasitoric enumerate requires --n");
            SimplicialComplex s;
            try {
                s = any_complex_from_json(j);
            } catch (const ParseError& e) {
                throw ParseError(path + ": " + e.what());
            }
            OrbitReport r = enumerate_characteristic(s, n, parse_bound(o));
            if (o.json) {
                print_json(orbit_report_to_json(r));
                return 0;
            }
            std::cout << "bound: " << r.bound.str() << " (counts are within the box)\n"
                      << "valid functions: " << r.total_valid.str() << "\n"
                      << "orbits under GL(n,Z): " << r.orbits_under_gl.str() << "\n"
                      << "orbits under GL(n,Z) x Aut: " << r.orbits_under_gl_and_aut.str() << "\n"
                      << "facet signs are not quotiented\n"
                      << "representatives:\n";
            for (const auto& c : r.representatives) {
                std::cout << " ";
                for (const auto& v : c.values)
                    std::cout << " " << v.str();
                std::cout << "\n";
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    throw UsageError("quasitoric: unknown subcommand \"" + sub + "\" (check, enumerate, realizable)");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"toric: toric manifolds from fans, their cohomology and equivalences"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "emit JSON");
    auto* bound_opt = app.add_option("--bound", o.bound_text, "coefficient bound for searches (default 3)");

    std::string path;
    auto* check = app.add_subcommand("check", "validate a fan file");
    check->add_option("fan", path, "fan JSON file")->required();

    auto* coh = app.add_subcommand("cohomology", "cohomology ring and characteristic numbers");
    coh->add_option("fan", path, "fan JSON file")->required();

    std::vector<std::string> members;
    auto* classify = app.add_subcommand("classify", "compare fans by fan, complex and ring isomorphism");
    classify->add_option("fans", members, "fan files, corpus ids or example-4-3")->required();

    std::string kind;
    std::vector<std::string> params;
    std::string twists;
    auto* construct = app.add_subcommand("construct", "print a fan: cpn, hirzebruch, bott, product, blowup, example43");
    construct->add_option("kind", kind, "constructor")->required();
    construct->add_option("params", params, "constructor parameters");
    construct->add_option("--twists", twists, "bott twist vectors as JSON");

    std::string sub;
    int n = 0;
    auto* qt = app.add_subcommand("quasitoric", "characteristic functions: check, enumerate, realizable");
    qt->add_option("action", sub, "check | enumerate | realizable")->required();
    qt->add_option("file", path, "characteristic function or complex JSON")->required();
    qt->add_option("--n", n, "dimension for enumerate");

    for (auto* s : {check, coh, classify, construct, qt})
        s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    o.bound_given = bound_opt->count() > 0;

    try {
        if (*check)
            return cmd_check(path, o);
        if (*coh)
            return cmd_cohomology(path, o);
        if (*classify)
            return cmd_classify(members, o);
        if (*construct) {
            try {
                return cmd_construct(kind, params, twists);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
        if (*qt)
            return cmd_quasitoric(sub, path, n, o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
