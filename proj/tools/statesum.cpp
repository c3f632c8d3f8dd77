// Command-line front end for the statesum library.

#include "statesum/model_io.hpp"
#include "statesum/spin_structure.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>

using namespace statesum;

namespace {

std::vector<int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    std::vector<int> out;
    auto whole = [](const std::string& t) {
        std::size_t used = 0;
        int v = std::stoi(t, &used);
        if (used != t.size()) throw std::invalid_argument("trailing characters");
        return v;
    };
    try {
        if (dots == std::string::npos) {
            out.push_back(whole(s));
        } else {
            int a = whole(s.substr(0, dots)), b = whole(s.substr(dots + 2));
            if (b < a) throw std::invalid_argument("empty range");
            for (int g = a; g <= b; ++g) out.push_back(g);
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range '" + s + "', expected N or A..B");
    }
    return out;
}

// Rows run concurrently; the table keeps job order.
struct RowJob {
    std::string model, surface, spin;
    std::function<Scalar()> run;
};

void run_rows(ResultTable& t, std::vector<RowJob>& jobs) {
    std::vector<std::future<Scalar>> out;
    for (auto& j : jobs) out.push_back(std::async(std::launch::async, j.run));
    for (std::size_t i = 0; i < jobs.size(); ++i) t.add(jobs[i].model, jobs[i].surface, jobs[i].spin, out[i].get());
}

std::vector<int> parse_bits(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item != "0" && item != "1") throw std::invalid_argument("bit list must be comma-separated 0/1");
        out.push_back(item == "1");
    }
    return out;
}

std::vector<Parity> parities(const std::string& p) {
    if (p == "both") return {Parity::Even, Parity::Odd};
    return {parse_parity(p)};
}

ModelFile load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open model file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str());
}

template <class Map>
const auto& pick(const Map& m, const std::string& name, const std::string& what) {
    auto it = m.find(name);
    if (it == m.end()) throw std::invalid_argument("no " + what + " named '" + name + "' in the model");
    return it->second;
}

void emit(const ResultTable& t, const std::string& format) {
    std::cout << (format == "json" ? to_json(t) : to_csv(t));
}

int report(const std::string& label, const CheckReport& r) {
    if (r.ok()) {
        std::cout << label << ": ok\n";
        return 0;
    }
    for (const auto& f : r.failures) std::cout << label << ": FAIL " << f << "\n";
    return 1;
}

int verify_crossing(const std::string& name, const CrossingData& X) {
    auto rep = verify_crossing_axioms(X);
    int bad = 0;
    for (const auto& ax : axiom_names()) {
        const auto& f = rep.failures.at(ax);
        std::cout << "crossing " << name << " " << ax << ": " << (f.empty() ? "ok" : "FAIL " + f.front()) << "\n";
        bad |= !f.empty();
    }
    std::cout << "crossing " << name << " curl-free: " << (rep.curl_free ? "yes" : "no") << "\n";
    if (!bad) bad |= report("crossing " + name + " curl properties", verify_curl_properties(X));
    return bad;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact state sum invariants of triangulated and spin surfaces"};
    app.require_subcommand(1);
    std::string model, frob, invo, cross, bimod, genus = "1", format = "csv", parity = "both", curls, q;
    long long cap = default_cap();
    int cyclic = 2, loop_curls = 0;
    std::string mode = "ansatz", R = "1";

    auto add_common = [&](CLI::App* s) {
        s->add_option("--model", model, "model file (JSON)")->required();
        s->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        s->add_option("--cap", cap, "contraction budget");
    };

    auto* evaluate_cmd = app.add_subcommand("evaluate", "triangulated state sum on standard surfaces");
    add_common(evaluate_cmd);
    evaluate_cmd->add_option("--frobenius", frob)->required();
    evaluate_cmd->add_option("--involution", invo, "unoriented model; genus then counts crosscaps");
    evaluate_cmd->add_option("--genus", genus, "N or A..B");

    auto* closed_cmd = app.add_subcommand("closed", "closed-form genus invariant");
    add_common(closed_cmd);
    closed_cmd->add_option("--frobenius", frob)->required();
    closed_cmd->add_option("--genus", genus);

    auto* km_cmd = app.add_subcommand("km", "unoriented invariant of the nonorientable surface with k crosscaps");
    add_common(km_cmd);
    km_cmd->add_option("--involution", invo)->required();
    km_cmd->add_option("--genus", genus, "crosscap range");

    auto* spin_cmd = app.add_subcommand("spin", "spin models");
    spin_cmd->require_subcommand(1);
    auto* spin_verify = spin_cmd->add_subcommand("verify", "crossing axioms");
    add_common(spin_verify);
    spin_verify->add_option("--crossing", cross, "default: every crossing");
    auto* spin_inv = spin_cmd->add_subcommand("invariant", "spin partition function");
    add_common(spin_inv);
    spin_inv->add_option("--crossing", cross)->required();
    spin_inv->add_option("--genus", genus);
    spin_inv->add_option("--parity", parity)->check(CLI::IsMember({"even", "odd", "both"}));
    spin_inv->add_option("--curls", curls, "2g comma-separated curl flags; overrides genus and parity");
    auto* spin_search = spin_cmd->add_subcommand("search", "crossings on C Z_n");
    spin_search->add_option("--cyclic", cyclic)->required();
    spin_search->add_option("--mode", mode)->check(CLI::IsMember({"ansatz", "full"}));
    spin_search->add_option("--R", R);
    spin_search->add_option("--cap", cap);
    spin_search->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* arf_cmd = app.add_subcommand("arf", "Arf invariant of a quadratic form");
    arf_cmd->add_option("--genus", genus)->required();
    arf_cmd->add_option("--q", q, "2g comma-separated values")->required();

    auto* defect_cmd = app.add_subcommand("defect", "defect models");
    defect_cmd->require_subcommand(1);
    auto* defect_inv = defect_cmd->add_subcommand("invariant", "generating-loop defect invariant");
    add_common(defect_inv);
    defect_inv->add_option("--bimodule", bimod)->required();
    defect_inv->add_option("--crossing", cross)->required();
    defect_inv->add_option("--genus", genus);
    defect_inv->add_option("--parity", parity)->check(CLI::IsMember({"even", "odd", "both"}));
    defect_inv->add_option("--curls", loop_curls, "curls on the defect loop (0 or 1)");

    auto* verify_cmd = app.add_subcommand("verify", "check every entity of a model file");
    add_common(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*evaluate_cmd) {
            auto m = load(model);
            const auto& F = pick(m.frobenius, frob, "frobenius");
            ResultTable t;
            EvalOptions opt;
            opt.cap = cap;
            const Involution* I = nullptr;
            if (!invo.empty()) {
                I = &pick(m.involutions, invo, "involution");
                if (I->F != F) throw std::invalid_argument("involution uses a different Frobenius entry");
            }
            std::vector<RowJob> jobs;
            for (int g : parse_range(genus)) {
                if (!I) {
                    jobs.push_back({frob, "Sigma_" + std::to_string(g), "-",
                                    [&, g] { return evaluate(genus_surface(g), *F, nullptr, opt).value; }});
                } else {
                    jobs.push_back({invo, "N_" + std::to_string(g), "-",
                                    [&, g] { return evaluate(nonorientable_surface(g), *F, &I->S, opt).value; }});
                }
            }
            run_rows(t, jobs);
            emit(t, format);
        } else if (*closed_cmd) {
            auto m = load(model);
            const auto& F = pick(m.frobenius, frob, "frobenius");
            ResultTable t;
            for (int g : parse_range(genus)) t.add(frob, "Sigma_" + std::to_string(g), "-", closed_genus_invariant(*F, g));
            emit(t, format);
        } else if (*km_cmd) {
            auto m = load(model);
            const auto& I = pick(m.involutions, invo, "involution");
            ResultTable t;
            for (int k : parse_range(genus)) t.add(invo, "N_" + std::to_string(k), "-", nonorientable_invariant(I, k));
            emit(t, format);
        } else if (*spin_verify) {
            auto m = load(model);
            int bad = 0;
            if (!cross.empty()) {
                bad = verify_crossing(cross, pick(m.crossings, cross, "crossing"));
            } else {
                for (const auto& [name, X] : m.crossings) bad |= verify_crossing(name, X);
            }
            return bad ? 1 : 0;
        } else if (*spin_inv) {
            auto m = load(model);
            const auto& X = pick(m.crossings, cross, "crossing");
            ResultTable t;
            if (!curls.empty()) {
                auto flags = parse_bits(curls);
                std::string label = "curls=" + curls;
                t.add(cross, "Sigma_" + std::to_string(flags.size() / 2),
                      parity_name(immersion_to_parity(flags)) + " (" + label + ")", spin_invariant_from_curls(X, flags));
            } else {
                std::vector<RowJob> jobs;
                for (int g : parse_range(genus))
                    for (Parity s : parities(parity))
                        jobs.push_back({cross, "Sigma_" + std::to_string(g), parity_name(s),
                                        [&, g, s] { return spin_invariant(X, g, s); }});
                run_rows(t, jobs);
            }
            emit(t, format);
        } else if (*spin_search) {
            auto res = crossing_search_cyclic(cyclic, mode == "full" ? SearchMode::Full : SearchMode::Ansatz,
                                              Scalar::parse(R), cap);
            if (format == "json") {
                Json a = Json::array();
                for (const auto& e : res) {
                    Json row{{"crossing", e.description},
                             {"eta", detail::vec_json(e.eta)},
                             {"chi", detail::vec_json(e.chi)},
                             {"distinguishes_parity", e.distinguishes}};
                    for (int g = 0; g < 3; ++g) {
                        row["even"].push_back(e.even[g].str());
                        row["odd"].push_back(e.odd[g].str());
                    }
                    a.push_back(row);
                }
                std::cout << a.dump(2) << "\n";
            } else {
                std::cout << "crossing,distinguishes_parity,Z_even(g=1..3),Z_odd(g=1..3)\n";
                for (const auto& e : res) {
                    std::string ev, od;
                    for (int g = 0; g < 3; ++g) {
                        ev += (g ? " " : "") + e.even[g].str();
                        od += (g ? " " : "") + e.odd[g].str();
                    }
                    std::cout << csv_field(e.description) << ',' << (e.distinguishes ? "yes" : "no") << ','
                              << csv_field(ev) << ',' << csv_field(od) << "\n";
                }
            }
        } else if (*arf_cmd) {
            auto gs = parse_range(genus);
            if (gs.size() != 1) throw std::invalid_argument("arf takes a single genus");
            QuadraticForm form(gs[0], parse_bits(q));
            int a = arf(form);
            std::cout << (a == 1 ? "even" : "odd") << " " << a << "\n";
        } else if (*defect_inv) {
            auto m = load(model);
            const auto& V = pick(m.bimodules, bimod, "bimodule");
            const auto& X = pick(m.crossings, cross, "crossing");
            ResultTable t;
            std::vector<RowJob> jobs;
            for (int g : parse_range(genus))
                for (Parity s : parities(parity))
                    jobs.push_back({bimod + "/" + cross, "Sigma_" + std::to_string(g),
                                    parity_name(s) + " loop_curls=" + std::to_string(loop_curls),
                                    [&, g, s] { return generating_loop_invariant(V, X, g, s, loop_curls); }});
            run_rows(t, jobs);
            emit(t, format);
        } else if (*verify_cmd) {
            auto m = load(model);
            int bad = 0;
            for (const auto& [name, F] : m.frobenius) {
                CheckReport r = verify_frobenius_identities(*F);
                r.merge(verify_nakayama_automorphism(*F), "nakayama: ");
                r.merge(verify_separability(*F), "separability: ");
                bad |= report("frobenius " + name, r);
            }
            for (const auto& [name, I] : m.involutions) {
                CheckReport r = verify_w_identities(I);
                auto u = verify_unoriented_moves(*I.F, I.S);
                if (!u.ok()) r.fail("unoriented moves fail");
                bad |= report("involution " + name, r);
            }
            for (const auto& [name, X] : m.crossings) bad |= verify_crossing(name, X);
            for (const auto& [name, V] : m.bimodules) {
                CheckReport r = verify_bimodule_laws(V);
                r.merge(verify_pairing_laws(V), "");
                if (!spherical_defect_condition(V)) r.fail("spherical defect condition fails");
                if (sigma_v(V) * sigma_v_inverse(V) != Matrix::identity(V.dim_v)) r.fail("sigma_V o sigma_V^-1 != id");
                bad |= report("bimodule " + name, r);
            }
            return bad ? 1 : 0;
        }
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const AxiomFailure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const DefectError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
