// Command-line front end: parse arrangement specs, compute invariants,
// reproduce the n <= 6 classification table, verify subtorus containments.

#include <skewlink/report.hpp>
#include <skewlink/skewlink.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace skewlink;

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    if (out.empty()) throw ParseError("empty list", 0);
    return out;
}

// k-lists admit the symbolic entries n-1 and n-2
std::vector<int> parse_k_list(const std::string& text, int n) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "n") out.push_back(n);
        else if (tok == "n-1") out.push_back(n - 1);
        else if (tok == "n-2") out.push_back(n - 2);
        else out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw ParseError("empty list", 0);
    return out;
}

std::optional<std::vector<FreeWord>> load_basis(const std::string& path, int rank) {
    if (path.empty()) return std::nullopt;
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open basis file: " + path, 0);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_basis_lines(ss.str(), rank);
}

Report build_report(const std::string& spec_text, const std::vector<int>& ps,
                    const std::vector<int>& ks_raw, const std::string& ks_text, int threads,
                    const std::optional<std::vector<FreeWord>>& basis) {
    ArrangementSpec spec = parse_spec(spec_text);
    Resolved r = resolve(spec);
    Report rep;
    rep.spec = spec.str();
    rep.n = r.planes();
    std::vector<int> ks = ks_raw;
    if (!ks_text.empty()) ks = parse_k_list(ks_text, rep.n);
    auto norm = [](const LaurentPoly& p) { return p.is_zero() ? p : p.normalized_unit(); };
    if (!r.is_cable() && r.base_n >= 2) {
        rep.alexander = norm(alexander_poly(r, basis));
    }
    rep.link_alexander = norm(link_alexander_poly(r));
    rep.single_var = norm(single_var_poly(r));
    rep.delta = delta_invariant(r);
    for (int p : ps)
        for (int k : ks) {
            if (r.is_cable() && k != 1) {
                rep.notes.push_back("tors(p=" + std::to_string(p) + ",k=" + std::to_string(k) +
                                    ") unavailable: out of scope (cable specs use the "
                                    "link-polynomial route, k=1 only)");
                continue;
            }
            rep.tors.push_back(tors_count(r, p, k, threads));
        }
    if (spec.kind == ArrangementSpec::Kind::Horizontal) {
        try {
            auto nf = depth2_normal_form(spec.perm);
            rep.normal_form_sizes = nf.neg_sizes;
            rep.normal_form_j = nf.j_size;
            if (nf.n >= 3) {
                auto sig = sigma_lists(nf);
                rep.sigma = sig.full_str();
                rep.sigma_through_1 = sig.str(sig.through_one);
            }
        } catch (const std::invalid_argument&) {
            rep.notes.push_back("sigma unavailable: out of scope (no depth-2 normal form)");
        }
    } else if (spec.kind == ArrangementSpec::Kind::XiWord) {
        rep.notes.push_back("sigma unavailable: out of scope (not horizontal)");
    }
    return rep;
}

void print_report(const Report& rep) {
    std::cout << "spec: " << rep.spec << "\n";
    std::cout << "n: " << rep.n << "\n";
    if (rep.alexander) {
        std::cout << "alexander_poly: " << rep.alexander->str() << "\n";
        std::cout << "alexander_poly_terms: " << rep.alexander->term_count() << "\n";
    }
    if (rep.link_alexander) {
        std::cout << "link_alexander_poly: " << rep.link_alexander->str() << "\n";
        std::cout << "link_alexander_poly_terms: " << rep.link_alexander->term_count() << "\n";
    }
    std::cout << "single_var_poly: " << rep.single_var.str() << "\n";
    std::cout << "delta: " << rep.delta << "\n";
    for (auto& t : rep.tors)
        std::cout << "tors(p=" << t.p << ",k=" << t.k << "): " << t.count << "\n";
    if (rep.normal_form_sizes) {
        std::cout << "normal_form: S={";
        for (std::size_t i = 0; i < rep.normal_form_sizes->size(); ++i)
            std::cout << (i ? "," : "") << (*rep.normal_form_sizes)[i];
        std::cout << "}, |J|=" << rep.normal_form_j.value_or(0) << "\n";
    }
    if (rep.sigma) std::cout << "sigma: " << *rep.sigma << "\n";
    if (rep.sigma_through_1) std::cout << "sigma_through_1: " << *rep.sigma_through_1 << "\n";
    for (auto& [torus, ok] : rep.verifications)
        std::cout << "verify " << torus << ": " << (ok ? "true" : "false") << "\n";
    for (auto& c : rep.components) std::cout << "component: " << c << "\n";
    for (auto& nte : rep.notes) std::cout << "note: " << nte << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"invariants of complements of 2-arrangements in R^4"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for torsion grids (output-invariant)");

    std::string spec_text, p_text = "2,3", k_text, basis_path, torus_text;
    bool as_json = false, check = false;
    int verify_k = 1;
    std::string cable_params_k, cable_params_sign = "+", cable_params_r = "1";

    auto* inv = app.add_subcommand("invariants", "invariants of one arrangement");
    inv->add_option("spec", spec_text, "arrangement spec")->required();
    inv->add_option("--p", p_text, "comma list of primes (default 2,3)");
    inv->add_option("--k", k_text, "comma list of ideal indices (default 1; n-1, n-2 allowed)");
    inv->add_option("--basis", basis_path, "basis file for the displayed Alexander polynomial");
    inv->add_flag("--json", as_json, "emit JSON");

    auto* alex = app.add_subcommand("alexander", "Alexander polynomials and matrix");
    alex->add_option("spec", spec_text, "arrangement spec")->required();
    alex->add_option("--basis", basis_path, "basis file for the displayed matrix");
    alex->add_flag("--json", as_json, "emit JSON");

    auto* tab = app.add_subcommand("table1", "classification table for n <= 6");
    tab->add_flag("--check", check, "exit nonzero unless every row matches the reference data");
    tab->add_flag("--json", as_json, "emit JSON");

    auto* cab = app.add_subcommand("cable", "invariants of a cable via the polynomial route");
    std::vector<std::string> cable_tokens;
    cab->add_option("spec", spec_text, "base arrangement spec")->required();
    cab->add_option("params", cable_tokens, "cable parameters: k=<component> sign=<+|-> r=<count>");
    cab->add_option("--p", p_text, "comma list of primes");
    cab->add_option("--k", k_text, "comma list of ideal indices");
    cab->add_flag("--json", as_json, "emit JSON");

    auto* nform = app.add_subcommand("normal-form", "depth-2 normal form of a permutation");
    nform->add_option("perm", spec_text, "permutation, e.g. 214356")->required();

    auto* cnt = app.add_subcommand("count-classes", "depth <= 2 homotopy class count");
    cnt->add_option("n", verify_k, "number of planes")->required();

    auto* ver = app.add_subcommand("verify", "check containment of a subtorus in V_k");
    ver->add_option("spec", spec_text, "arrangement spec")->required();
    ver->add_option("torus", torus_text, "subtorus equations, e.g. \"t6=1 & t4=-1\"")->required();
    ver->add_option("--k", verify_k, "ideal index")->required();
    ver->add_option("--basis", basis_path, "basis file overriding the display basis");

    auto* comp = app.add_subcommand("components", "bottom-variety components (depth-2 forms)");
    comp->add_option("spec", spec_text, "arrangement spec")->required();
    comp->add_flag("--json", as_json, "emit JSON");

    CLI11_PARSE(app, argc, argv);

    if (inv->parsed()) {
        auto ps = parse_int_list(p_text);
        ArrangementSpec spec = parse_spec(spec_text);
        Resolved r = resolve(spec);
        auto basis = load_basis(basis_path, r.base_n - 1);
        Report rep = build_report(spec_text, ps, {1}, k_text, threads, basis);
        if (as_json) std::cout << rep.to_json().dump(2) << "\n";
        else print_report(rep);
        return 0;
    }
    if (alex->parsed()) {
        ArrangementSpec spec = parse_spec(spec_text);
        Resolved r = resolve(spec);
        auto basis = load_basis(basis_path, r.base_n - 1);
        Report rep = build_report(spec_text, {}, {1}, "", threads, basis);
        if (as_json) {
            auto j = rep.to_json();
            if (!r.is_cable()) {
                AlexMatrix M = alexander_matrix(r, basis);
                Json rows = Json::array();
                for (auto& row : M.entries) {
                    Json jr = Json::array();
                    for (auto& e : row) jr.push_back(e.str());
                    rows.push_back(std::move(jr));
                }
                j["alexander_matrix"] = std::move(rows);
                j["alexander_matrix_basis"] = M.basis_tag;
            }
            std::cout << j.dump(2) << "\n";
        } else {
            print_report(rep);
            if (!r.is_cable()) {
                AlexMatrix M = alexander_matrix(r, basis);
                std::cout << "alexander_matrix (basis " << M.basis_tag << "):\n";
                for (auto& row : M.entries) {
                    std::cout << "  [";
                    for (std::size_t j = 0; j < row.size(); ++j)
                        std::cout << (j ? " | " : " ") << row[j].str();
                    std::cout << " ]\n";
                }
            }
        }
        return 0;
    }
    if (tab->parsed()) {
        bool all_ok = true;
        Json jrows = Json::array();
        if (!as_json)
            std::cout << "label          n  depth  sigma(V_{n-2})"
                      << std::string(28, ' ') << "Tors_{2,1}  Tors_{3,1}\n";
        for (auto& row : table1_rows()) {
            auto res = compute_table1_row(row, threads);
            all_ok = all_ok && res.ok;
            if (as_json) {
                jrows.push_back(Json{{"label", row.label},
                                     {"spec", row.spec},
                                     {"n", row.n},
                                     {"depth", row.depth},
                                     {"sigma", res.sigma},
                                     {"tors2", res.tors2},
                                     {"tors3", res.tors3},
                                     {"ok", res.ok}});
            } else {
                std::ostringstream line;
                line.width(14);
                line.setf(std::ios::left);
                line << row.label;
                std::string depth = row.depth < 0 ? "-" : std::to_string(row.depth);
                std::string sig = res.sigma;
                if (sig.size() < 42) sig += std::string(42 - sig.size(), ' ');
                std::cout << line.str() << " " << row.n << "  " << depth << "      " << sig
                          << " " << res.tors2 << "  " << res.tors3
                          << (check ? (res.ok ? "  [ok]" : "  [MISMATCH]") : "") << "\n";
            }
        }
        if (as_json)
            std::cout << Json{{"version", kTable1Version}, {"rows", jrows}}.dump(2) << "\n";
        if (check && !all_ok) return 1;
        return 0;
    }
    if (cab->parsed()) {
        for (auto& tok : cable_tokens) {
            if (tok.rfind("k=", 0) == 0) cable_params_k = tok.substr(2);
            else if (tok.rfind("sign=", 0) == 0) cable_params_sign = tok.substr(5);
            else if (tok.rfind("r=", 0) == 0) cable_params_r = tok.substr(2);
            else throw ParseError("unknown cable parameter: " + tok, 0);
        }
        ArrangementSpec base = parse_spec(spec_text);
        int comp_k = cable_params_k.empty() ? 0 : std::stoi(cable_params_k);
        int sgn = cable_params_sign == "-" ? -1 : 1;
        int rr = std::stoi(cable_params_r);
        ArrangementSpec cable = ArrangementSpec::cable(std::move(base), comp_k, sgn, rr);
        auto ps = parse_int_list(p_text);
        Report rep = build_report(cable.str(), ps, {1}, k_text, threads, std::nullopt);
        if (as_json) std::cout << rep.to_json().dump(2) << "\n";
        else print_report(rep);
        return 0;
    }
    if (nform->parsed()) {
        auto perm = parse_permutation(spec_text);
        auto nf = depth2_normal_form(perm);
        std::cout << "S={";
        for (std::size_t i = 0; i < nf.neg_sizes.size(); ++i)
            std::cout << (i ? "," : "") << nf.neg_sizes[i];
        std::cout << "}, |J|=" << nf.j_size << "\n";
        if (nf.n >= 3) {
            auto sig = sigma_lists(nf);
            std::cout << "sigma: " << sig.full_str() << "\n";
            std::cout << "sigma_through_1: " << sig.str(sig.through_one) << "\n";
        }
        return 0;
    }
    if (cnt->parsed()) {
        std::cout << count_d2_classes(verify_k).str() << "\n";
        return 0;
    }
    if (ver->parsed()) {
        ArrangementSpec spec = parse_spec(spec_text);
        Resolved r = resolve(spec);
        auto basis = load_basis(basis_path, r.base_n - 1);
        Subtorus torus = parse_subtorus(torus_text, r.base_n);
        AlexMatrix M = alexander_matrix(r, basis);
        auto par = parametrize(torus);
        if (!par) throw ParseError("subtorus is not parametrizable", 0);
        int m = M.cols - verify_k;
        AlexMatrix S = M;
        for (auto& row : S.entries)
            for (auto& e : row) e = e.substituted(*par);
        int vanished = 0, totalm = 0;
        if (m > 0) {
            for (auto& minor : ek_minors(S, verify_k)) {
                ++totalm;
                if (minor.is_zero()) ++vanished;
            }
        }
        std::cerr << "minors of size " << m << ": " << vanished << "/" << totalm
                  << " vanish on the torus\n";
        bool ok = m > 0 && vanished == totalm;
        std::cout << (ok ? "true" : "false") << "\n";
        return 0;
    }
    if (comp->parsed()) {
        ArrangementSpec spec = parse_spec(spec_text);
        if (spec.kind != ArrangementSpec::Kind::Horizontal)
            throw ParseError("components needs a horizontal spec", 0);
        auto nf = depth2_normal_form(spec.perm);
        auto comps = bottom_components_d2(nf);
        Resolved canon = resolve(ArrangementSpec::horizontal(nf.permutation()));
        AlexMatrix M = alexander_matrix(canon);
        Json jc = Json::array();
        for (auto& t : comps) {
            bool ok = verify_subtorus(M, t, nf.n - 2);
            if (as_json) jc.push_back(Json{{"torus", t.str()}, {"contained", ok}});
            else std::cout << t.str() << "  [" << (ok ? "verified" : "NOT CONTAINED") << "]\n";
        }
        if (as_json) std::cout << jc.dump(2) << "\n";
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
