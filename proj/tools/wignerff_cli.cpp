// Command-line front end for the wignerff library.
//
// Subcommands: field-tables, striations, mub, wigner, tomo, classify,
// reproduce. Exit status: 0 on success, 1 on a validation error, 2 when
// `reproduce` finds a golden-table mismatch.
//
// The env var WIGNERFF_CAP overrides the default field-size cap (64).

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "wignerff/reproduce.hpp"
#include "wignerff/wignerff.hpp"

namespace {

using namespace wignerff;

int field_cap() {
    if (const char* env = std::getenv("WIGNERFF_CAP")) {
        const int cap = std::atoi(env);
        if (cap > 0) return cap;
    }
    return kDefaultFieldCap;
}

// Accepts "r^n" or a plain prime power N.
Field parse_field(const std::string& spec) {
    const auto caret = spec.find('^');
    if (caret != std::string::npos) {
        return Field::make(std::stoi(spec.substr(0, caret)), std::stoi(spec.substr(caret + 1)),
                           field_cap());
    }
    int N = std::stoi(spec);
    if (N < 2) throw std::invalid_argument("field size must be at least 2");
    int r = 2;
    while (N % r != 0) ++r;
    int n = 0;
    int m = N;
    while (m % r == 0) { m /= r; ++n; }
    if (m != 1)
        throw std::invalid_argument(spec + " is not a prime power");
    return Field::make(r, n, field_cap());
}

BasisPair parse_pair(const Field& f, const std::string& spec) {
    if (spec.empty() || spec == "default") return default_basis_pair(f);
    Json j = load_json_file(spec);
    Field jf = j.contains("field") ? field_from_json(j.at("field"), field_cap()) : f;
    return validate_basis_pair(basis_from_json(jf, j.at("E")), basis_from_json(jf, j.at("F")));
}

QuantumNet parse_net(const std::string& spec) {
    if (spec == "paper-n4") return preset_net(spec, field_cap());
    return net_from_json(load_json_file(spec), field_cap());
}

void emit(const Json& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << payload.dump(2) << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"discrete Wigner functions on finite-field phase spaces"};
    app.require_subcommand(1);

    std::string field_spec, pair_spec, net_spec, state_path, probs_path, out_path;
    std::string fixtures_dir = "fixtures";
    double tol = 1e-6;
    int workers = 1;

    auto* tables = app.add_subcommand("field-tables", "print the F_N addition and multiplication tables");
    tables->add_option("--field", field_spec, "field as r^n or N")->required();
    tables->add_option("--out", out_path, "write to file instead of stdout");

    auto* strs = app.add_subcommand("striations", "dump the striations of the N x N phase space as JSON");
    strs->add_option("--field", field_spec)->required();
    strs->add_option("--out", out_path);

    auto* mub = app.add_subcommand("mub", "emit the N+1 striation bases as JSON");
    mub->add_option("--field", field_spec)->required();
    mub->add_option("--pair", pair_spec, "basis-pair file or 'default'");
    mub->add_option("--out", out_path);

    auto* wig = app.add_subcommand("wigner", "Wigner map of a state under a net");
    wig->add_option("--net", net_spec, "net file or preset 'paper-n4'")->required();
    wig->add_option("--state", state_path, "state file (amplitudes or matrix)")->required();
    wig->add_option("--out", out_path);

    auto* tomo = app.add_subcommand("tomo", "reconstruct a Wigner map from line probabilities");
    tomo->add_option("--net", net_spec)->required();
    tomo->add_option("--probs", probs_path, "probability file")->required();
    tomo->add_option("--tol", tol, "per-striation consistency tolerance");
    tomo->add_option("--out", out_path);

    auto* cls = app.add_subcommand("classify", "similarity orbits and the w census");
    cls->add_option("--field", field_spec, "field as r^n or N");
    cls->add_option("--net", net_spec, "classify the class of a specific net");
    cls->add_option("--workers", workers, "worker threads for the census");
    cls->add_option("--out", out_path);

    auto* rep = app.add_subcommand("reproduce", "recompute all published tables and diff against fixtures");
    rep->add_option("--fixtures", fixtures_dir, "fixture directory");
    rep->add_option("--workers", workers);

    CLI11_PARSE(app, argc, argv);

    if (tables->parsed()) {
        Field f = parse_field(field_spec);
        std::string text = field_tables_text(f);
        if (out_path.empty())
            std::cout << text;
        else
            write_text_file(out_path, text);
        return 0;
    }

    if (strs->parsed()) {
        Field f = parse_field(field_spec);
        Json out = Json::array();
        for (const auto& s : striations(f)) out.push_back(striation_to_json(s));
        emit(Json{{"field", field_to_json(f)}, {"striations", out}}, out_path);
        return 0;
    }

    if (mub->parsed()) {
        Field f = parse_field(field_spec);
        emit(mub_to_json(mub_family(f, parse_pair(f, pair_spec))), out_path);
        return 0;
    }

    if (wig->parsed()) {
        QuantumNet net = parse_net(net_spec);
        Matrix rho = state_from_json(load_json_file(state_path));
        WignerMap W = wigner_transform(rho, net);
        std::cout << wigner_heatmap(W);
        emit(wigner_to_json(W), out_path);
        return 0;
    }

    if (tomo->parsed()) {
        QuantumNet net = parse_net(net_spec);
        LineProbabilities P = probabilities_from_json(load_json_file(probs_path));
        TomographyResult result = tomographic_reconstruct(P, net, tol);
        std::cout << wigner_heatmap(result.wigner);
        Json payload = wigner_to_json(result.wigner);
        payload["max_striation_deviation"] = round_sig(result.max_striation_deviation);
        emit(payload, out_path);
        return 0;
    }

    if (cls->parsed()) {
        if (!net_spec.empty()) {
            QuantumNet net = parse_net(net_spec);
            Json payload = orbit_report_to_json(
                net.field(),
                similarity_orbits(net.field(), net.pair(), kDefaultEnumerationCap, workers));
            Json labels = Json::array();
            for (const auto& l : net.space().representative(net.choice()).labels)
                labels.push_back(element_to_string(l));
            payload["net"] = Json{{"representative", labels}};
            if (net.field().size() == 4 && is_f4_reference_pair(net.pair()))
                payload["net"]["discriminant"] = element_to_string(discriminant_D(net.choice()));
            emit(payload, out_path);
            return 0;
        }
        Field f = parse_field(field_spec);
        WCensus census = w_variant_census(f, kDefaultEnumerationCap, workers);
        // Census table: one column per w, one row per similarity class.
        std::cout << "N=" << f.size()
                  << " classification (equivalence classes per similarity class)\n";
        for (const auto& e : census.per_w) std::cout << "  w=" << element_to_string(e.w) << "\t";
        std::cout << "\n";
        std::size_t rows = census.per_w.front().orbit_sizes.size();
        for (std::size_t row = 0; row < rows; ++row) {
            for (const auto& e : census.per_w) {
                std::vector<long> sizes = e.orbit_sizes;
                std::sort(sizes.begin(), sizes.end());
                std::cout << "  " << sizes[row] << "\t";
            }
            std::cout << "\n";
        }
        std::cout << "total: " << census.total << " equivalence classes\n";
        Json per_w = Json::array();
        for (const auto& e : census.per_w) {
            Json sizes = Json::array();
            for (long s : e.orbit_sizes) sizes.push_back(s);
            per_w.push_back(Json{{"w", element_to_string(e.w)},
                                 {"equivalence_classes", e.equivalence_classes},
                                 {"orbit_sizes", sizes}});
        }
        if (!out_path.empty())
            emit(Json{{"field", field_to_json(f)},
                      {"total_equivalence_classes", census.total},
                      {"per_w", per_w}},
                 out_path);
        return 0;
    }

    if (rep->parsed()) {
        auto results = run_reproduction_suite(fixtures_dir, workers);
        bool all_pass = true;
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
            if (!r.pass) std::cout << "  (" << r.detail << ")";
            std::cout << "\n";
            all_pass = all_pass && r.pass;
        }
        std::cout << (all_pass ? "reproduce: all checks passed\n" : "reproduce: golden mismatch\n");
        return all_pass ? 0 : 2;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
