#pragma once

// The `reproduce` suite: recomputes every published table and count the
// library is pinned to and diffs the results against the bundled golden
// fixtures. Each check yields one pass/fail line.

#include <functional>
#include <sstream>

#include "wignerff/io.hpp"

namespace wignerff {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

class CheckRunner {
public:
    explicit CheckRunner(std::vector<CheckResult>& out) : out_(out) {}

    void run(const std::string& name, const std::function<void()>& body) {
        CheckResult r;
        r.name = name;
        try {
            body();
            r.pass = true;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        out_.push_back(std::move(r));
    }

    static void require(bool cond, const std::string& what) {
        if (!cond) throw std::runtime_error(what);
    }

private:
    std::vector<CheckResult>& out_;
};

// Printed-layout integer array (x denominator) from a JSON fixture table.
inline bool gamma00_matches(const NetSpace& ns, const RayChoice& rep, const Json& table,
                            double denominator, double tol) {
    RealMatrix g = gamma00_array(gamma_tensor(ns.build(rep)), ns.field());
    const int N = ns.field().size();
    for (int row = 0; row < N; ++row)
        for (int qi = 0; qi < N; ++qi) {
            const int pi = N - 1 - row;
            if (std::abs(g(qi, pi) - table.at(row).at(qi).get<double>() / denominator) > tol)
                return false;
        }
    return true;
}

} // namespace detail

inline std::vector<CheckResult> run_reproduction_suite(const std::string& fixtures_dir,
                                                       int workers = 1) {
    std::vector<CheckResult> results;
    detail::CheckRunner checks(results);
    using detail::CheckRunner;

    Field f4 = Field::make(2, 2);
    BasisPair ref = default_basis_pair(f4);
    NetSpace ns4(f4, ref);

    checks.run("f4-tables", [&] {
        std::ifstream in(fixtures_dir + "/f4_tables.txt");
        CheckRunner::require(bool(in), "missing fixture f4_tables.txt");
        std::stringstream buf;
        buf << in.rdbuf();
        CheckRunner::require(field_tables_text(f4) == buf.str(),
                             "generated F_4 tables differ from the fixture");
    });

    checks.run("fig3-bases", [&] {
        Json j = load_json_file(fixtures_dir + "/fig3_bases.json");
        MubFamily fam = mub_family(f4, ref);
        for (int b = 0; b < 5; ++b)
            for (int u = 0; u < 4; ++u) {
                CVector want(4);
                for (int k = 0; k < 4; ++k) {
                    const Json& cell = j.at("bases").at(b).at(u).at(k);
                    want(k) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
                }
                CheckRunner::require(
                    overlap_magnitude(fam.bases[b].vectors[u], want) > 1.0 - 1e-10,
                    "basis " + std::to_string(b) + " label " + std::to_string(u) + " mismatch");
            }
    });

    checks.run("pauli-and-commutation", [&] {
        auto [X, Z] = shift_clock(2);
        Matrix px(2, 2), pz(2, 2);
        px << 0, 1, 1, 0;
        pz << 1, 0, 0, -1;
        CheckRunner::require(approx_equal(X, px, 1e-14) && approx_equal(Z, pz, 1e-14),
                             "r=2 shift/clock are not the Pauli matrices");
        auto [X3, Z3] = shift_clock(3);
        CheckRunner::require(approx_equal(Z3 * X3, root_of_unity(1, 3) * X3 * Z3, 1e-13),
                             "r=3 commutation relation failed");
    });

    checks.run("field-and-pair-facts", [&] {
        CheckRunner::require(f4.modulus() == std::vector<int>{1, 1, 1},
                             "F_4 modulus is not x^2 + x + 1");
        FieldElement one = f4.one(), w = f4.element(2), wb = f4.element(3);
        FieldBasis E({w, one});
        FieldBasis Ed = dual_basis(E);
        CheckRunner::require(Ed.at(0) == one && Ed.at(1) == wb,
                             "dual of (w, 1) is not (1, wbar)");
        CheckRunner::require(validate_basis_pair(E, E).w == w,
                             "E = F = (w, 1) does not have w = omega");
        CheckRunner::require(validate_basis_pair(E, FieldBasis({one, wb})).w == one,
                             "F = dual(E) does not have w = 1");
    });

    checks.run("translation-operators", [&] {
        auto [X, Z] = shift_clock(2);
        FieldElement one = f4.one(), w = f4.element(2), wb = f4.element(3);
        CheckRunner::require(approx_equal(translation_operator({one, w}, ref), kron(Z, X), 1e-14),
                             "T_(1,w) != Z (x) X");
        CheckRunner::require(
            approx_equal(translation_operator({w, wb}, ref), kron(X * Z, Z), 1e-14),
            "T_(w,wbar) != XZ (x) Z");
        CheckRunner::require(
            approx_equal(translation_operator({wb, one}, ref), kron(X, X * Z), 1e-14),
            "T_(wbar,1) != X (x) XZ");
        // Parallel translations commute for a validated pair.
        for (int d = 0; d < 5; ++d) {
            PhasePoint dir = striation_direction(f4, d);
            for (const auto& s : f4.elements())
                for (const auto& t : f4.elements())
                    CheckRunner::require(
                        std::abs(commutation_phase(s * dir, t * dir, ref) - Complex(1, 0)) < 1e-13,
                        "parallel translations do not commute");
        }
    });

    checks.run("geometry-counts", [&] {
        for (auto [r, n] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
            Field f = Field::make(r, n);
            CheckRunner::require(
                static_cast<int>(all_lines(f).size()) == f.size() * (f.size() + 1),
                "line count is not N(N+1)");
            CheckRunner::require(static_cast<int>(striations(f).size()) == f.size() + 1,
                                 "striation count is not N+1");
        }
        // Two distinct points determine one line (N=3, all 36 ordered pairs).
        Field f3 = Field::make(3, 1);
        auto lines3 = all_lines(f3);
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) {
                if (i == j) continue;
                int count = 0;
                for (const auto& l : lines3)
                    if (l.contains(PhasePoint::from_index(f3, i)) &&
                        l.contains(PhasePoint::from_index(f3, j)))
                        ++count;
                CheckRunner::require(count == 1, "two points on != 1 line");
            }
        // The mod-4 artifact line is not an F_4 line.
        std::set<int> artifact;
        for (auto [q, p] : {std::pair{0, 0}, {1, 2}, {2, 0}, {3, 2}})
            artifact.insert(PhasePoint{f4.element(q), f4.element(p)}.index());
        for (const auto& l : all_lines(f4)) {
            std::set<int> pts;
            for (const auto& p : l.points()) pts.insert(p.index());
            CheckRunner::require(pts != artifact, "mod-4 artifact matched an F_4 line");
        }
        // Striation order for N=4: (0,1), (1,0), (1,1), (1,w), (1,wbar).
        auto strs = striations(f4);
        const int want_dirs[5][2] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}, {1, 3}};
        for (int i = 0; i < 5; ++i)
            CheckRunner::require(strs[i].direction.q.index() == want_dirs[i][0] &&
                                     strs[i].direction.p.index() == want_dirs[i][1],
                                 "striation order mismatch");
        // N=2: the axis swap exchanges the vertical and horizontal striations
        // and fixes the diagonal.
        Field f2 = Field::make(2, 1);
        LinearMap swap(f2.zero(), f2.one(), f2.one(), f2.zero());
        auto s2 = striations(f2);
        CheckRunner::require(striation_index_of(swap.apply(s2[0].ray())) == 1 &&
                                 striation_index_of(swap.apply(s2[1].ray())) == 0 &&
                                 striation_index_of(swap.apply(s2[2].ray())) == 2,
                             "N=2 axis swap does not permute striations as published");
        // |SL(2, F_N)| = N^3 - N.
        CheckRunner::require(static_cast<int>(sl2_group(f3).size()) == 24 &&
                                 static_cast<int>(sl2_group(f4).size()) == 60,
                             "unit-determinant group size is not N^3 - N");
    });

    checks.run("reference-net-assignments", [&] {
        QuantumNet net = preset_net("paper-n4");
        // Vertical lines left to right carry |00>, |01>, |10>, |11>.
        for (int c = 0; c < 4; ++c) {
            CVector want = CVector::Zero(4);
            want(c) = 1.0;
            CheckRunner::require(max_abs_diff(net.projector(0, c), outer(want)) < 1e-12,
                                 "vertical line states are not the standard basis in order");
        }
        // Distinct lines of one striation carry orthogonal states.
        for (int s = 0; s < 5; ++s)
            for (int c = 0; c < 4; ++c)
                for (int c2 = 0; c2 < c; ++c2)
                    CheckRunner::require(
                        max_abs(net.projector(s, c) * net.projector(s, c2)) < 1e-12,
                        "two lines of one striation share a state");
    });

    checks.run("fig4-wigner", [&] {
        Json j = load_json_file(fixtures_dir + "/fig4_wigner.json");
        QuantumNet net = preset_net("paper-n4");
        for (const auto& entry : j.at("states")) {
            CVector v(4);
            const Json& amps = entry.at("amplitudes");
            for (int k = 0; k < 4; ++k) v(k) = amps.at(k).get<double>();
            v /= v.norm();
            WignerMap W = wigner_transform(outer(v), net);
            for (int row = 0; row < 4; ++row)
                for (int qi = 0; qi < 4; ++qi) {
                    const double want = entry.at("table").at(row).at(qi).get<double>();
                    CheckRunner::require(std::abs(W.values(qi, 3 - row) - want) < 1e-10,
                                         entry.at("name").get<std::string>() + " table mismatch");
                }
        }
    });

    checks.run("singlet-marginals", [&] {
        QuantumNet net = preset_net("paper-n4");
        CVector singlet(4);
        singlet << 0, 1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0;
        WignerMap W = wigner_transform(outer(singlet), net);
        std::vector<double> want = {0.0, 0.5, 0.5, 0.0};
        for (int c = 0; c < 4; ++c)
            CheckRunner::require(
                std::abs(line_marginal(W, ns4.line(0, c)) - want[c]) < 1e-10 &&
                    std::abs(line_marginal(W, ns4.line(1, c)) - want[c]) < 1e-10,
                "singlet outcome probabilities are not (0, 1/2, 1/2, 0)");
        // Reconstruction equation inverts the marginals.
        LineProbabilities P = line_probabilities(outer(singlet), net);
        WignerMap W2 = tomographic_reconstruct(P, net).wigner;
        CheckRunner::require((W2.values - W.values).cwiseAbs().maxCoeff() < 1e-10,
                             "tomographic reconstruction does not invert the marginals");
        // And the Wigner table inverts back to the singlet projector.
        CheckRunner::require(max_abs_diff(inverse_wigner(W, net), outer(singlet)) < 1e-10,
                             "singlet table does not invert to the singlet projector");
    });

    checks.run("a-operator-properties", [&] {
        QuantumNet net = preset_net("paper-n4");
        PhasePointOperators A = phase_point_operators(net);
        for (int a = 0; a < 16; ++a) {
            CheckRunner::require(std::abs(A.at_index(a).trace() - Complex(1, 0)) < 1e-10,
                                 "Tr A != 1");
            for (int b = 0; b < 16; ++b)
                CheckRunner::require(std::abs((A.at_index(a) * A.at_index(b)).trace() -
                                              Complex(a == b ? 4 : 0, 0)) < 1e-8,
                                     "Tr(A A) != N delta");
        }
        for (int s = 0; s < 5; ++s)
            for (int c = 0; c < 4; ++c) {
                Matrix sum = Matrix::Zero(4, 4);
                for (const auto& pt : ns4.line(s, c).points()) sum += A.at(pt);
                CheckRunner::require(max_abs_diff(sum, 4.0 * net.projector(s, c)) < 1e-9,
                                     "line sum != N Q(lambda)");
            }
    });

    checks.run("gamma-goldens", [&] {
        Json j = load_json_file(fixtures_dir + "/gamma_goldens.json");
        // N=2 array, both classes.
        Field f2 = Field::make(2, 1);
        NetSpace ns2(f2, default_basis_pair(f2));
        for (const auto& rep : ns2.representative_choices())
            CheckRunner::require(detail::gamma00_matches(ns2, rep, j.at("n2"), 4.0, 1e-9),
                                 "N=2 Gamma array mismatch");
        // N=3: the symmetric class and the printed zero-pattern example.
        Field f3 = Field::make(3, 1);
        NetSpace ns3(f3, default_basis_pair(f3));
        int simple = 0, ugly = 0;
        for (const auto& rep : ns3.representative_choices()) {
            if (detail::gamma00_matches(ns3, rep, j.at("n3_simple"), 3.0, 1e-9)) ++simple;
            if (detail::gamma00_matches(ns3, rep, j.at("n3_zero_example"), 3.0, 1e-9)) ++ugly;
        }
        CheckRunner::require(simple == 1, "N=3 symmetric Gamma class count != 1");
        CheckRunner::require(ugly == 1, "N=3 printed zero-pattern not realized exactly once");
        // N=4: the four printed arrays, keyed by discriminant value.
        const char* keys[4] = {"n4_d0", "n4_d1", "n4_dw", "n4_dwbar"};
        for (int d = 0; d < 4; ++d) {
            bool found = false;
            for (const auto& rep : ns4.representative_choices()) {
                if (discriminant_D(rep).index() != d) continue;
                if (detail::gamma00_matches(ns4, rep, j.at(keys[d]), 16.0, 1e-9)) found = true;
            }
            CheckRunner::require(found, std::string("N=4 array for ") + keys[d] + " not realized");
        }
        CheckRunner::require(detail::gamma00_matches(ns4, ns4.zero_choice(), j.at("n4_d0"), 16.0, 1e-9),
                             "reference net does not give the Gamma_000 = 25/16 array");
    });

    checks.run("classification-counts", [&] {
        Json j = load_json_file(fixtures_dir + "/classification.json");
        for (auto [key, r, n] : {std::tuple{"2", 2, 1}, {"3", 3, 1}, {"4", 2, 2}}) {
            Field f = Field::make(r, n);
            OrbitReport rep = similarity_orbits(f, default_basis_pair(f), 5, workers);
            CheckRunner::require(
                rep.representative_count == j.at("equivalence_classes").at(key).get<long>(),
                std::string("equivalence class count mismatch at N=") + key);
            std::vector<long> want;
            for (const auto& v : j.at("orbit_sizes").at(key)) want.push_back(v.get<long>());
            CheckRunner::require(rep.orbit_sizes == want,
                                 std::string("orbit sizes mismatch at N=") + key);
            CheckRunner::require(rep.burnside_orbit_count == rep.orbit_count,
                                 "Burnside disagrees with direct orbit count");
            // Each equivalence class has exactly N^2 members under translation.
            NetSpace ns(f, default_basis_pair(f));
            for (const auto& r2 : ns.representative_choices()) {
                std::set<long> orbit;
                for (int t = 0; t < f.size() * f.size(); ++t)
                    orbit.insert(ns.translate_choice(r2, PhasePoint::from_index(f, t)).key());
                CheckRunner::require(static_cast<int>(orbit.size()) == f.size() * f.size(),
                                     "translation orbit size is not N^2");
            }
        }
        Field f5 = Field::make(5, 1);
        OrbitReport rep5 = similarity_orbits(f5, default_basis_pair(f5), 5, workers);
        CheckRunner::require(rep5.orbit_count == j.at("similarity_classes_n5").get<int>(),
                             "N=5 similarity class count mismatch");
        CheckRunner::require(rep5.burnside_orbit_count == rep5.orbit_count,
                             "N=5 Burnside mismatch");
    });

    checks.run("d-discriminant", [&] {
        CheckRunner::require(discriminant_D(ns4.zero_choice()).is_zero(), "D(0,...,0) != 0");
        CheckRunner::require(discriminant_D(ns4.choice_from_indices({0, 0, 3, 2, 1})).is_zero(),
                             "D(0,0,wbar,w,1) != 0");
        std::map<int, int> counts;
        for (const auto& rep : ns4.representative_choices())
            ++counts[discriminant_D(rep).index()];
        CheckRunner::require(counts[0] == 20 && counts[1] == 20 && counts[2] == 12 &&
                                 counts[3] == 12,
                             "D level sets are not 20/20/12/12");
        for (const auto& v : ns4.all_choices()) {
            FieldElement d = discriminant_D(v);
            for (int k = 1; k <= 3; ++k)
                CheckRunner::require(discriminant_D(f4_index_transform_linear(k, v)) == d,
                                     "D not invariant under a generator index map");
            CheckRunner::require(
                discriminant_D(ns4.translate_choice(v, {f4.one(), f4.zero()})) == d &&
                    discriminant_D(ns4.translate_choice(v, {f4.zero(), f4.one()})) == d,
                "D not invariant under translations");
        }
        // Published translation shifts.
        RayChoice zero = ns4.zero_choice();
        RayChoice t10 = ns4.translate_choice(zero, {f4.one(), f4.zero()});
        RayChoice t01 = ns4.translate_choice(zero, {f4.zero(), f4.one()});
        std::vector<int> w10 = {1, 0, 1, 2, 3}, w01 = {0, 1, 1, 1, 1};
        for (int i = 0; i < 5; ++i)
            CheckRunner::require(t10.labels[i].index() == w10[i] &&
                                     t01.labels[i].index() == w01[i],
                                 "translation index shifts differ from the published ones");
        // The L1 index map: b and c swap, d and e swap, offset (0,1,w,wbar,0).
        RayChoice probe = ns4.choice_from_indices({1, 2, 3, 1, 2});
        RayChoice img = f4_index_transform_linear(1, probe);
        const FieldElement om = f4.element(2), ob = f4.element(3);
        CheckRunner::require(img.labels[0] == probe.labels[0] &&
                                 img.labels[1] == probe.labels[2] + f4.one() &&
                                 img.labels[2] == probe.labels[1] + om &&
                                 img.labels[3] == probe.labels[4] + ob &&
                                 img.labels[4] == probe.labels[3],
                             "L1 index map differs from the published data");
    });

    checks.run("appendix-unitaries", [&] {
        auto gens = sl2_generators(f4);
        // Published U3 permutation on the reference pair.
        Matrix U3ref = Matrix::Zero(4, 4);
        U3ref(0, 0) = U3ref(1, 2) = U3ref(2, 3) = U3ref(3, 1) = 1.0;
        for (int i = 0; i < 16; ++i) {
            PhasePoint a = PhasePoint::from_index(f4, i);
            Matrix lhs = U3ref * translation_operator(a, ref) * U3ref.adjoint();
            Matrix rhs = translation_operator(gens[2].apply(a), ref);
            CheckRunner::require(proportionality_factor(lhs, rhs, 1e-10).has_value(),
                                 "published U3 fails covariance");
        }
        // U1 = diag(1,i) (x) diag(1,i) on the reference pair.
        Matrix S(2, 2);
        S << 1, 0, 0, Complex(0, 1);
        Matrix U1 = kron(S, S);
        for (int i = 0; i < 16; ++i) {
            PhasePoint a = PhasePoint::from_index(f4, i);
            Matrix lhs = U1 * translation_operator(a, ref) * U1.adjoint();
            Matrix rhs = translation_operator(gens[0].apply(a), ref);
            CheckRunner::require(proportionality_factor(lhs, rhs, 1e-10).has_value(),
                                 "published U1 fails covariance");
        }
        // N=2 axis swap via the Hadamard.
        Field f2 = Field::make(2, 1);
        BasisPair pair2 = default_basis_pair(f2);
        LinearMap swap(f2.zero(), f2.one(), f2.one(), f2.zero());
        Matrix H(2, 2);
        H << 1, 1, 1, -1;
        H /= std::sqrt(2.0);
        for (int i = 0; i < 4; ++i) {
            PhasePoint a = PhasePoint::from_index(f2, i);
            Matrix lhs = H * translation_operator(a, pair2) * H.adjoint();
            Matrix rhs = translation_operator(swap.apply(a), pair2);
            CheckRunner::require(proportionality_factor(lhs, rhs, 1e-12).has_value(),
                                 "Hadamard fails the published N=2 swap");
        }
    });

    checks.run("tensor-product-nets", [&] {
        auto [net_a, net_b] = tensor_product_nets_n4();
        std::vector<int> a_idx, b_idx;
        for (const auto& l : net_a.choice().labels) a_idx.push_back(l.index());
        for (const auto& l : net_b.choice().labels) b_idx.push_back(l.index());
        CheckRunner::require(a_idx == std::vector<int>{0, 0, 3, 2, 1} &&
                                 b_idx == std::vector<int>{0, 0, 0, 0, 0},
                             "tensor-net representatives are not (wbar,w,1) and (0,0,0)");
        CheckRunner::require(discriminant_D(net_a.choice()).is_zero() &&
                                 discriminant_D(net_b.choice()).is_zero(),
                             "tensor nets do not both have D = 0");
        PhasePointOperators Aa = phase_point_operators(net_a);
        PhasePointOperators Ab = phase_point_operators(net_b);
        for (int i = 0; i < 16; ++i)
            CheckRunner::require(max_abs_diff(Aa.at_index(i), Ab.at_index(i).conjugate()) < 1e-10,
                                 "tensor nets are not entrywise conjugate");
        // A at the origin factors as A2 (x) conj(A2).
        Field f2 = Field::make(2, 1);
        NetSpace ns2(f2, default_basis_pair(f2));
        PhasePointOperators A2 = phase_point_operators(ns2.build(ns2.zero_choice()));
        CheckRunner::require(
            max_abs_diff(Aa.at_index(0), kron(A2.at_index(0), A2.at_index(0).conjugate())) < 1e-10,
            "A_(0,0) does not factor as A2 (x) conj(A2)");
    });

    checks.run("special-nets-odd-prime", [&] {
        for (int p : {3, 5, 7}) {
            Field f = Field::make(p, 1);
            QuantumNet net = special_net_odd_prime(f);
            GammaTensor G = gamma_tensor(net);
            const int P = p * p;
            for (int a = 0; a < P; ++a)
                for (int b = 0; b < P; ++b)
                    for (int c = 0; c < P; ++c)
                        CheckRunner::require(
                            std::abs(G.at(a, b, c) -
                                     special_gamma_value(f, PhasePoint::from_index(f, a),
                                                         PhasePoint::from_index(f, b),
                                                         PhasePoint::from_index(f, c))) < 1e-8,
                            "symmetric net Gamma mismatch at N=" + std::to_string(p));
        }
    });

    checks.run("mub-property", [&] {
        for (auto [r, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
            Field f = Field::make(r, n);
            MubFamily fam = mub_family(f, default_basis_pair(f));
            CheckRunner::require(static_cast<int>(fam.bases.size()) == f.size() + 1,
                                 "family size is not N+1");
            MubReport rep = verify_mub(fam);
            CheckRunner::require(rep.max_unbiased_deviation < 1e-9,
                                 "unbiasedness deviation at N=" + std::to_string(f.size()));
        }
    });

    checks.run("w-census", [&] {
        Json j = load_json_file(fixtures_dir + "/classification.json");
        for (auto [key, r, n] : {std::tuple{"2", 2, 1}, {"3", 3, 1}, {"4", 2, 2}}) {
            Field f = Field::make(r, n);
            WCensus census = w_variant_census(f, 5, workers);
            CheckRunner::require(census.total == j.at("census_totals").at(key).get<long>(),
                                 std::string("census total mismatch at N=") + key);
            std::vector<long> want;
            for (const auto& v : j.at("orbit_sizes").at(key)) want.push_back(v.get<long>());
            for (const auto& entry : census.per_w)
                CheckRunner::require(entry.orbit_sizes == want,
                                     std::string("per-w orbit sizes mismatch at N=") + key);
        }
    });

    return results;
}

} // namespace wignerff
