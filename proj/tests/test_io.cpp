#include <catch2/catch_amalgamated.hpp>

#include "wignerff/io.hpp"

using namespace wignerff;

TEST_CASE("element notation round trips, with F_4 aliases") {
    Field f4 = Field::make(2, 2);
    CHECK(element_to_string(f4.element(0)) == "0");
    CHECK(element_to_string(f4.element(1)) == "1");
    CHECK(element_to_string(f4.element(2)) == "w");
    CHECK(element_to_string(f4.element(3)) == "wbar");
    for (int i = 0; i < 4; ++i)
        CHECK(element_from_string(f4, element_to_string(f4.element(i))) == f4.element(i));

    Field f5 = Field::make(5, 1);
    CHECK(element_to_string(f5.element(3)) == "3");
    CHECK(element_from_string(f5, "4") == f5.element(4));
    CHECK_THROWS_AS(element_from_string(f5, "7"), std::invalid_argument);

    Field f8 = Field::make(2, 3);
    CHECK(element_to_string(f8.element(5)) == "101");  // 1 + x^2
    for (int i = 0; i < 8; ++i)
        CHECK(element_from_string(f8, element_to_string(f8.element(i))) == f8.element(i));
    CHECK_THROWS_AS(element_from_string(f8, "12"), std::invalid_argument);
    CHECK_THROWS_AS(element_from_string(f8, "121"), std::invalid_argument);

    Field f9 = Field::make(3, 2);
    CHECK(element_to_string(f9.element(7)) == "12");  // 1 + 2x
    CHECK(element_from_string(f9, "12") == f9.element(7));
}

TEST_CASE("net JSON round trip rebuilds the same net") {
    Field f = Field::make(2, 2);
    NetSpace ns(f, default_basis_pair(f));
    QuantumNet net = ns.build(ns.choice_from_indices({0, 0, 3, 1, 2}));
    Json j = net_to_json(net);
    QuantumNet back = net_from_json(j);
    CHECK(back.choice() == net.choice());
    CHECK(back.pair().w == net.pair().w);
    for (int s = 0; s < 5; ++s)
        for (int c = 0; c < 4; ++c)
            CHECK(max_abs_diff(back.projector(s, c), net.projector(s, c)) < 1e-12);
    // Deterministic serialization.
    CHECK(net_to_json(back).dump() == j.dump());
}

TEST_CASE("state files accept amplitude vectors and density matrices") {
    Json amp = {{"amplitudes", Json::array({1.0, Json::array({0.0, 1.0})})}};
    Matrix rho = state_from_json(amp);
    CHECK(rho.rows() == 2);
    CHECK(std::abs(rho(0, 0).real() - 0.5) < 1e-12);
    CHECK(std::abs(rho(0, 1) - Complex(0, -0.5)) < 1e-12);

    Json dm = {{"matrix", matrix_to_json(Matrix::Identity(3, 3) / 3.0)}};
    CHECK(max_abs_diff(state_from_json(dm), Matrix::Identity(3, 3) / 3.0) < 1e-12);

    Json bad = {{"matrix", matrix_to_json(Matrix::Identity(3, 3))}};
    CHECK_THROWS_AS(state_from_json(bad), std::invalid_argument);
    CHECK_THROWS_AS(state_from_json(Json{{"oops", 1}}), std::invalid_argument);
}

TEST_CASE("wigner JSON and heatmap use the lower-left-origin layout") {
    Field f = Field::make(2, 2);
    NetSpace ns(f, default_basis_pair(f));
    QuantumNet net = ns.build(ns.zero_choice());
    CVector up_up = CVector::Zero(4);
    up_up(0) = 1.0;
    WignerMap W = wigner_transform(outer(up_up), net);

    Json j = wigner_to_json(W);
    // First JSON row is p = wbar; |00> puts 1/4 down the q=0 column.
    for (int row = 0; row < 4; ++row) {
        CHECK(j["values"][row][0].get<double>() == 0.25);
        CHECK(j["values"][row][2].get<double>() == 0.0);
    }
    std::string heat = wigner_heatmap(W);
    CHECK(heat.find("p=wbar") != std::string::npos);
    CHECK(heat.find("q=0") != std::string::npos);
    // Bottom data row is p=0.
    CHECK(heat.rfind("p=0") < heat.rfind("q=0"));
}

TEST_CASE("probability tables round trip") {
    Field f = Field::make(3, 1);
    NetSpace ns(f, default_basis_pair(f));
    QuantumNet net = ns.build(ns.zero_choice());
    Matrix rho = Matrix::Identity(3, 3) / 3.0;
    LineProbabilities P = line_probabilities(rho, net);
    Json j = probabilities_to_json(f, P);
    LineProbabilities back = probabilities_from_json(j);
    REQUIRE(back.values.size() == P.values.size());
    for (std::size_t s = 0; s < P.values.size(); ++s)
        for (std::size_t c = 0; c < P.values[s].size(); ++c)
            CHECK(std::abs(back.values[s][c] - P.values[s][c]) < 1e-12);
}

TEST_CASE("field tables text contains the published F_4 cells") {
    Field f = Field::make(2, 2);
    std::string text = field_tables_text(f);
    CHECK(text.find("addition") != std::string::npos);
    CHECK(text.find("multiplication") != std::string::npos);
    // w + wbar = 1 and w * w = wbar appear in the right rows.
    CHECK(text.find("w    | w    wbar 0    1") != std::string::npos);
    CHECK(text.find("w    | 0    w    wbar 1") != std::string::npos);
}

TEST_CASE("round_sig is stable and deterministic") {
    CHECK(round_sig(0.0) == 0.0);
    CHECK(round_sig(1.0 / 3.0) == 0.333333333333);
    CHECK(round_sig(-1.0 / 3.0) == -0.333333333333);
    CHECK(round_sig(1234567.0) == 1234567.0);
    CHECK(round_sig(-3e-17) == 0.0);  // numerical noise snaps to zero
    CHECK(round_sig(1e-11) == 1e-11);
}

TEST_CASE("presets") {
    QuantumNet net = preset_net("paper-n4");
    CHECK(net.field().size() == 4);
    CHECK(net.choice().labels[0].is_zero());
    CHECK(is_f4_reference_pair(net.pair()));
    CHECK_THROWS_AS(preset_net("nope"), std::invalid_argument);
}

TEST_CASE("matrix JSON round trip") {
    Matrix M(2, 3);
    M << Complex(1, 2), Complex(0, -1), 3.5, Complex(-0.25, 0.125), 0.0, Complex(0, 1);
    Json j = matrix_to_json(M);
    CHECK(max_abs_diff(matrix_from_json(j), M) < 1e-12);
}
