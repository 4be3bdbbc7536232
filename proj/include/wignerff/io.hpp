#pragma once

// Textual and JSON encodings: field-element notation (coefficient strings
// plus the F_4 aliases "w" / "wbar"), JSON forms for points, lines, matrices,
// bases, nets, Wigner maps and probability tables, and the text heatmap with
// the origin at the lower left. JSON numbers are rounded to 12 significant
// digits so outputs are deterministic byte-for-byte.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "wignerff/classify.hpp"

namespace wignerff {

using Json = nlohmann::ordered_json;

// Values below 1e-12 are numerical noise for every quantity this library
// emits; snapping them keeps payloads byte-stable.
inline double round_sig(double x, int digits = 12) {
    if (!std::isfinite(x)) return x;
    if (std::abs(x) < 1e-12) return 0.0;
    const double mag = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(std::abs(x)))));
    return std::round(x * mag) / mag;
}

// --- element notation -------------------------------------------------------

inline std::string element_to_string(const FieldElement& x) {
    const Field f = x.field();
    if (f.size() == 4) {
        switch (x.index()) {
        case 0: return "0";
        case 1: return "1";
        case 2: return "w";
        case 3: return "wbar";
        }
    }
    if (f.degree() == 1) return std::to_string(x.index());
    std::string out;
    for (int c : x.coeffs()) out += std::to_string(c);
    return out;
}

inline FieldElement element_from_string(const Field& f, const std::string& s) {
    if (f.size() == 4) {
        if (s == "0") return f.element(0);
        if (s == "1") return f.element(1);
        if (s == "w") return f.element(2);
        if (s == "wbar") return f.element(3);
    }
    if (f.degree() == 1) {
        const int v = std::stoi(s);
        if (v < 0 || v >= f.size()) throw std::invalid_argument("element out of range: " + s);
        return f.element(v);
    }
    if (static_cast<int>(s.size()) != f.degree())
        throw std::invalid_argument("coefficient string '" + s + "' must have " +
                                    std::to_string(f.degree()) + " digits");
    std::vector<int> coeffs;
    for (char ch : s) {
        if (ch < '0' || ch >= '0' + f.characteristic())
            throw std::invalid_argument("bad coefficient digit in '" + s + "'");
        coeffs.push_back(ch - '0');
    }
    return f.from_coeffs(coeffs);
}

// --- JSON encodings ---------------------------------------------------------

inline Json field_to_json(const Field& f) {
    return Json{{"r", f.characteristic()}, {"n", f.degree()}};
}

inline Field field_from_json(const Json& j, int cap = kDefaultFieldCap) {
    return Field::make(j.at("r").get<int>(), j.at("n").get<int>(), cap);
}

inline Json point_to_json(const PhasePoint& x) {
    return Json::array({element_to_string(x.q), element_to_string(x.p)});
}

inline Json line_to_json(const Line& l) {
    return Json{{"a", element_to_string(l.a())},
                {"b", element_to_string(l.b())},
                {"c", element_to_string(l.c())}};
}

inline Json striation_to_json(const Striation& s) {
    Json lines = Json::array();
    for (const auto& l : s.lines) lines.push_back(line_to_json(l));
    return Json{{"index", s.index}, {"ray_direction", point_to_json(s.direction)}, {"lines", lines}};
}

inline Json complex_to_json(const Complex& z) {
    return Json::array({round_sig(z.real()), round_sig(z.imag())});
}

inline Json matrix_to_json(const Matrix& M) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(complex_to_json(M(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json vector_to_json(const CVector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
    return out;
}

inline Matrix matrix_from_json(const Json& j) {
    const auto rows = j.size();
    if (rows == 0) throw std::invalid_argument("empty matrix");
    const auto cols = j.at(0).size();
    Matrix M(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const Json& cell = j.at(i).at(k);
            if (cell.is_array())
                M(i, k) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
            else
                M(i, k) = Complex(cell.get<double>(), 0.0);
        }
    return M;
}

inline Json basis_to_json(const FieldBasis& B) {
    Json out = Json::array();
    for (const auto& e : B.elements()) out.push_back(element_to_string(e));
    return out;
}

inline FieldBasis basis_from_json(const Field& f, const Json& j) {
    std::vector<FieldElement> elems;
    for (const auto& s : j) elems.push_back(element_from_string(f, s.get<std::string>()));
    return FieldBasis(std::move(elems));
}

inline Json mub_to_json(const MubFamily& fam) {
    Json bases = Json::array();
    for (const auto& b : fam.bases) {
        Json vectors = Json::array();
        for (std::size_t u = 0; u < b.vectors.size(); ++u)
            vectors.push_back(Json{{"label", element_to_string(fam.field.element(static_cast<int>(u)))},
                                   {"amplitudes", vector_to_json(b.vectors[u])}});
        bases.push_back(Json{{"striation", b.striation_index},
                             {"ray_direction", point_to_json(b.direction)},
                             {"vectors", vectors}});
    }
    return Json{{"field", field_to_json(fam.field)}, {"bases", bases}};
}

// Net files carry the construction data only; projectors are derived.
inline Json net_to_json(const QuantumNet& net) {
    Json labels = Json::array();
    for (const auto& l : net.choice().labels) labels.push_back(element_to_string(l));
    return Json{{"field", field_to_json(net.field())},
                {"pair", Json{{"E", basis_to_json(net.pair().E)}, {"F", basis_to_json(net.pair().F)}}},
                {"choice", labels}};
}

inline QuantumNet net_from_json(const Json& j, int cap = kDefaultFieldCap) {
    Field f = field_from_json(j.at("field"), cap);
    FieldBasis E = basis_from_json(f, j.at("pair").at("E"));
    FieldBasis F = basis_from_json(f, j.at("pair").at("F"));
    BasisPair pair = validate_basis_pair(E, F);
    RayChoice choice;
    for (const auto& s : j.at("choice")) choice.labels.push_back(element_from_string(f, s.get<std::string>()));
    return build_net(f, pair, choice);
}

// Wigner map rows are printed p from high to low so the JSON matches the
// heatmap orientation (origin lower left).
inline Json wigner_to_json(const WignerMap& W) {
    const int N = W.field.size();
    Json rows = Json::array();
    for (int pi = N - 1; pi >= 0; --pi) {
        Json row = Json::array();
        for (int qi = 0; qi < N; ++qi) row.push_back(round_sig(W.values(qi, pi)));
        rows.push_back(std::move(row));
    }
    return Json{{"field", field_to_json(W.field)},
                {"layout", "rows are p = N-1 .. 0, columns are q = 0 .. N-1"},
                {"values", rows}};
}

inline Json probabilities_to_json(const Field& f, const LineProbabilities& P) {
    Json rows = Json::array();
    for (const auto& striation : P.values) {
        Json row = Json::array();
        for (double v : striation) row.push_back(round_sig(v));
        rows.push_back(std::move(row));
    }
    return Json{{"field", field_to_json(f)}, {"probs", rows}};
}

inline LineProbabilities probabilities_from_json(const Json& j) {
    LineProbabilities P;
    for (const auto& row : j.at("probs")) {
        std::vector<double> vals;
        for (const auto& v : row) vals.push_back(v.get<double>());
        P.values.push_back(std::move(vals));
    }
    return P;
}

// State files: {"amplitudes": [...]} for a pure state or {"matrix": [[...]]}
// for a density matrix. Entries are [re, im] pairs or plain reals.
inline Matrix state_from_json(const Json& j) {
    if (j.contains("matrix")) {
        Matrix rho = matrix_from_json(j.at("matrix"));
        validate_density(rho);
        return rho;
    }
    if (j.contains("amplitudes")) {
        const auto& amp = j.at("amplitudes");
        CVector v(amp.size());
        for (std::size_t i = 0; i < amp.size(); ++i) {
            const Json& cell = amp.at(i);
            v(i) = cell.is_array() ? Complex(cell.at(0).get<double>(), cell.at(1).get<double>())
                                   : Complex(cell.get<double>(), 0.0);
        }
        const double n = v.norm();
        if (n < 1e-12) throw std::invalid_argument("zero state vector");
        v /= n;
        return outer(v);
    }
    throw std::invalid_argument("state file needs 'matrix' or 'amplitudes'");
}

inline Json orbit_report_to_json(const Field& f, const OrbitReport& rep) {
    Json sizes = Json::array();
    for (long s : rep.orbit_sizes) sizes.push_back(s);
    Json orbit_reps = Json::array();
    for (const auto& c : rep.orbit_representatives) {
        Json labels = Json::array();
        for (const auto& l : c.labels) labels.push_back(element_to_string(l));
        orbit_reps.push_back(std::move(labels));
    }
    Json burnside = Json::array();
    for (const auto& e : rep.burnside)
        burnside.push_back(Json{{"class_size", e.class_size}, {"fixed", e.fixed_count}});
    return Json{{"field", field_to_json(f)},
                {"equivalence_classes", rep.representative_count},
                {"orbit_count", rep.orbit_count},
                {"orbit_sizes", sizes},
                {"orbit_representatives", orbit_reps},
                {"burnside", burnside},
                {"burnside_orbit_count", rep.burnside_orbit_count}};
}

// --- text rendering ---------------------------------------------------------

// Rows printed top-down as p = max..0 so the origin lands lower-left.
inline std::string wigner_heatmap(const WignerMap& W) {
    const int N = W.field.size();
    const Field& f = W.field;
    std::size_t label_width = 1;
    for (int i = 0; i < N; ++i)
        label_width = std::max(label_width, element_to_string(f.element(i)).size());
    std::ostringstream out;
    char buf[32];
    for (int pi = N - 1; pi >= 0; --pi) {
        std::string lbl = element_to_string(f.element(pi));
        out << "p=" << lbl << std::string(label_width - lbl.size(), ' ') << " |";
        for (int qi = 0; qi < N; ++qi) {
            std::snprintf(buf, sizeof buf, " %8.4f", round_sig(W.values(qi, pi)));
            out << buf;
        }
        out << "\n";
    }
    out << std::string(label_width + 3, ' ') << "+" << std::string(9 * N, '-') << "\n";
    out << std::string(label_width + 4, ' ');
    for (int qi = 0; qi < N; ++qi) {
        std::string lbl = "q=" + element_to_string(f.element(qi));
        out << " " << lbl << std::string(lbl.size() < 8 ? 8 - lbl.size() : 0, ' ');
    }
    out << "\n";
    return out.str();
}

// Addition and multiplication tables in the documented layout: header row and
// column in element order, cells separated by aligned spaces.
inline std::string field_tables_text(const Field& f) {
    const int N = f.size();
    std::vector<std::string> names;
    std::size_t w = 1;
    for (int i = 0; i < N; ++i) {
        names.push_back(element_to_string(f.element(i)));
        w = std::max(w, names.back().size());
    }
    auto pad = [w](const std::string& s) { return s + std::string(w - s.size(), ' '); };
    auto table = [&](const char* title, const char* op,
                     const std::function<FieldElement(FieldElement, FieldElement)>& apply) {
        std::ostringstream out;
        out << title << "\n" << pad(op) << " |";
        for (int j = 0; j < N; ++j) out << " " << pad(names[j]);
        out << "\n" << std::string(w, '-') << "-+" << std::string((w + 1) * N, '-') << "\n";
        for (int i = 0; i < N; ++i) {
            out << pad(names[i]) << " |";
            for (int j = 0; j < N; ++j)
                out << " " << pad(names[apply(f.element(i), f.element(j)).index()]);
            out << "\n";
        }
        return out.str();
    };
    std::string header = "F_" + std::to_string(N) + " (characteristic " +
                         std::to_string(f.characteristic()) + ", degree " +
                         std::to_string(f.degree()) + ")\n\n";
    return header +
           table("addition", "+", [](FieldElement a, FieldElement b) { return a + b; }) + "\n" +
           table("multiplication", "*", [](FieldElement a, FieldElement b) { return a * b; });
}

// --- presets ----------------------------------------------------------------

// "paper-n4": the F_4 reference net -- pair E = F = (w, 1), all-zero ray
// choice. All bundled golden tables are stated for this net.
inline QuantumNet preset_net(const std::string& name, int cap = kDefaultFieldCap) {
    if (name == "paper-n4") {
        Field f = Field::make(2, 2, cap);
        NetSpace ns(f, default_basis_pair(f));
        return ns.build(ns.zero_choice());
    }
    throw std::invalid_argument("unknown preset: " + name);
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

} // namespace wignerff
