#include "ncdef/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace ncdef {

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("expected rational literal \"p/q\"");
    return Rational::parse(j.get<std::string>());
}

json to_json(const Tensor<Rational>& t) {
    json terms = json::array();
    for (const auto& [w, c] : t.terms()) {
        json word = json::array();
        for (auto l : w) word.push_back(static_cast<int>(l));
        terms.push_back({{"word", word}, {"coeff", to_json(c)}});
    }
    return {{"n", t.n()}, {"degree", t.degree()}, {"terms", terms}};
}

Tensor<Rational> tensor_from_json(const json& j) {
    Tensor<Rational> t(j.at("n").get<std::size_t>(), j.at("degree").get<std::size_t>());
    for (const auto& term : j.at("terms")) {
        Word w;
        for (const auto& l : term.at("word")) w.push_back(l.get<std::uint8_t>());
        t.add(w, rational_from_json(term.at("coeff")));
    }
    return t;
}

json to_json(const QuadraticAlgebra& a) {
    json rel = json::array();
    for (const auto& r : a.relations.basis()) rel.push_back(to_json(r));
    return {{"n", a.n}, {"relations", rel}};
}

QuadraticAlgebra algebra_from_json(const json& j) {
    std::size_t n = j.at("n").get<std::size_t>();
    std::vector<Tensor<Rational>> rel;
    for (const auto& r : j.at("relations")) rel.push_back(tensor_from_json(r));
    return QuadraticAlgebra(n, rel);
}

json to_json(const QPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json exps = json::array();
        for (auto x : e) exps.push_back(static_cast<int>(x));
        terms.push_back({{"exponents", exps}, {"coeff", to_json(c)}});
    }
    return {{"n", p.n()}, {"terms", terms}};
}

QPoly poly_from_json(const json& j) {
    QPoly p(j.at("n").get<std::size_t>());
    for (const auto& term : j.at("terms")) {
        Exps e;
        for (const auto& x : term.at("exponents")) e.push_back(x.get<std::uint8_t>());
        p.add(e, rational_from_json(term.at("coeff")));
    }
    return p;
}

json to_json(const QuadBracket& b) {
    json pi = json::array();
    for (std::size_t idx = 0; idx < 6; ++idx) {
        auto [i, j] = QuadBracket::pair_of_index(idx);
        pi.push_back({{"i", i}, {"j", j}, {"poly", to_json(b.pi[idx])}});
    }
    return {{"pi", pi}};
}

QuadBracket bracket_from_json(const json& j) {
    QuadBracket b;
    for (const auto& entry : j.at("pi")) {
        std::size_t i = entry.at("i").get<std::size_t>();
        std::size_t jj = entry.at("j").get<std::size_t>();
        QPoly p = poly_from_json(entry.at("poly"));
        if (p.n() != 4) throw std::invalid_argument("bracket polynomials must have 4 variables");
        b.set(i, jj, std::move(p));
    }
    return b;
}

json to_json(const OneForm& f) {
    json alpha = json::array();
    for (const auto& p : f.alpha) alpha.push_back(to_json(p));
    return {{"alpha", alpha}};
}

OneForm oneform_from_json(const json& j) {
    OneForm f;
    const auto& alpha = j.at("alpha");
    if (alpha.size() != 4) throw std::invalid_argument("one-form needs exactly 4 components");
    for (std::size_t i = 0; i < 4; ++i) f.alpha[i] = poly_from_json(alpha[i]);
    return f;
}

json to_json(const QMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

QMat matrix_from_json(const json& j) {
    std::size_t rows = j.size();
    std::size_t cols = rows ? j[0].size() : 0;
    QMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(j[i][c]);
    return m;
}

json to_json(const DerivationPair& p) {
    return {{"x", to_json(p.x.a)}, {"y", to_json(p.y.a)}};
}

DerivationPair pair_from_json(const json& j) {
    return {LinearVectorField(matrix_from_json(j.at("x"))),
            LinearVectorField(matrix_from_json(j.at("y")))};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

}  // namespace ncdef
