#include "kzmpl/json_io.hpp"

namespace kzmpl {

namespace {

nlohmann::json integer_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<long>(z.get_si());
    return z.get_str();
}

mpz_class integer_from_json(const nlohmann::json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    return mpz_class(static_cast<long>(j.get<long long>()));
}

} // namespace

nlohmann::json to_json(const WordPoly& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [w, c] : p.terms()) {
        out.push_back({{"word", w.to_string()},
                       {"num", integer_to_json(c.get_num())},
                       {"den", integer_to_json(c.get_den())}});
    }
    return out;
}

WordPoly word_poly_from_json(const nlohmann::json& j) {
    WordPoly p;
    for (const auto& item : j) {
        Rational c(integer_from_json(item.at("num")), integer_from_json(item.at("den")));
        c.canonicalize();
        p.add(Word::parse(item.at("word").get<std::string>()), c);
    }
    return p;
}

nlohmann::json to_json(const NCSeriesQ& s) {
    nlohmann::json entries = nlohmann::json::array();
    for (const Word& w : Word::all_up_to_weight(s.order())) {
        const Rational& c = s.coeff(w);
        if (sgn(c) == 0) continue;
        entries.push_back({{"word", w.to_string()},
                           {"num", integer_to_json(c.get_num())},
                           {"den", integer_to_json(c.get_den())}});
    }
    return {{"order", s.order()}, {"entries", entries}};
}

nlohmann::json to_json(const NCSeriesC& s) {
    nlohmann::json entries = nlohmann::json::array();
    for (const Word& w : Word::all_up_to_weight(s.order())) {
        const Complex& c = s.coeff(w);
        if (c == Complex(0.0)) continue;
        entries.push_back(
            {{"word", w.to_string()}, {"re", c.real()}, {"im", c.imag()}});
    }
    return {{"order", s.order()}, {"entries", entries}};
}

NCSeriesC nc_series_c_from_json(const nlohmann::json& j) {
    NCSeriesC s(j.at("order").get<int>());
    for (const auto& item : j.at("entries")) {
        s.set_coeff(Word::parse(item.at("word").get<std::string>()),
                    Complex(item.at("re").get<double>(), item.at("im").get<double>()));
    }
    return s;
}

nlohmann::json to_json(const Associator& phi) {
    nlohmann::json entries = nlohmann::json::array();
    for (const Word& w : Word::all_up_to_weight(phi.series.order())) {
        const Complex& c = phi.series.coeff(w);
        double err = phi.errors[w.canonical_index()];
        if (c == Complex(0.0) && err == 0.0) continue;
        entries.push_back({{"word", w.to_string()},
                           {"re", c.real()},
                           {"im", c.imag()},
                           {"err", err}});
    }
    return {{"order", phi.series.order()}, {"entries", entries}};
}

nlohmann::json to_json(const ZetaTable& table) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [w, e] : table.entries()) {
        out.push_back({{"word", w.to_string()},
                       {"mzv_indices", w.indices_string()},
                       {"value", e.value},
                       {"err", e.err}});
    }
    return out;
}

} // namespace kzmpl
