#include "kzmpl.h"

#include <cstring>
#include <string>

#include "kzmpl/errors.hpp"
#include "kzmpl/eval.hpp"
#include "kzmpl/json_io.hpp"
#include "kzmpl/verify.hpp"
#include "kzmpl/words.hpp"

using namespace kzmpl;

struct kzmpl_ctx {
    int weight;
    EvalContext eval;
    std::vector<std::pair<Word, double>> perturbations;
};

struct kzmpl_poly {
    WordPoly poly;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const parse_error& e) {
        g_last_error = e.what();
        return KZMPL_ERR_PARSE;
    } catch (const domain_error& e) {
        g_last_error = e.what();
        return KZMPL_ERR_DOMAIN;
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return KZMPL_ERR_PARSE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return KZMPL_ERR_INTERNAL;
    }
}

int poly_unary(const kzmpl_poly* p, kzmpl_poly** out, WordPoly (*fn)(const WordPoly&)) {
    return guarded([&] {
        if (!p || !out) throw domain_error("null argument");
        *out = new kzmpl_poly{fn(p->poly)};
        return KZMPL_OK;
    });
}

VerifyConfig parse_verify_options(const char* options_json, const kzmpl_ctx* ctx) {
    VerifyConfig config;
    config.perturbations = ctx->perturbations;
    if (!options_json || !*options_json) return config;
    nlohmann::json j = nlohmann::json::parse(options_json);
    if (j.contains("weight")) config.weight = j["weight"].get<int>();
    if (j.contains("tol")) config.tol = j["tol"].get<double>();
    if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("steps")) config.steps = j["steps"].get<int>();
    if (j.contains("z_points"))
        for (const auto& zp : j["z_points"])
            config.z_points.emplace_back(zp.at(0).get<double>(), zp.at(1).get<double>());
    return config;
}

} // namespace

extern "C" {

const char* kzmpl_version(void) { return "0.1.0"; }

const char* kzmpl_last_error(void) { return g_last_error.c_str(); }

void kzmpl_string_free(char* s) { std::free(s); }

kzmpl_ctx* kzmpl_ctx_new(int weight, double tol) {
    kzmpl_ctx* ctx = nullptr;
    int rc = guarded([&] {
        if (weight < 0 || weight > 10)
            throw domain_error("context weight must lie in [0, 10]");
        if (tol < 1e-12) throw domain_error("tolerance must be >= 1e-12");
        EvalOptions opt;
        opt.tol = tol;
        ctx = new kzmpl_ctx{weight, EvalContext(opt), {}};
        return KZMPL_OK;
    });
    return rc == KZMPL_OK ? ctx : nullptr;
}

void kzmpl_ctx_free(kzmpl_ctx* ctx) { delete ctx; }

int kzmpl_ctx_perturb_zeta(kzmpl_ctx* ctx, const char* word, double delta) {
    return guarded([&] {
        if (!ctx || !word) throw domain_error("null argument");
        Word w = Word::parse(word);
        if (!w.is_s10())
            throw domain_error("perturbation target must be an S10 word");
        if (w.weight() > static_cast<std::uint32_t>(ctx->weight))
            throw domain_error("perturbation target beyond context weight");
        ctx->perturbations.emplace_back(w, delta);
        return KZMPL_OK;
    });
}

int kzmpl_poly_parse(const char* text, kzmpl_poly** out) {
    return guarded([&] {
        if (!text || !out) throw domain_error("null argument");
        *out = new kzmpl_poly{WordPoly(Word::parse(text))};
        return KZMPL_OK;
    });
}

void kzmpl_poly_free(kzmpl_poly* p) { delete p; }

int kzmpl_poly_shuffle(const kzmpl_poly* a, const kzmpl_poly* b, kzmpl_poly** out) {
    return guarded([&] {
        if (!a || !b || !out) throw domain_error("null argument");
        *out = new kzmpl_poly{shuffle(a->poly, b->poly)};
        return KZMPL_OK;
    });
}

int kzmpl_poly_reg0(const kzmpl_poly* p, kzmpl_poly** out) {
    return poly_unary(p, out, static_cast<WordPoly (*)(const WordPoly&)>(&reg0));
}
int kzmpl_poly_reg1(const kzmpl_poly* p, kzmpl_poly** out) {
    return poly_unary(p, out, &reg1);
}
int kzmpl_poly_reg10(const kzmpl_poly* p, kzmpl_poly** out) {
    return poly_unary(p, out, static_cast<WordPoly (*)(const WordPoly&)>(&reg10));
}
int kzmpl_poly_antipode(const kzmpl_poly* p, kzmpl_poly** out) {
    return poly_unary(p, out, &antipode);
}
int kzmpl_poly_tau(const kzmpl_poly* p, kzmpl_poly** out) {
    return poly_unary(p, out, &tau);
}
int kzmpl_poly_tstar(const kzmpl_poly* p, kzmpl_poly** out) {
    return poly_unary(p, out, &t_star);
}

int kzmpl_poly_pair(const kzmpl_poly* a, const kzmpl_poly* b, char** out) {
    return guarded([&] {
        if (!a || !b || !out) throw domain_error("null argument");
        Rational r = pair_form(a->poly, b->poly);
        *out = dup_string(r.get_num().get_str() + "/" + r.get_den().get_str());
        return KZMPL_OK;
    });
}

int kzmpl_poly_to_json(const kzmpl_poly* p, char** out) {
    return guarded([&] {
        if (!p || !out) throw domain_error("null argument");
        *out = dup_string(to_json(p->poly).dump());
        return KZMPL_OK;
    });
}

int kzmpl_poly_to_text(const kzmpl_poly* p, char** out) {
    return guarded([&] {
        if (!p || !out) throw domain_error("null argument");
        *out = dup_string(p->poly.to_string());
        return KZMPL_OK;
    });
}

int kzmpl_li(kzmpl_ctx* ctx, const char* word, double z_re, double z_im,
             double* out_re, double* out_im, double* out_err) {
    return guarded([&] {
        if (!ctx || !word || !out_re || !out_im) throw domain_error("null argument");
        Word w = Word::parse(word);
        Complex v = ctx->eval.li(w, Complex(z_re, z_im));
        *out_re = v.real();
        *out_im = v.imag();
        if (out_err) {
            // coarse bound: one tail per factor plus table error on the
            // inversion chart
            double base = ctx->eval.options().tol * (2.0 * w.weight() + 2.0);
            *out_err = base * (1.0 + std::abs(v));
        }
        return KZMPL_OK;
    });
}

int kzmpl_zeta(kzmpl_ctx* ctx, const char* word, double* out_value, double* out_err) {
    return guarded([&] {
        if (!ctx || !word || !out_value) throw domain_error("null argument");
        ZetaEntry e = ctx->eval.zeta(Word::parse(word));
        *out_value = e.value;
        if (out_err) *out_err = e.err;
        return KZMPL_OK;
    });
}

int kzmpl_zeta_reg(kzmpl_ctx* ctx, const char* word, double* out_value,
                   double* out_err) {
    return guarded([&] {
        if (!ctx || !word || !out_value) throw domain_error("null argument");
        ZetaEntry e = ctx->eval.zeta_reg(WordPoly(Word::parse(word)));
        *out_value = e.value;
        if (out_err) *out_err = e.err;
        return KZMPL_OK;
    });
}

int kzmpl_associator_json(kzmpl_ctx* ctx, int order, char** out) {
    return guarded([&] {
        if (!ctx || !out) throw domain_error("null argument");
        if (order < 0 || order > 10)
            throw domain_error("associator order must lie in [0, 10]");
        ZetaTable table = ctx->eval.zeta_table(order);
        for (const auto& [w, delta] : ctx->perturbations)
            if (w.weight() <= static_cast<std::uint32_t>(order))
                table.perturb(w, delta);
        *out = dup_string(to_json(build_associator(table, order)).dump());
        return KZMPL_OK;
    });
}

int kzmpl_zeta_table_json(kzmpl_ctx* ctx, int weight, char** out) {
    return guarded([&] {
        if (!ctx || !out) throw domain_error("null argument");
        if (weight < 0 || weight > 10)
            throw domain_error("table weight must lie in [0, 10]");
        ZetaTable table = ctx->eval.zeta_table(weight);
        for (const auto& [w, delta] : ctx->perturbations)
            if (w.weight() <= static_cast<std::uint32_t>(weight))
                table.perturb(w, delta);
        *out = dup_string(to_json(table).dump());
        return KZMPL_OK;
    });
}

int kzmpl_verify(kzmpl_ctx* ctx, const char* suite, const char* options_json,
                 char** report_json) {
    return guarded([&] {
        if (!ctx || !suite) throw domain_error("null argument");
        VerifyConfig config = parse_verify_options(options_json, ctx);
        VerifyReport rep = run_verify_suite(suite, ctx->eval, config);
        if (report_json) *report_json = dup_string(to_json(rep).dump());
        return rep.pass ? KZMPL_OK : KZMPL_VERIFY_FAIL;
    });
}

} // extern "C"
