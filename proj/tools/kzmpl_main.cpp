// kzmpl command-line front end.  Talks to the library exclusively through
// the C interface in kzmpl.h; vendor headers are used only for argument
// parsing and report rendering.

#include <kzmpl.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

struct CtxDeleter {
    void operator()(kzmpl_ctx* c) const { kzmpl_ctx_free(c); }
};
struct PolyDeleter {
    void operator()(kzmpl_poly* p) const { kzmpl_poly_free(p); }
};
using CtxPtr = std::unique_ptr<kzmpl_ctx, CtxDeleter>;
using PolyPtr = std::unique_ptr<kzmpl_poly, PolyDeleter>;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    kzmpl_string_free(s);
    return out;
}

int fail(int rc) {
    std::cerr << "error: " << kzmpl_last_error() << "\n";
    return rc;
}

// Accepts "0.5", "0.8-0.3i", "-0.2+0.1i", "0.3i".
bool parse_complex(const std::string& text, double& re, double& im) {
    re = im = 0.0;
    if (text.empty()) return false;
    std::size_t pos = 0;
    double first;
    try {
        first = std::stod(text, &pos);
    } catch (const std::exception&) {
        return false;
    }
    if (pos == text.size()) {
        re = first;
        return true;
    }
    if (text[pos] == 'i' && pos + 1 == text.size()) {
        im = first;
        return true;
    }
    std::size_t pos2 = 0;
    double second;
    try {
        second = std::stod(text.substr(pos), &pos2);
    } catch (const std::exception&) {
        return false;
    }
    pos += pos2;
    if (pos + 1 == text.size() && text[pos] == 'i') {
        re = first;
        im = second;
        return true;
    }
    return false;
}

std::string format_complex(double re, double im) {
    char buf[64];
    if (im == 0.0)
        std::snprintf(buf, sizeof(buf), "%.12g", re);
    else
        std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", re, im);
    return buf;
}

struct CommonOpts {
    int weight = -1;
    double tol = 1e-12;
    std::string format = "text";
    std::vector<std::string> z_texts;
    std::uint64_t seed = 12345;
    int steps = 2000;
    std::vector<std::string> perturbations;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_z = true) {
    cmd->add_option("--weight", opts.weight, "truncation weight N (suite default if omitted)")
        ->check(CLI::Range(0, 10));
    cmd->add_option("--tol", opts.tol, "target tolerance (>= 1e-12)");
    cmd->add_option("--format", opts.format, "output format: json, csv, text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    if (with_z)
        cmd->add_option("--z", opts.z_texts, "evaluation point(s), e.g. 0.5 or 0.8-0.3i");
    cmd->add_option("--seed", opts.seed, "seed for randomized property sweeps");
    cmd->add_option("--steps", opts.steps, "ODE transport step count");
    cmd->add_option("--perturb", opts.perturbations,
                    "zeta table perturbation WORD:DELTA, e.g. \"(2,1)\":1e-3");
}

int apply_perturbations(kzmpl_ctx* ctx, const std::vector<std::string>& specs) {
    for (const std::string& entry : specs) {
        auto colon = entry.rfind(':');
        if (colon == std::string::npos) {
            std::cerr << "error: --perturb expects WORD:DELTA, got " << entry << "\n";
            return KZMPL_ERR_PARSE;
        }
        double delta;
        try {
            delta = std::stod(entry.substr(colon + 1));
        } catch (const std::exception&) {
            std::cerr << "error: bad perturbation delta in " << entry << "\n";
            return KZMPL_ERR_PARSE;
        }
        int rc = kzmpl_ctx_perturb_zeta(ctx, entry.substr(0, colon).c_str(), delta);
        if (rc != KZMPL_OK) return fail(rc);
    }
    return KZMPL_OK;
}

int render_poly(const kzmpl_poly* poly, const std::string& format) {
    if (format == "json") {
        char* s = nullptr;
        if (int rc = kzmpl_poly_to_json(poly, &s); rc != KZMPL_OK) return fail(rc);
        std::cout << take_string(s) << "\n";
        return 0;
    }
    if (format == "csv") {
        char* s = nullptr;
        if (int rc = kzmpl_poly_to_json(poly, &s); rc != KZMPL_OK) return fail(rc);
        json j = json::parse(take_string(s));
        std::cout << "word,num,den\n";
        for (const auto& t : j)
            std::cout << t["word"].get<std::string>() << ","
                      << t["num"].dump() << "," << t["den"].dump() << "\n";
        return 0;
    }
    char* s = nullptr;
    if (int rc = kzmpl_poly_to_text(poly, &s); rc != KZMPL_OK) return fail(rc);
    std::cout << take_string(s) << "\n";
    return 0;
}

int run_eval(const std::string& kind, const std::vector<std::string>& words,
             const CommonOpts& opts) {
    if (kind == "li" || kind == "zeta") {
        CtxPtr ctx(kzmpl_ctx_new(10, opts.tol));
        if (!ctx) return fail(KZMPL_ERR_DOMAIN);
        if (kind == "zeta") {
            double value, err;
            if (int rc = kzmpl_zeta(ctx.get(), words[0].c_str(), &value, &err);
                rc != KZMPL_OK)
                return fail(rc);
            if (opts.format == "json")
                std::cout << json{{"kind", "zeta"},
                                  {"word", words[0]},
                                  {"value", value},
                                  {"err", err}}
                                 .dump()
                          << "\n";
            else if (opts.format == "csv")
                std::cout << "kind,word,value,err\nzeta," << words[0] << ","
                          << value << "," << err << "\n";
            else
                std::printf("zeta(%s) = %.12f (+/- %.2e)\n", words[0].c_str(), value,
                            err);
            return 0;
        }
        if (opts.z_texts.empty()) {
            std::cerr << "error: eval li needs --z\n";
            return KZMPL_ERR_PARSE;
        }
        for (const std::string& ztext : opts.z_texts) {
            double zre, zim;
            if (!parse_complex(ztext, zre, zim)) {
                std::cerr << "error: bad z value " << ztext << "\n";
                return KZMPL_ERR_PARSE;
            }
            double re, im, err;
            if (int rc = kzmpl_li(ctx.get(), words[0].c_str(), zre, zim, &re, &im, &err);
                rc != KZMPL_OK)
                return fail(rc);
            if (opts.format == "json")
                std::cout << json{{"kind", "li"},      {"word", words[0]},
                                  {"z", {zre, zim}},   {"re", re},
                                  {"im", im},          {"err", err}}
                                 .dump()
                          << "\n";
            else if (opts.format == "csv")
                std::cout << "kind,word,z,re,im,err\nli," << words[0] << ","
                          << format_complex(zre, zim) << "," << re << "," << im << ","
                          << err << "\n";
            else
                std::printf("Li(%s; %s) = %s (+/- %.2e)\n", words[0].c_str(),
                            format_complex(zre, zim).c_str(),
                            format_complex(re, im).c_str(), err);
        }
        return 0;
    }

    // symbolic kinds
    PolyPtr a;
    {
        kzmpl_poly* raw = nullptr;
        if (int rc = kzmpl_poly_parse(words[0].c_str(), &raw); rc != KZMPL_OK)
            return fail(rc);
        a.reset(raw);
    }
    kzmpl_poly* out = nullptr;
    int rc;
    if (kind == "shuffle" || kind == "pair") {
        if (words.size() < 2) {
            std::cerr << "error: eval " << kind << " needs two word arguments\n";
            return KZMPL_ERR_PARSE;
        }
        kzmpl_poly* braw = nullptr;
        if ((rc = kzmpl_poly_parse(words[1].c_str(), &braw)) != KZMPL_OK)
            return fail(rc);
        PolyPtr b(braw);
        if (kind == "pair") {
            char* s = nullptr;
            if ((rc = kzmpl_poly_pair(a.get(), b.get(), &s)) != KZMPL_OK)
                return fail(rc);
            std::cout << take_string(s) << "\n";
            return 0;
        }
        rc = kzmpl_poly_shuffle(a.get(), b.get(), &out);
    } else if (kind == "reg0") {
        rc = kzmpl_poly_reg0(a.get(), &out);
    } else if (kind == "reg1") {
        rc = kzmpl_poly_reg1(a.get(), &out);
    } else if (kind == "reg10") {
        rc = kzmpl_poly_reg10(a.get(), &out);
    } else if (kind == "antipode") {
        rc = kzmpl_poly_antipode(a.get(), &out);
    } else if (kind == "tau") {
        rc = kzmpl_poly_tau(a.get(), &out);
    } else if (kind == "tstar") {
        rc = kzmpl_poly_tstar(a.get(), &out);
    } else {
        std::cerr << "error: unknown eval kind " << kind << "\n";
        return KZMPL_ERR_PARSE;
    }
    if (rc != KZMPL_OK) return fail(rc);
    PolyPtr keep(out);
    return render_poly(out, opts.format);
}

int render_table_like(const std::string& payload, const std::string& format,
                      bool associator) {
    if (format == "json") {
        std::cout << payload << "\n";
        return 0;
    }
    json j = json::parse(payload);
    if (associator) {
        const auto& entries = j["entries"];
        if (format == "csv") {
            std::cout << "word,re,im,err\n";
            for (const auto& e : entries)
                std::cout << e["word"].get<std::string>() << "," << e["re"].get<double>()
                          << "," << e["im"].get<double>() << "," << e["err"].get<double>()
                          << "\n";
        } else {
            std::printf("Drinfel'd associator, order %d\n", j["order"].get<int>());
            for (const auto& e : entries) {
                std::string w = e["word"].get<std::string>();
                std::printf("  %-10s %+.12f (+/- %.2e)\n", w.empty() ? "e" : w.c_str(),
                            e["re"].get<double>(), e["err"].get<double>());
            }
        }
    } else {
        if (format == "csv") {
            std::cout << "word,mzv_indices,value,err\n";
            for (const auto& e : j)
                std::cout << e["word"].get<std::string>() << ","
                          << "\"" << e["mzv_indices"].get<std::string>() << "\"" << ","
                          << e["value"].get<double>() << "," << e["err"].get<double>()
                          << "\n";
        } else {
            for (const auto& e : j) {
                std::string w = e["word"].get<std::string>();
                std::printf("  %-10s %-12s %.12f (+/- %.2e)\n",
                            w.empty() ? "e" : w.c_str(),
                            e["mzv_indices"].get<std::string>().c_str(),
                            e["value"].get<double>(), e["err"].get<double>());
            }
        }
    }
    return 0;
}

int render_report(const std::string& payload, const std::string& format, int status) {
    if (format == "json") {
        std::cout << payload << "\n";
    } else if (format == "csv") {
        json j = json::parse(payload);
        std::cout << "check,word,residual\n";
        for (const auto& pw : j["per_word"])
            std::cout << j["check"].get<std::string>() << ","
                      << pw["word"].get<std::string>() << ","
                      << pw["residual"].get<double>() << "\n";
        std::cout << "# max_residual=" << j["max_residual"].get<double>()
                  << " tolerance=" << j["tolerance"].get<double>()
                  << " pass=" << (j["pass"].get<bool>() ? "true" : "false") << "\n";
    } else {
        json j = json::parse(payload);
        std::printf("suite:        %s\n", j["check"].get<std::string>().c_str());
        std::printf("N:            %d\n", j["N"].get<int>());
        std::printf("tolerance:    %.3e\n", j["tolerance"].get<double>());
        std::printf("max residual: %.3e\n", j["max_residual"].get<double>());
        std::printf("result:       %s\n", status == KZMPL_OK ? "PASS" : "FAIL");
        if (!j["per_word"].empty()) {
            std::printf("worst words:\n");
            for (const auto& pw : j["per_word"]) {
                std::string w = pw["word"].get<std::string>();
                std::printf("  %-10s %.3e\n", w.empty() ? "e" : w.c_str(),
                            pw["residual"].get<double>());
            }
        }
        if (!j["details"].empty()) std::printf("details: %s\n", j["details"].dump().c_str());
    }
    return status;
}

} // namespace

int main(int argc, char** argv) {
    std::cout.precision(17);
    CLI::App app{"multiple polylogarithms, multiple zeta values, and the KZ "
                 "connection problem: evaluation, tables, verification"};
    app.require_subcommand(1);

    std::string eval_kind;
    std::vector<std::string> eval_words;
    CommonOpts eval_opts;
    CLI::App* eval = app.add_subcommand("eval", "evaluate an operation on words");
    eval->add_option("kind", eval_kind,
                     "li, zeta, shuffle, pair, reg0, reg1, reg10, antipode, tau, tstar")
        ->required();
    eval->add_option("words", eval_words, "word argument(s)")->expected(1, 2);
    add_common(eval, eval_opts);

    CommonOpts assoc_opts;
    assoc_opts.weight = 4;
    CLI::App* assoc = app.add_subcommand("associator",
                                         "export Drinfel'd associator coefficients");
    add_common(assoc, assoc_opts, false);

    CommonOpts table_opts;
    table_opts.weight = 6;
    CLI::App* table = app.add_subcommand("table", "export the zeta value table");
    add_common(table, table_opts, false);

    std::string suite;
    CommonOpts verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "algebra, gif, duality, connection, ode, rh")
        ->required()
        ->check(CLI::IsMember({"algebra", "gif", "duality", "connection", "ode", "rh"}));
    add_common(verify, verify_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : KZMPL_ERR_PARSE;
    }

    if (eval->parsed()) {
        if (eval_words.empty()) {
            std::cerr << "error: eval needs a word argument\n";
            return KZMPL_ERR_PARSE;
        }
        return run_eval(eval_kind, eval_words, eval_opts);
    }

    if (assoc->parsed() || table->parsed()) {
        const CommonOpts& opts = assoc->parsed() ? assoc_opts : table_opts;
        CtxPtr ctx(kzmpl_ctx_new(10, opts.tol));
        if (!ctx) return fail(KZMPL_ERR_DOMAIN);
        if (int rc = apply_perturbations(ctx.get(), opts.perturbations); rc != KZMPL_OK)
            return rc;
        char* payload = nullptr;
        int rc = assoc->parsed()
                     ? kzmpl_associator_json(ctx.get(), opts.weight, &payload)
                     : kzmpl_zeta_table_json(ctx.get(), opts.weight, &payload);
        if (rc != KZMPL_OK) return fail(rc);
        return render_table_like(take_string(payload), opts.format, assoc->parsed());
    }

    // verify
    CtxPtr ctx(kzmpl_ctx_new(10, 1e-12));
    if (!ctx) return fail(KZMPL_ERR_DOMAIN);
    if (int rc = apply_perturbations(ctx.get(), verify_opts.perturbations);
        rc != KZMPL_OK)
        return rc;
    json options;
    if (verify_opts.weight >= 0) options["weight"] = verify_opts.weight;
    if (verify_opts.tol > 0 && verify_opts.tol != 1e-12)
        options["tol"] = verify_opts.tol;
    options["seed"] = verify_opts.seed;
    options["steps"] = verify_opts.steps;
    if (!verify_opts.z_texts.empty()) {
        json zs = json::array();
        for (const std::string& ztext : verify_opts.z_texts) {
            double re, im;
            if (!parse_complex(ztext, re, im)) {
                std::cerr << "error: bad z value " << ztext << "\n";
                return KZMPL_ERR_PARSE;
            }
            zs.push_back({re, im});
        }
        options["z_points"] = zs;
    }
    char* report = nullptr;
    int rc = kzmpl_verify(ctx.get(), suite.c_str(), options.dump().c_str(), &report);
    if (rc != KZMPL_OK && rc != KZMPL_VERIFY_FAIL) return fail(rc);
    return render_report(take_string(report), verify_opts.format, rc);
}
