#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>

#include "sprimary/io.hpp"
#include "sprimary/suites.hpp"

using namespace sprimary;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitVacuous = 2;
constexpr int kExitParse = 64;
constexpr int kExitValidation = 65;

struct DocOption {
    std::string inline_json;
    std::string file;

    bool given() const { return !inline_json.empty() || !file.empty(); }
    json load(const char* what) const {
        if (!inline_json.empty() && !file.empty())
            throw ParseError(std::string(what) + ": both inline JSON and a file were given");
        std::string text = inline_json;
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw ParseError(std::string(what) + ": cannot open file " + file);
            text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        }
        try {
            return json::parse(text);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string(what) + ": " + e.what());
        }
    }
};

void add_doc_option(CLI::App* cmd, DocOption& opt, const std::string& name,
                    const std::string& desc) {
    cmd->add_option("--" + name, opt.inline_json, desc + " (inline JSON)");
    cmd->add_option("--" + name + "-file", opt.file, desc + " (path to a JSON file)");
}

std::string ideal_text(const Ideal& I) { return I.str(); }

std::string witness_text(const RingElement& e) { return e.ring->element_str(e.v); }

// one-line certificate rendering: "S-primary: YES (witness s=2)"
void render_verdict_text(std::ostream& os, const std::string& label, bool verdict,
                         const std::optional<RingElement>& witness, const std::string& extra) {
    os << label << ": " << (verdict ? "YES" : "NO");
    if (verdict && witness) os << " (witness s=" << witness_text(*witness) << ")";
    if (!extra.empty()) os << " " << extra;
    os << "\n";
}

int finish_verdict(bool verdict) { return verdict ? kExitOk : kExitRefuted; }

struct CheckArgs {
    std::string predicate;
    DocOption ring, ideal, mset, second;
    bool json_mode = false;
};

const std::set<std::string>& known_predicates() {
    static const std::set<std::string> names = {
        "nonnil",       "prime",         "primary",  "divided",
        "disjoint",     "s-prime",       "s-primary", "irreducible",
        "s-irreducible", "s-finite",     "sft",      "s-sft",
        "radically-s-finite", "s-noetherian-spectrum"};
    return names;
}

int run_check(const CheckArgs& a, int size_cap) {
    if (!known_predicates().count(a.predicate))
        throw ParseError("unknown predicate '" + a.predicate + "'");
    RingPtr R = construct_ring(a.ring.load("--ring"), size_cap);
    std::optional<MultiplicativeSet> S;
    if (a.mset.given()) S = mset_from_json(R, a.mset.load("--mset"));
    std::optional<Ideal> I;
    if (a.ideal.given()) I = ideal_from_json(R, a.ideal.load("--ideal"));
    auto need_ideal = [&]() -> const Ideal& {
        if (!I) throw ParseError("this predicate needs --ideal");
        return *I;
    };
    auto need_mset = [&]() -> const MultiplicativeSet& {
        if (!S) throw ParseError("this predicate needs --mset");
        return *S;
    };
    json out{{"predicate", a.predicate}};
    bool verdict = false;
    std::string label = a.predicate;

    if (a.predicate == "nonnil") {
        verdict = is_nonnil(need_ideal());
        out["verdict"] = verdict;
        if (!a.json_mode) render_verdict_text(std::cout, "nonnil", verdict, std::nullopt, "");
    } else if (a.predicate == "prime") {
        verdict = is_prime_ideal(need_ideal());
        out["verdict"] = verdict;
        if (!a.json_mode) render_verdict_text(std::cout, "prime", verdict, std::nullopt, "");
    } else if (a.predicate == "primary") {
        verdict = is_primary(need_ideal());
        out["verdict"] = verdict;
        if (!a.json_mode) render_verdict_text(std::cout, "primary", verdict, std::nullopt, "");
    } else if (a.predicate == "divided") {
        verdict = is_divided(need_ideal());
        out["verdict"] = verdict;
        if (!a.json_mode) render_verdict_text(std::cout, "divided", verdict, std::nullopt, "");
    } else if (a.predicate == "disjoint") {
        verdict = disjoint_from(need_ideal(), need_mset());
        out["verdict"] = verdict;
        if (!a.json_mode) render_verdict_text(std::cout, "disjoint", verdict, std::nullopt, "");
    } else if (a.predicate == "s-prime" || a.predicate == "s-primary") {
        SPrimaryCertificate c = a.predicate == "s-prime" ? is_s_prime(need_ideal(), need_mset())
                                                         : is_s_primary(need_ideal(), need_mset());
        verdict = c.verdict;
        out = certificate_to_json(c, R);
        out["predicate"] = a.predicate;
        if (!a.json_mode)
            render_verdict_text(std::cout, a.predicate == "s-prime" ? "S-prime" : "S-primary",
                                c.verdict, c.witness, "");
    } else if (a.predicate == "irreducible") {
        verdict = is_irreducible(need_ideal());
        out["verdict"] = verdict;
        if (!a.json_mode) render_verdict_text(std::cout, "irreducible", verdict, std::nullopt, "");
    } else if (a.predicate == "s-irreducible") {
        IrreducibilityCertificate c = is_s_irreducible(need_ideal(), need_mset());
        verdict = c.verdict;
        out = certificate_to_json(c, R);
        out["predicate"] = a.predicate;
        std::string extra;
        if (c.counterexample)
            extra = "(split " + ideal_text(c.counterexample->left) + " and " +
                    ideal_text(c.counterexample->right) + ")";
        if (!a.json_mode)
            render_verdict_text(std::cout, "S-irreducible", c.verdict, std::nullopt, extra);
    } else if (a.predicate == "s-finite" || a.predicate == "sft" || a.predicate == "s-sft" ||
               a.predicate == "radically-s-finite") {
        SFiniteCertificate c;
        std::string label2;
        if (a.predicate == "s-finite") {
            c = is_s_finite(need_ideal(), need_mset());
            label2 = "S-finite";
        } else if (a.predicate == "sft") {
            c = a.second.given() ? is_sft_with(need_ideal(),
                                               ideal_from_json(R, a.second.load("--fg")))
                                 : is_sft(need_ideal());
            label2 = "SFT";
        } else if (a.predicate == "s-sft") {
            c = is_s_sft(need_ideal(), need_mset());
            label2 = "S-SFT";
        } else {
            c = is_radically_s_finite(need_ideal(), need_mset());
            label2 = "radically-S-finite";
        }
        verdict = c.verdict;
        out = certificate_to_json(c, R);
        out["predicate"] = a.predicate;
        std::string extra;
        if (c.exponent) extra = "(exponent n=" + std::to_string(*c.exponent) + ")";
        if (!a.json_mode) render_verdict_text(std::cout, label2, c.verdict, c.witness, extra);
    } else if (a.predicate == "s-noetherian-spectrum") {
        SpectrumReport rep = has_s_noetherian_spectrum(R, need_mset());
        verdict = rep.verdict;
        out = spectrum_to_json(rep, R);
        out["predicate"] = a.predicate;
        if (!a.json_mode) {
            render_verdict_text(std::cout, "S-noetherian-spectrum", rep.verdict, std::nullopt,
                                "(" + std::to_string(rep.primes.size()) + " prime(s))");
            for (auto& e : rep.primes)
                std::cout << "  prime " << ideal_text(e.prime) << ": "
                          << (e.cert.verdict ? "radically S-finite" : "NOT radically S-finite")
                          << "\n";
        }
    } else {
        throw ParseError("unknown predicate '" + a.predicate + "'");
    }
    if (a.json_mode) std::cout << out.dump(2) << "\n";
    return finish_verdict(verdict);
}

void render_decomposition_text(std::ostream& os, const Decomposition& d) {
    os << "decomposition of " << ideal_text(d.target) << ":";
    for (size_t i = 0; i < d.components.size(); ++i)
        os << (i ? " n " : " ") << ideal_text(d.components[i].Q);
    os << "\n";
    for (const auto& c : d.components)
        os << "  component " << ideal_text(c.Q) << "  radical " << ideal_text(c.P) << "  witness s="
           << witness_text(c.s) << "\n";
    if (d.minimal) os << "minimal: " << (d.minimal->minimal ? "yes" : "no") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"S-primary decomposition toolkit for finite commutative rings and Z"};
    app.require_subcommand(1);
    int size_cap = 0;
    app.add_option("--size-cap", size_cap,
                   "finite ring size cap (default 4096, or SPRIMARY_SIZE_CAP)");
    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit exactly one JSON document on stdout");

    // ring-info
    auto* cmd_info = app.add_subcommand("ring-info", "construct and describe a ring");
    DocOption info_ring;
    add_doc_option(cmd_info, info_ring, "ring", "ring specification");

    // enumerate-ideals
    auto* cmd_enum = app.add_subcommand("enumerate-ideals", "list every ideal of a finite ring");
    DocOption enum_ring;
    add_doc_option(cmd_enum, enum_ring, "ring", "ring specification");

    // check <predicate>
    auto* cmd_check = app.add_subcommand("check", "decide an ideal predicate");
    CheckArgs check_args;
    cmd_check->add_option("predicate", check_args.predicate,
                          "one of: nonnil prime primary divided disjoint s-prime s-primary "
                          "irreducible s-irreducible s-finite sft s-sft radically-s-finite "
                          "s-noetherian-spectrum")
        ->required();
    add_doc_option(cmd_check, check_args.ring, "ring", "ring specification");
    add_doc_option(cmd_check, check_args.ideal, "ideal", "ideal document");
    add_doc_option(cmd_check, check_args.mset, "mset", "multiplicative set document");
    add_doc_option(cmd_check, check_args.second, "fg", "prescribed finitely generated sub-ideal");

    // decompose
    auto* cmd_dec = app.add_subcommand("decompose", "compute an S-primary decomposition");
    DocOption dec_ring, dec_ideal, dec_mset;
    bool dec_minimalize = false;
    add_doc_option(cmd_dec, dec_ring, "ring", "ring specification");
    add_doc_option(cmd_dec, dec_ideal, "ideal", "ideal document");
    add_doc_option(cmd_dec, dec_mset, "mset", "multiplicative set document");
    cmd_dec->add_flag("--minimalize", dec_minimalize, "minimalize the decomposition before output");

    // minimalize
    auto* cmd_min = app.add_subcommand("minimalize", "rewrite a decomposition into a minimal one");
    DocOption min_ring, min_mset, min_doc;
    add_doc_option(cmd_min, min_ring, "ring", "ring specification");
    add_doc_option(cmd_min, min_mset, "mset", "multiplicative set document");
    add_doc_option(cmd_min, min_doc, "decomposition", "decomposition document");

    // verify-minimality
    auto* cmd_vm = app.add_subcommand("verify-minimality", "check both minimality conditions");
    DocOption vm_ring, vm_mset, vm_doc;
    add_doc_option(cmd_vm, vm_ring, "ring", "ring specification");
    add_doc_option(cmd_vm, vm_mset, "mset", "multiplicative set document");
    add_doc_option(cmd_vm, vm_doc, "decomposition", "decomposition document");

    // verify <suite|all>
    auto* cmd_ver = app.add_subcommand("verify", "run a verification suite over a corpus");
    std::string suite_name;
    cmd_ver->add_option("suite", suite_name, "suite name or 'all'")->required();
    DocOption ver_corpus;
    add_doc_option(cmd_ver, ver_corpus, "corpus", "corpus spec, or the word 'default'");
    unsigned ver_seed = 0;
    bool ver_seed_set = false;
    cmd_ver->add_option("--seed", ver_seed, "override the corpus seed")
        ->each([&](const std::string&) { ver_seed_set = true; });

    // corpus
    auto* cmd_cor = app.add_subcommand("corpus", "list the generated (ring, S) corpus");
    DocOption cor_spec;
    add_doc_option(cmd_cor, cor_spec, "corpus", "corpus spec, or the word 'default'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }

    auto load_corpus_spec = [&](const DocOption& opt) {
        if (!opt.given() || opt.inline_json == "default") return CorpusSpec::defaults();
        return CorpusSpec::from_json(opt.load("--corpus"));
    };

    try {
        if (cmd_info->parsed()) {
            RingPtr R = construct_ring(info_ring.load("--ring"), size_cap);
            json out{{"kind", R->spec()["kind"]}, {"spec", R->spec()}};
            if (R->is_finite()) {
                Ideal nil = nilradical(R);
                out["size"] = R->size();
                out["units"] = R->unit_set().count();
                out["ideals"] = json(enumerate_ideals(R).size());
                out["nilradical"] = ideal_to_json(nil);
                if (!json_mode) {
                    std::cout << "ring: " << R->spec().dump() << "\n"
                              << "size: " << R->size() << "\n"
                              << "units: " << R->unit_set().count() << "\n"
                              << "ideals: " << enumerate_ideals(R).size() << "\n"
                              << "nilradical: " << ideal_text(nil) << "\n";
                }
            } else {
                out["size"] = "infinite";
                if (!json_mode)
                    std::cout << "ring: " << R->spec().dump() << "\nsize: infinite\n";
            }
            if (json_mode) std::cout << out.dump(2) << "\n";
            return kExitOk;
        }
        if (cmd_enum->parsed()) {
            RingPtr R = construct_ring(enum_ring.load("--ring"), size_cap);
            auto ideals = enumerate_ideals(R);
            if (json_mode) {
                json out = json::array();
                for (auto& I : ideals) out.push_back(ideal_to_json(I));
                std::cout << json{{"ideals", out}}.dump(2) << "\n";
            } else {
                std::cout << ideals.size() << " ideal(s)\n";
                for (auto& I : ideals)
                    std::cout << "  " << ideal_text(I) << "  [" << I.elems().count()
                              << " element(s)]\n";
            }
            return kExitOk;
        }
        if (cmd_check->parsed()) {
            check_args.json_mode = json_mode;
            return run_check(check_args, size_cap);
        }
        if (cmd_dec->parsed()) {
            RingPtr R = construct_ring(dec_ring.load("--ring"), size_cap);
            MultiplicativeSet S = mset_from_json(R, dec_mset.load("--mset"));
            Ideal I = ideal_from_json(R, dec_ideal.load("--ideal"));
            std::optional<Decomposition> d;
            if (R->is_finite())
                d = decompose_finite(I, S);
            else
                d = decompose_integers(I, S);
            if (!d) {
                if (json_mode)
                    std::cout << json{{"decomposable", false}}.dump(2) << "\n";
                else
                    std::cout << "no S-primary decomposition exists\n";
                return kExitRefuted;
            }
            if (dec_minimalize) d = minimalize(I, S, *d);
            if (json_mode)
                std::cout << decomposition_to_json(*d).dump(2) << "\n";
            else
                render_decomposition_text(std::cout, *d);
            return kExitOk;
        }
        if (cmd_min->parsed()) {
            RingPtr R = construct_ring(min_ring.load("--ring"), size_cap);
            MultiplicativeSet S = mset_from_json(R, min_mset.load("--mset"));
            json doc = min_doc.load("--decomposition");
            Decomposition input = decomposition_from_json(R, S, doc);
            Decomposition out = minimalize(input.target, S, input);
            if (json_mode)
                std::cout << decomposition_to_json(out).dump(2) << "\n";
            else
                render_decomposition_text(std::cout, out);
            return kExitOk;
        }
        if (cmd_vm->parsed()) {
            RingPtr R = construct_ring(vm_ring.load("--ring"), size_cap);
            MultiplicativeSet S = mset_from_json(R, vm_mset.load("--mset"));
            Decomposition d = decomposition_from_json(R, S, vm_doc.load("--decomposition"));
            MinimalityReport rep = verify_minimality(d, S);
            if (json_mode) {
                std::cout << minimality_to_json(rep).dump(2) << "\n";
            } else {
                std::cout << "condition 1 (distinct saturated radicals): "
                          << (rep.distinct_saturated_radicals ? "YES" : "NO") << "\n";
                for (size_t i = 0; i < rep.redundant_saturated.size(); ++i)
                    std::cout << "condition 2, component " << i << ": "
                              << (rep.redundant_saturated[i] ? "REDUNDANT" : "needed")
                              << (rep.redundant_plain[i] ? " (plain form: REDUNDANT)"
                                                         : " (plain form: needed)")
                              << "\n";
                std::cout << "forms agree: " << (rep.forms_agree ? "YES" : "NO") << "\n"
                          << "minimal: " << (rep.minimal ? "YES" : "NO") << "\n";
            }
            return rep.minimal ? kExitOk : kExitRefuted;
        }
        if (cmd_ver->parsed()) {
            std::vector<std::string> names;
            if (suite_name == "all")
                names = suite_names();
            else if (std::find(suite_names().begin(), suite_names().end(), suite_name) !=
                     suite_names().end())
                names = {suite_name};
            else
                throw ParseError("unknown suite '" + suite_name + "'");
            CorpusSpec spec = load_corpus_spec(ver_corpus);
            if (ver_seed_set) spec.seed = ver_seed;
            json reports = json::array();
            bool any_fail = false, any_vacuous = false;
            for (const auto& n : names) {
                SuiteReport rep = run_suite(n, spec);
                reports.push_back(rep.to_json());
                if (rep.verdict() == "fail") any_fail = true;
                if (rep.verdict() == "vacuous") any_vacuous = true;
                if (!json_mode) {
                    std::cout << "suite " << rep.suite << ": ";
                    if (rep.verdict() == "pass")
                        std::cout << "PASS";
                    else if (rep.verdict() == "fail")
                        std::cout << "FAIL";
                    else
                        std::cout << "VACUOUS";
                    std::cout << " (" << rep.instances << " instance(s), " << rep.not_applicable
                              << " not applicable, " << rep.counterexamples.size()
                              << " counterexamples, " << int(rep.wall_ms) << " ms)\n";
                    for (size_t i = 0; i < rep.counterexamples.size() && i < 5; ++i)
                        std::cout << "  counterexample [" << rep.counterexamples[i].property
                                  << "]: " << rep.counterexamples[i].instance.dump() << "\n";
                }
            }
            if (json_mode) std::cout << json{{"reports", reports}}.dump(2) << "\n";
            if (any_fail) return kExitRefuted;
            if (any_vacuous) return kExitVacuous;
            return kExitOk;
        }
        if (cmd_cor->parsed()) {
            CorpusSpec spec = load_corpus_spec(cor_spec);
            auto corpus = generate_corpus(spec);
            if (json_mode) {
                json out = json::array();
                for (auto& [R, S] : corpus)
                    out.push_back(json{{"ring", R->spec()}, {"mset", mset_to_json(S)}});
                std::cout << json{{"pairs", out}}.dump(2) << "\n";
            } else {
                std::cout << corpus.size() << " (ring, S) pair(s)\n";
                for (auto& [R, S] : corpus)
                    std::cout << "  " << R->spec().dump() << "  S=" << S.str() << "\n";
            }
            return kExitOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitParse;
}
