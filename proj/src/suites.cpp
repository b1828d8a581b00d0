#include "sprimary/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>

namespace sprimary {

namespace {

constexpr size_t kMaxStoredCounterexamples = 50;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

void add_ce(SuiteReport& rep, std::string property, json instance) {
    if (rep.counterexamples.size() < kMaxStoredCounterexamples)
        rep.counterexamples.push_back({std::move(property), std::move(instance)});
}

std::vector<json> stock_idealizations() {
    auto reduction = [](int n, int m) {
        json a = json::array();
        for (int i = 0; i < n; ++i) a.push_back(i % m);
        return a;
    };
    return {
        json{{"kind", "idealization"},
             {"base", json{{"kind", "zmod"}, {"n", 4}}},
             {"m", 2},
             {"action", reduction(4, 2)}},
        json{{"kind", "idealization"},
             {"base", json{{"kind", "zmod"}, {"n", 9}}},
             {"m", 3},
             {"action", reduction(9, 3)}},
        json{{"kind", "idealization"},
             {"base", json{{"kind", "zmod"}, {"n", 6}}},
             {"m", 3},
             {"action", reduction(6, 3)}},
    };
}

// Per-(ring, S) evaluation context. The S-primary verdict per ideal is
// computed once (and may be overridden by the mutation hook); everything
// downstream consumes these cached verdicts.
struct PairCtx {
    RingPtr R;
    const MultiplicativeSet* S;
    std::vector<Ideal> ideals;
    std::vector<int> sp;  // -1 outside the predicate's domain, else verdict
    std::vector<RingElement> wit;
    Ideal nil;

    std::vector<std::pair<Ideal, RingElement>> pool() const {
        std::vector<std::pair<Ideal, RingElement>> out;
        for (size_t i = 0; i < ideals.size(); ++i)
            if (sp[i] == 1) out.emplace_back(ideals[i], wit[i]);
        return out;
    }
    std::vector<Ideal> nonnil_disjoint() const {
        std::vector<Ideal> out;
        for (const auto& I : ideals)
            if (I.is_proper() && disjoint_from(I, *S) && !I.elems().subset_of(nil.elems()))
                out.push_back(I);
        return out;
    }
    int verdict_of(const Ideal& I) const {
        int idx = R->ideal_index(I.elems());
        return idx < 0 ? -1 : sp[idx];
    }
};

PairCtx make_ctx(const RingPtr& R, const MultiplicativeSet& S, const SuiteHooks* hooks) {
    PairCtx c;
    c.R = R;
    c.S = &S;
    c.ideals = enumerate_ideals(R);
    c.nil = nilradical(R);
    for (auto& I : c.ideals) {
        if (!I.is_proper() || !disjoint_from(I, S)) {
            c.sp.push_back(-1);
            c.wit.push_back({R, R->one()});
            continue;
        }
        SPrimaryCertificate cert = is_s_primary(I, S);
        bool v = hooks && hooks->s_primary_verdict ? hooks->s_primary_verdict(I, S) : cert.verdict;
        c.sp.push_back(v ? 1 : 0);
        c.wit.push_back(cert.verdict ? *cert.witness : RingElement{R, R->one()});
    }
    return c;
}

json instance_json(const RingPtr& R, const MultiplicativeSet& S) {
    return json{{"ring", R->spec()}, {"mset", mset_to_json(S)}};
}

// a suite instance fails when no subset works OR the assembled decomposition
// does not validate (possible when the mutation hook corrupts the pool)
std::optional<Decomposition> guarded_decompose(
    const Ideal& I, const MultiplicativeSet& S,
    const std::vector<std::pair<Ideal, RingElement>>& pool) {
    try {
        return decompose_finite_with_pool(I, S, pool);
    } catch (const ValidationError&) {
        return std::nullopt;
    }
}

bool hooked_verdict(const Ideal& I, const MultiplicativeSet& S, const SuiteHooks* hooks) {
    if (hooks && hooks->s_primary_verdict) return hooks->s_primary_verdict(I, S);
    return is_s_primary(I, S).verdict;
}

}  // namespace

CorpusSpec CorpusSpec::defaults() {
    CorpusSpec s;
    for (int n = 2; n <= 60; ++n) s.zmod_moduli.push_back(n);
    return s;
}

json CorpusSpec::to_json() const {
    return json{{"zmod_moduli", zmod_moduli},
                {"include_products", include_products},
                {"product_cap", product_cap},
                {"include_idealizations", include_idealizations},
                {"size_cap", size_cap},
                {"seed", seed},
                {"z_max_n", z_max_n},
                {"z_samples", z_samples}};
}

CorpusSpec CorpusSpec::from_json(const json& j) {
    if (!j.is_object()) throw ParseError("corpus spec must be an object");
    CorpusSpec d = defaults();
    CorpusSpec s;
    s.zmod_moduli = j.value("zmod_moduli", d.zmod_moduli);
    s.include_products = j.value("include_products", d.include_products);
    s.product_cap = j.value("product_cap", d.product_cap);
    s.include_idealizations = j.value("include_idealizations", d.include_idealizations);
    s.size_cap = j.value("size_cap", d.size_cap);
    s.seed = j.value("seed", d.seed);
    s.z_max_n = j.value("z_max_n", d.z_max_n);
    s.z_samples = j.value("z_samples", d.z_samples);
    return s;
}

json SuiteReport::to_json() const {
    json ces = json::array();
    for (const auto& c : counterexamples)
        ces.push_back(json{{"property", c.property}, {"instance", c.instance}});
    return json{{"suite", suite},           {"verdict", verdict()},
                {"instances", instances},   {"not_applicable", not_applicable},
                {"counterexamples", ces},   {"wall_ms", wall_ms}};
}

std::vector<std::pair<RingPtr, MultiplicativeSet>> generate_corpus(const CorpusSpec& spec) {
    std::vector<RingPtr> rings;
    std::vector<int> moduli = spec.zmod_moduli;
    std::sort(moduli.begin(), moduli.end());
    moduli.erase(std::unique(moduli.begin(), moduli.end()), moduli.end());
    for (int n : moduli) {
        if (n < 2 || n > spec.size_cap) continue;
        rings.push_back(construct_ring(json{{"kind", "zmod"}, {"n", n}}, spec.size_cap));
    }
    if (spec.include_products) {
        std::vector<int> pps;
        for (int q = 2; q <= spec.product_cap; ++q)
            if (is_prime_power(q)) pps.push_back(q);
        for (int a : pps)
            for (int b : pps) {
                if (b < a) continue;
                if (a * b > spec.product_cap || a * b > spec.size_cap) continue;
                rings.push_back(construct_ring(
                    json{{"kind", "product"},
                         {"factors", json::array({json{{"kind", "zmod"}, {"n", a}},
                                                  json{{"kind", "zmod"}, {"n", b}}})}},
                    spec.size_cap));
            }
    }
    if (spec.include_idealizations) {
        for (const auto& ispec : stock_idealizations()) {
            try {
                rings.push_back(construct_ring(ispec, spec.size_cap));
            } catch (const ValidationError&) {
                // filtered by the size cap
            }
        }
    }

    std::vector<std::pair<RingPtr, MultiplicativeSet>> out;
    for (const auto& R : rings) {
        std::vector<MultiplicativeSet> msets;
        msets.push_back(mset_trivial(R));
        for (int a = 1; a < R->size(); ++a) {
            if (a == R->one()) continue;
            try {
                msets.push_back(mset_closure(R, {{R, a}}));
            } catch (const ValidationError&) {
                // generator reaches 0
            }
        }
        msets.push_back(MultiplicativeSet::from_closed_set(R, R->unit_set()));
        std::sort(msets.begin(), msets.end(),
                  [](const MultiplicativeSet& x, const MultiplicativeSet& y) {
                      return x.elems().canonical_less(y.elems());
                  });
        msets.erase(std::unique(msets.begin(), msets.end(),
                                [](const MultiplicativeSet& x, const MultiplicativeSet& y) {
                                    return x.elems() == y.elems();
                                }),
                    msets.end());
        for (auto& S : msets) out.emplace_back(R, std::move(S));
    }
    return out;
}

// --- suites -------------------------------------------------------------------

SuiteReport suite_intersection(const CorpusSpec& spec, const SuiteHooks* hooks) {
    Timer t;
    SuiteReport rep;
    rep.suite = "intersection";
    for (auto& [R, S] : generate_corpus(spec)) {
        PairCtx ctx = make_ctx(R, S, hooks);
        // finite intersections of P-S-primary ideals sharing S(rad)
        auto pool = ctx.pool();
        std::vector<Ideal> satrad;
        for (auto& [Q, w] : pool) satrad.push_back(saturation(radical(Q), S));
        auto run_subset = [&](const std::vector<int>& pick) {
            Ideal inter = pool[pick[0]].first;
            for (size_t i = 1; i < pick.size(); ++i)
                inter = ideal_intersect(inter, pool[pick[i]].first);
            ++rep.instances;
            bool ok = ctx.verdict_of(inter) == 1 && saturation(radical(inter), S) == satrad[pick[0]];
            if (!ok) {
                json comps = json::array();
                for (int i : pick) comps.push_back(ideal_to_json(pool[i].first));
                json inst = instance_json(R, S);
                inst["components"] = comps;
                add_ce(rep, "intersection-p-s-primary", inst);
            }
        };
        for (size_t i = 0; i < pool.size(); ++i)
            for (size_t j = i + 1; j < pool.size(); ++j) {
                if (!(satrad[i] == satrad[j])) continue;
                run_subset({int(i), int(j)});
                for (size_t k = j + 1; k < pool.size(); ++k)
                    if (satrad[j] == satrad[k]) run_subset({int(i), int(j), int(k)});
            }
        // cutting a classical primary ideal with an ideal that meets S
        for (auto& Q : ctx.ideals) {
            if (!Q.is_proper() || !disjoint_from(Q, S) || !is_primary(Q)) continue;
            for (auto& J : ctx.ideals) {
                if (disjoint_from(J, S)) continue;
                Ideal QJ = ideal_intersect(Q, J);
                ++rep.instances;
                bool ok = ctx.verdict_of(QJ) == 1 &&
                          radical(QJ) == ideal_intersect(radical(Q), radical(J));
                if (!ok) {
                    json inst = instance_json(R, S);
                    inst["Q"] = ideal_to_json(Q);
                    inst["J"] = ideal_to_json(J);
                    add_ce(rep, "intersection-primary-cut", inst);
                }
            }
        }
    }
    rep.wall_ms = t.ms();
    return rep;
}

SuiteReport suite_quotient_transfer(const CorpusSpec& spec, const SuiteHooks* hooks) {
    Timer t;
    SuiteReport rep;
    rep.suite = "quotient-transfer";
    std::map<std::string, RingPtr> quot_cache;
    auto quotient_of = [&](const RingPtr& R, const Ideal& I) {
        std::string key = R->id() + "#";
        I.elems().for_each([&](int x) { key += std::to_string(x) + ","; });
        auto it = quot_cache.find(key);
        if (it != quot_cache.end()) return it->second;
        RingPtr Q = quotient_ring(R, I);
        quot_cache.emplace(std::move(key), Q);
        return Q;
    };
    // every nonnil ideal of `quot` disjoint from the image of S decomposes
    auto check_quotient_laskerian = [&](const RingPtr& quot, const MultiplicativeSet& Sbar,
                                        bool nonnil_only, const char* property,
                                        const json& origin) {
        PairCtx qctx = make_ctx(quot, Sbar, hooks);
        auto qpool = qctx.pool();
        bool all_ok = true;
        for (auto& J : qctx.ideals) {
            if (!J.is_proper() || !disjoint_from(J, Sbar)) continue;
            if (nonnil_only && J.elems().subset_of(qctx.nil.elems())) continue;
            ++rep.instances;
            if (!guarded_decompose(J, Sbar, qpool)) {
                json inst = origin;
                inst["quotient_ring"] = quot->spec();
                inst["quotient_mset"] = mset_to_json(Sbar);
                inst["quotient_ideal"] = ideal_to_json(J);
                add_ce(rep, property, inst);
                all_ok = false;
            }
        }
        return all_ok;
    };

    for (auto& [R, S] : generate_corpus(spec)) {
        PairCtx ctx = make_ctx(R, S, hooks);
        auto pool = ctx.pool();
        json origin = instance_json(R, S);

        // (a) quotients by ideals inside the nilradical stay Laskerian
        for (auto& I : ctx.ideals) {
            if (!I.elems().subset_of(ctx.nil.elems())) continue;
            RingPtr quot = quotient_of(R, I);
            MultiplicativeSet Sbar = mset_image_in_quotient(quot, S);
            json inst = origin;
            inst["quotient_by"] = ideal_to_json(I);
            check_quotient_laskerian(quot, Sbar, true, "quotient-transfer-a", inst);
        }

        // (b) R/Nil(R) is Laskerian for the image set, gated on the
        //     nilradical being S-decomposable
        bool nil_decomposable = guarded_decompose(ctx.nil, S, pool).has_value();
        bool b_holds = false;
        if (nil_decomposable) {
            RingPtr quot = quotient_of(R, ctx.nil);
            MultiplicativeSet Sbar = mset_image_in_quotient(quot, S);
            json inst = origin;
            inst["quotient_by"] = ideal_to_json(ctx.nil);
            b_holds = check_quotient_laskerian(quot, Sbar, false, "quotient-transfer-b", inst);
        } else {
            ++rep.not_applicable;
        }

        // (c) divided nilradical converse
        if (nil_decomposable && b_holds && is_divided(ctx.nil)) {
            for (auto& I : ctx.nonnil_disjoint()) {
                ++rep.instances;
                if (!guarded_decompose(I, S, pool)) {
                    json inst = origin;
                    inst["ideal"] = ideal_to_json(I);
                    add_ce(rep, "quotient-transfer-c", inst);
                }
            }
        } else {
            ++rep.not_applicable;
        }

        // (d) quotients by nonnil ideals disjoint from S
        for (auto& I : ctx.nonnil_disjoint()) {
            RingPtr quot = quotient_of(R, I);
            MultiplicativeSet Sbar = mset_image_in_quotient(quot, S);
            json inst = origin;
            inst["quotient_by"] = ideal_to_json(I);
            check_quotient_laskerian(quot, Sbar, false, "quotient-transfer-d", inst);
        }
    }
    rep.wall_ms = t.ms();
    return rep;
}

SuiteReport suite_nil_primary(const CorpusSpec& spec, const SuiteHooks* hooks) {
    Timer t;
    SuiteReport rep;
    rep.suite = "nil-primary";
    for (auto& [R, S] : generate_corpus(spec)) {
        PairCtx ctx = make_ctx(R, S, hooks);
        bool gate = disjoint_from(ctx.nil, S) && is_prime_ideal(ctx.nil) && is_divided(ctx.nil);
        if (!gate) {
            ++rep.not_applicable;
            continue;
        }
        auto pool = ctx.pool();
        for (auto& I : ctx.ideals) {
            if (!I.elems().subset_of(ctx.nil.elems())) continue;
            ++rep.instances;
            bool decomposable = guarded_decompose(I, S, pool).has_value();
            bool sprim = ctx.verdict_of(I) == 1;
            if (decomposable != sprim) {
                json inst = instance_json(R, S);
                inst["ideal"] = ideal_to_json(I);
                inst["decomposable"] = decomposable;
                inst["s_primary"] = sprim;
                add_ce(rep, "nil-primary", inst);
            }
        }
    }
    rep.wall_ms = t.ms();
    return rep;
}

SuiteReport suite_spectrum(const CorpusSpec& spec, const SuiteHooks* hooks) {
    Timer t;
    SuiteReport rep;
    rep.suite = "spectrum";
    for (auto& [R, S] : generate_corpus(spec)) {
        PairCtx ctx = make_ctx(R, S, hooks);
        auto pool = ctx.pool();
        bool nil_ok = disjoint_from(ctx.nil, S) &&
                      guarded_decompose(ctx.nil, S, pool).has_value();
        bool laskerian = true;
        for (auto& I : ctx.nonnil_disjoint())
            if (!guarded_decompose(I, S, pool)) laskerian = false;
        if (!nil_ok || !laskerian) {
            ++rep.not_applicable;
            continue;
        }
        ++rep.instances;
        SpectrumReport sr = has_s_noetherian_spectrum(R, S);
        bool ok = sr.verdict;
        for (auto& e : sr.primes)
            if (!recheck_radically_s_finite(e.prime, S, e.cert)) ok = false;
        if (!ok) add_ce(rep, "spectrum", instance_json(R, S));
    }
    // integer-ring spot check: bounded prime list, S = Z \ 3Z
    {
        auto Z = Ring::integers();
        auto S3 = MultiplicativeSet::z_complement_of_prime(Z, 3);
        for (Int p : {2, 3, 5, 7, 11}) {
            ++rep.instances;
            Ideal P = Ideal::z_ideal(Z, p);
            auto c = is_radically_s_finite(P, S3);
            if (!c.verdict || !recheck_radically_s_finite(P, S3, c)) {
                json inst{{"ring", Z->spec()}, {"mset", mset_to_json(S3)}, {"prime", p}};
                add_ce(rep, "spectrum-z", inst);
            }
        }
    }
    rep.wall_ms = t.ms();
    return rep;
}

SuiteReport suite_localization(const CorpusSpec& spec, const SuiteHooks* hooks) {
    Timer t;
    SuiteReport rep;
    rep.suite = "localization";
    for (auto& [R, S] : generate_corpus(spec)) {
        PairCtx ctx = make_ctx(R, S, hooks);
        RingPtr L = localize(R, S);
        // S-primary ideals extend to classical primary ideals
        for (size_t i = 0; i < ctx.ideals.size(); ++i) {
            if (ctx.sp[i] != 1) continue;
            Ideal img = ideal_image_in_localization(L, ctx.ideals[i]);
            ++rep.instances;
            if (!img.is_proper() || !is_primary(img)) {
                json inst = instance_json(R, S);
                inst["Q"] = ideal_to_json(ctx.ideals[i]);
                add_ce(rep, "localization-primary-image", inst);
            }
        }
        // the localization is Laskerian in the classical sense
        MultiplicativeSet triv = mset_trivial(L);
        PairCtx lctx = make_ctx(L, triv, hooks);
        auto lpool = lctx.pool();
        for (auto& J : lctx.ideals) {
            if (!J.is_proper() || J.elems().subset_of(lctx.nil.elems())) continue;
            ++rep.instances;
            if (!guarded_decompose(J, triv, lpool)) {
                json inst = instance_json(R, S);
                inst["localization_ring"] = L->spec();
                inst["localization_ideal"] = ideal_to_json(J);
                add_ce(rep, "localization-decomposable", inst);
            }
        }
    }
    rep.wall_ms = t.ms();
    return rep;
}

SuiteReport suite_main_theorem(const CorpusSpec& spec, const SuiteHooks* hooks) {
    Timer t;
    SuiteReport rep;
    rep.suite = "main-theorem";
    for (auto& [R, S] : generate_corpus(spec)) {
        PairCtx ctx = make_ctx(R, S, hooks);
        auto pool = ctx.pool();
        auto family = ctx.nonnil_disjoint();
        for (auto& I : family) {
            json inst = instance_json(R, S);
            inst["ideal"] = ideal_to_json(I);
            // (a) decomposability
            ++rep.instances;
            auto d = guarded_decompose(I, S, pool);
            if (!d) {
                add_ce(rep, "main-theorem-decomposable", inst);
                continue;
            }
            // (b) nonnil S-irreducible ideals are S-primary
            if (is_s_irreducible(I, S).verdict) {
                ++rep.instances;
                if (ctx.verdict_of(I) != 1) add_ce(rep, "main-theorem-irreducible-primary", inst);
            }
            // (c) minimalization passes both conditions and is idempotent
            ++rep.instances;
            try {
                Decomposition m = minimalize(I, S, *d);
                bool ok = m.minimal && m.minimal->minimal;
                Decomposition again = minimalize(I, S, m);
                ok = ok && again.components.size() == m.components.size();
                for (size_t i = 0; ok && i < m.components.size(); ++i)
                    ok = again.components[i].Q == m.components[i].Q;
                if (!ok) add_ce(rep, "main-theorem-minimalize", inst);
            } catch (const ValidationError& e) {
                json witherr = inst;
                witherr["error"] = e.what();
                add_ce(rep, "main-theorem-minimalize", witherr);
            }
        }
        if (!family.empty()) {
            ++rep.instances;
            if (!find_s_maximal(family, S)) add_ce(rep, "main-theorem-s-maximal", instance_json(R, S));
        }
    }
    // sampled integer instances, both multiplicative-set shapes
    {
        auto Z = Ring::integers();
        std::mt19937 rng(spec.seed);
        for (int k = 0; k < spec.z_samples; ++k) {
            Int n = 2 + Int(rng() % (unsigned long long)(spec.z_max_n - 1));
            auto fac = factorize(n);
            MultiplicativeSet S = mset_trivial(Z);
            if (k % 2 == 0) {
                Int p = fac[rng() % fac.size()].first;
                S = MultiplicativeSet::z_complement_of_prime(Z, p);
            } else if (fac.size() >= 2) {
                size_t skip = rng() % fac.size();
                std::vector<Int> T;
                for (size_t i = 0; i < fac.size(); ++i)
                    if (i != skip) T.push_back(fac[i].first);
                S = MultiplicativeSet::z_prime_set(Z, T, rng() % 2 == 0);
            }
            Ideal I = Ideal::z_ideal(Z, n);
            if (!disjoint_from(I, S)) continue;
            ++rep.instances;
            json inst{{"ring", Z->spec()}, {"mset", mset_to_json(S)}, {"n", n}};
            try {
                Decomposition d = decompose_integers(I, S);
                Int l = 1;
                bool ok = true;
                for (auto& c : d.components) {
                    if (!recheck_s_primary_witness(c.Q, S, c.s)) ok = false;
                    l = lcm_int(l, c.Q.zgen());
                }
                Decomposition m = minimalize(I, S, d);
                if (!ok || l != n || !m.minimal->minimal) add_ce(rep, "z-decompose", inst);
            } catch (const ValidationError& e) {
                inst["error"] = e.what();
                add_ce(rep, "z-decompose", inst);
            }
        }
    }
    rep.wall_ms = t.ms();
    return rep;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"intersection", "quotient-transfer",
                                                   "nil-primary",  "spectrum",
                                                   "localization", "main-theorem"};
    return names;
}

SuiteReport run_suite(const std::string& name, const CorpusSpec& spec, const SuiteHooks* hooks) {
    if (name == "intersection") return suite_intersection(spec, hooks);
    if (name == "quotient-transfer") return suite_quotient_transfer(spec, hooks);
    if (name == "nil-primary") return suite_nil_primary(spec, hooks);
    if (name == "spectrum") return suite_spectrum(spec, hooks);
    if (name == "localization") return suite_localization(spec, hooks);
    if (name == "main-theorem") return suite_main_theorem(spec, hooks);
    throw ParseError("unknown suite '" + name + "'");
}

bool recheck_counterexample(const Counterexample& ce, const SuiteHooks* hooks) {
    const json& in = ce.instance;
    auto ring_of = [&](const char* key) { return construct_ring(in.at(key)); };
    if (ce.property == "intersection-p-s-primary") {
        RingPtr R = ring_of("ring");
        MultiplicativeSet S = mset_from_json(R, in.at("mset"));
        std::vector<Ideal> comps;
        for (const auto& c : in.at("components")) comps.push_back(ideal_from_json(R, c));
        Ideal inter = comps[0];
        for (size_t i = 1; i < comps.size(); ++i) inter = ideal_intersect(inter, comps[i]);
        bool ok = hooked_verdict(inter, S, hooks) &&
                  saturation(radical(inter), S) == saturation(radical(comps[0]), S);
        return !ok;
    }
    if (ce.property == "intersection-primary-cut") {
        RingPtr R = ring_of("ring");
        MultiplicativeSet S = mset_from_json(R, in.at("mset"));
        Ideal Q = ideal_from_json(R, in.at("Q"));
        Ideal J = ideal_from_json(R, in.at("J"));
        Ideal QJ = ideal_intersect(Q, J);
        bool ok = hooked_verdict(QJ, S, hooks) &&
                  radical(QJ) == ideal_intersect(radical(Q), radical(J));
        return !ok;
    }
    if (ce.property.rfind("quotient-transfer-", 0) == 0) {
        RingPtr quot = ring_of("quotient_ring");
        if (ce.property == "quotient-transfer-c") {
            RingPtr R = ring_of("ring");
            MultiplicativeSet S = mset_from_json(R, in.at("mset"));
            Ideal I = ideal_from_json(R, in.at("ideal"));
            return !decompose_finite(I, S).has_value();
        }
        MultiplicativeSet Sbar = mset_from_json(quot, in.at("quotient_mset"));
        Ideal J = ideal_from_json(quot, in.at("quotient_ideal"));
        return !decompose_finite(J, Sbar).has_value();
    }
    if (ce.property == "nil-primary") {
        RingPtr R = ring_of("ring");
        MultiplicativeSet S = mset_from_json(R, in.at("mset"));
        Ideal I = ideal_from_json(R, in.at("ideal"));
        bool decomposable = decompose_finite(I, S).has_value();
        return decomposable != hooked_verdict(I, S, hooks);
    }
    if (ce.property == "spectrum") {
        RingPtr R = ring_of("ring");
        MultiplicativeSet S = mset_from_json(R, in.at("mset"));
        return !has_s_noetherian_spectrum(R, S).verdict;
    }
    if (ce.property == "spectrum-z") {
        auto Z = Ring::integers();
        MultiplicativeSet S = mset_from_json(Z, in.at("mset"));
        Ideal P = Ideal::z_ideal(Z, in.at("prime").get<Int>());
        auto c = is_radically_s_finite(P, S);
        return !(c.verdict && recheck_radically_s_finite(P, S, c));
    }
    if (ce.property == "localization-primary-image") {
        RingPtr R = ring_of("ring");
        MultiplicativeSet S = mset_from_json(R, in.at("mset"));
        RingPtr L = localize(R, S);
        Ideal img = ideal_image_in_localization(L, ideal_from_json(R, in.at("Q")));
        return !(img.is_proper() && is_primary(img));
    }
    if (ce.property == "localization-decomposable") {
        RingPtr L = ring_of("localization_ring");
        Ideal J = ideal_from_json(L, in.at("localization_ideal"));
        return !decompose_finite(J, mset_trivial(L)).has_value();
    }
    if (ce.property == "main-theorem-decomposable") {
        RingPtr R = ring_of("ring");
        MultiplicativeSet S = mset_from_json(R, in.at("mset"));
        Ideal I = ideal_from_json(R, in.at("ideal"));
        std::vector<std::pair<Ideal, RingElement>> pool;
        for (auto& J : enumerate_ideals(R)) {
            if (!J.is_proper() || !disjoint_from(J, S)) continue;
            if (hooked_verdict(J, S, hooks)) {
                SPrimaryCertificate c = is_s_primary(J, S);
                pool.emplace_back(J, c.verdict ? *c.witness : RingElement{R, R->one()});
            }
        }
        return !guarded_decompose(I, S, pool).has_value();
    }
    if (ce.property == "main-theorem-irreducible-primary") {
        RingPtr R = ring_of("ring");
        MultiplicativeSet S = mset_from_json(R, in.at("mset"));
        Ideal I = ideal_from_json(R, in.at("ideal"));
        return is_s_irreducible(I, S).verdict && !hooked_verdict(I, S, hooks);
    }
    if (ce.property == "main-theorem-minimalize") {
        RingPtr R = ring_of("ring");
        MultiplicativeSet S = mset_from_json(R, in.at("mset"));
        Ideal I = ideal_from_json(R, in.at("ideal"));
        auto d = decompose_finite(I, S);
        if (!d) return true;
        try {
            Decomposition m = minimalize(I, S, *d);
            return !m.minimal->minimal;
        } catch (const ValidationError&) {
            return true;
        }
    }
    if (ce.property == "main-theorem-s-maximal") {
        RingPtr R = ring_of("ring");
        MultiplicativeSet S = mset_from_json(R, in.at("mset"));
        Ideal nil = nilradical(R);
        std::vector<Ideal> family;
        for (auto& I : enumerate_ideals(R))
            if (I.is_proper() && disjoint_from(I, S) && !I.elems().subset_of(nil.elems()))
                family.push_back(I);
        return family.empty() || !find_s_maximal(family, S).has_value();
    }
    if (ce.property == "z-decompose") {
        auto Z = Ring::integers();
        MultiplicativeSet S = mset_from_json(Z, in.at("mset"));
        Ideal I = Ideal::z_ideal(Z, in.at("n").get<Int>());
        try {
            Decomposition d = decompose_integers(I, S);
            Int l = 1;
            for (auto& c : d.components) {
                if (!recheck_s_primary_witness(c.Q, S, c.s)) return true;
                l = lcm_int(l, c.Q.zgen());
            }
            Decomposition m = minimalize(I, S, d);
            return l != I.zgen() || !m.minimal->minimal;
        } catch (const ValidationError&) {
            return true;
        }
    }
    throw ParseError("unknown counterexample property '" + ce.property + "'");
}

}  // namespace sprimary
