#include "sprimary/io.hpp"

namespace sprimary {

json ideal_to_json(const Ideal& I) {
    if (!I.finite_rep()) return json{{"n", I.zgen()}};
    json gens = json::array();
    for (Int g : I.gens()) gens.push_back(I.ring()->element_to_json(g));
    return json{{"gens", gens}};
}

Ideal ideal_from_json(const RingPtr& ring, const json& j) {
    if (!j.is_object()) throw ParseError("ideal document must be an object");
    if (j.contains("n")) {
        if (!ring->is_integers())
            throw ParseError("the {\"n\":...} ideal form applies to the integer ring");
        if (!j["n"].is_number_integer() || j["n"].get<Int>() < 0)
            throw ParseError("ideal generator n must be a non-negative integer");
        return Ideal::z_ideal(ring, j["n"].get<Int>());
    }
    if (j.contains("gens")) {
        if (ring->is_integers()) {
            std::vector<RingElement> gens;
            for (const auto& g : j["gens"]) {
                if (!g.is_number_integer()) throw ParseError("integer generators expected");
                gens.push_back({ring, g.get<Int>()});
            }
            return ideal_generate(ring, gens);
        }
        return ideal_generate_json(ring, j["gens"]);
    }
    throw ParseError("ideal document needs \"gens\" or \"n\"");
}

json mset_to_json(const MultiplicativeSet& S) {
    if (S.finite_rep()) {
        json gens = json::array();
        for (int g : S.gen_indices()) gens.push_back(S.ring()->element_to_json(g));
        return json{{"gens", gens}};
    }
    if (S.zshape() == MultiplicativeSet::ZShape::ComplementOfPrime)
        return json{{"complement_of_prime", S.zcomp_prime()}};
    return json{{"primes", S.zprimes()}, {"units", S.zunits()}};
}

MultiplicativeSet mset_from_json(const RingPtr& ring, const json& j) {
    if (!j.is_object()) throw ParseError("multiplicative set document must be an object");
    if (j.contains("complement_of_prime")) {
        if (!j["complement_of_prime"].is_number_integer())
            throw ParseError("complement_of_prime must be an integer");
        return MultiplicativeSet::z_complement_of_prime(ring, j["complement_of_prime"].get<Int>());
    }
    if (j.contains("primes")) {
        if (!j["primes"].is_array()) throw ParseError("primes must be an array");
        return MultiplicativeSet::z_prime_set(ring, j["primes"].get<std::vector<Int>>(),
                                              j.value("units", false));
    }
    if (j.contains("gens")) {
        if (ring->is_integers())
            throw ParseError("integer-ring sets use {\"primes\":...} or "
                             "{\"complement_of_prime\":...}");
        std::vector<RingElement> gens;
        for (const auto& g : j["gens"]) gens.push_back({ring, ring->element_from_json(g)});
        return mset_closure(ring, gens);
    }
    throw ParseError("multiplicative set document needs \"gens\", \"primes\" or "
                     "\"complement_of_prime\"");
}

json element_to_json(const RingElement& e) { return e.ring->element_to_json(e.v); }

namespace {
json universe_to_json(const CheckedUniverse& u) {
    return json{{"description", u.description},
                {"instances", u.instances},
                {"detail", u.detail.is_null() ? json::object() : u.detail}};
}
}  // namespace

json certificate_to_json(const SPrimaryCertificate& c, const RingPtr& ring) {
    json out{{"verdict", c.verdict},
             {"witness", c.witness ? element_to_json(*c.witness) : json()},
             {"universe", universe_to_json(c.universe)}};
    if (c.violations.empty()) {
        out["counterexample"] = json();
    } else {
        json v = json::array();
        for (const auto& x : c.violations) {
            if (ring->is_finite())
                v.push_back(json{{"s", ring->element_to_json(x.s)},
                                 {"a", ring->element_to_json(x.a)},
                                 {"b", ring->element_to_json(x.b)}});
            else
                v.push_back(json{{"s_residue", x.s}, {"a", x.a}, {"b", x.b}});
        }
        out["counterexample"] = v;
    }
    return out;
}

json certificate_to_json(const IrreducibilityCertificate& c, const RingPtr&) {
    json out{{"verdict", c.verdict}, {"universe", universe_to_json(c.universe)}};
    out["witness"] = json();
    if (c.counterexample) {
        out["counterexample"] = json{{"left", ideal_to_json(c.counterexample->left)},
                                     {"right", ideal_to_json(c.counterexample->right)},
                                     {"s", element_to_json(c.counterexample->s)}};
    } else {
        out["counterexample"] = json();
    }
    return out;
}

json certificate_to_json(const SFiniteCertificate& c, const RingPtr&) {
    json out{{"verdict", c.verdict}, {"universe", universe_to_json(c.universe)}};
    out["witness"] = c.witness ? element_to_json(*c.witness) : json();
    out["fg"] = c.fg ? ideal_to_json(*c.fg) : json();
    out["exponent"] = c.exponent ? json(*c.exponent) : json();
    out["counterexample"] = json();
    return out;
}

json spectrum_to_json(const SpectrumReport& r, const RingPtr& ring) {
    json primes = json::array();
    for (const auto& e : r.primes)
        primes.push_back(json{{"prime", ideal_to_json(e.prime)},
                              {"certificate", certificate_to_json(e.cert, ring)}});
    return json{{"verdict", r.verdict}, {"primes", primes}};
}

json minimality_to_json(const MinimalityReport& m) {
    return json{{"minimal", m.minimal},
                {"distinct_saturated_radicals", m.distinct_saturated_radicals},
                {"radical_clash", m.radical_clash
                                      ? json::array({m.radical_clash->first,
                                                     m.radical_clash->second})
                                      : json()},
                {"redundant_saturated", m.redundant_saturated},
                {"redundant_plain", m.redundant_plain},
                {"forms_agree", m.forms_agree}};
}

json decomposition_to_json(const Decomposition& d) {
    json comps = json::array();
    for (const auto& c : d.components)
        comps.push_back(json{{"Q", ideal_to_json(c.Q)},
                             {"P", ideal_to_json(c.P)},
                             {"s", element_to_json(c.s)}});
    return json{{"target", ideal_to_json(d.target)},
                {"components", comps},
                {"minimal", d.minimal ? minimality_to_json(*d.minimal) : json()}};
}

Decomposition decomposition_from_json(const RingPtr& ring, const MultiplicativeSet& S,
                                      const json& j) {
    if (!j.is_object() || !j.contains("target") || !j.contains("components") ||
        !j["components"].is_array())
        throw ParseError("decomposition document needs \"target\" and \"components\"");
    Decomposition d;
    d.target = ideal_from_json(ring, j["target"]);
    for (const auto& cj : j["components"]) {
        if (!cj.is_object() || !cj.contains("Q"))
            throw ParseError("decomposition component needs \"Q\"");
        DecompositionComponent c;
        c.Q = ideal_from_json(ring, cj["Q"]);
        c.P = cj.contains("P") && !cj["P"].is_null() ? ideal_from_json(ring, cj["P"])
                                                     : radical(c.Q);
        if (cj.contains("s") && !cj["s"].is_null()) {
            c.s = RingElement{ring, ring->element_from_json(cj["s"])};
        } else {
            SPrimaryCertificate cert = is_s_primary(c.Q, S);
            if (!cert.verdict)
                throw ValidationError("decomposition component is not S-primary");
            c.s = *cert.witness;
        }
        d.components.push_back(std::move(c));
    }
    return d;
}

// --- minimal structural schema validation ------------------------------------

namespace {
void validate_rec(const json& doc, const json& schema, const std::string& path,
                  std::vector<std::string>& problems) {
    if (schema.contains("oneOf")) {
        for (const auto& sub : schema["oneOf"]) {
            std::vector<std::string> tmp;
            validate_rec(doc, sub, path, tmp);
            if (tmp.empty()) return;
        }
        problems.push_back(path + ": matches no alternative of oneOf");
        return;
    }
    if (schema.contains("enum")) {
        for (const auto& v : schema["enum"])
            if (v == doc) return;
        problems.push_back(path + ": value not in enum");
        return;
    }
    if (schema.contains("type")) {
        const std::string t = schema["type"].get<std::string>();
        bool ok = (t == "object" && doc.is_object()) || (t == "array" && doc.is_array()) ||
                  (t == "string" && doc.is_string()) || (t == "integer" && doc.is_number_integer()) ||
                  (t == "number" && doc.is_number()) || (t == "boolean" && doc.is_boolean()) ||
                  (t == "null" && doc.is_null());
        if (!ok) {
            problems.push_back(path + ": expected " + t);
            return;
        }
    }
    if (schema.contains("minimum") && doc.is_number() &&
        doc.get<double>() < schema["minimum"].get<double>())
        problems.push_back(path + ": below minimum");
    if (doc.is_object()) {
        if (schema.contains("required"))
            for (const auto& k : schema["required"])
                if (!doc.contains(k.get<std::string>()))
                    problems.push_back(path + ": missing required field '" +
                                       k.get<std::string>() + "'");
        const json props = schema.value("properties", json::object());
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            if (props.contains(it.key())) {
                validate_rec(it.value(), props[it.key()], path + "/" + it.key(), problems);
            } else if (schema.contains("additionalProperties") &&
                       schema["additionalProperties"].is_boolean() &&
                       !schema["additionalProperties"].get<bool>()) {
                problems.push_back(path + ": unexpected field '" + it.key() + "'");
            }
        }
    }
    if (doc.is_array() && schema.contains("items")) {
        for (size_t i = 0; i < doc.size(); ++i)
            validate_rec(doc[i], schema["items"], path + "/" + std::to_string(i), problems);
    }
}
}  // namespace

std::vector<std::string> schema_validate(const json& doc, const json& schema) {
    std::vector<std::string> problems;
    validate_rec(doc, schema, "$", problems);
    return problems;
}

}  // namespace sprimary
