#include "sprimary/ring.hpp"

#include <algorithm>
#include <cstdlib>

#include "sprimary/ideal.hpp"

namespace sprimary {

int default_size_cap() {
    static int cap = [] {
        if (const char* s = std::getenv("SPRIMARY_SIZE_CAP")) {
            char* end = nullptr;
            long v = std::strtol(s, &end, 10);
            if (end && *end == '\0' && v >= 2 && v <= 1 << 20) return int(v);
        }
        return kDefaultSizeCap;
    }();
    return cap;
}

namespace {

void verify_ring_axioms(const Ring& r) {
    const int n = r.size();
    for (int a = 0; a < n; ++a) {
        if (r.add(0, a) != a) throw ValidationError("ring axiom violated: additive identity");
        if (r.mul(r.one(), a) != a)
            throw ValidationError("ring axiom violated: multiplicative identity");
        if (r.add(a, r.neg(a)) != 0) throw ValidationError("ring axiom violated: additive inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (r.add(a, b) != r.add(b, a))
                throw ValidationError("ring axiom violated: addition not commutative");
            if (r.mul(a, b) != r.mul(b, a))
                throw ValidationError("ring axiom violated: multiplication not commutative");
        }
    if (n > 64) return;  // cubic checks only at exhaustively cheap sizes
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
                    throw ValidationError("ring axiom violated: addition not associative");
                if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
                    throw ValidationError("ring axiom violated: multiplication not associative");
                if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
                    throw ValidationError("ring axiom violated: distributivity");
            }
}

int require_int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ParseError(std::string("ring spec: missing integer field '") + key + "'");
    return j[key].get<int>();
}

// polynomial helpers over F_p, coefficients ascending
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& f, Int p) {
    const int d = int(f.size()) - 1;
    for (int k = int(a.size()) - 1; k >= d; --k) {
        int c = a[k];
        if (c == 0) continue;
        for (int i = 0; i <= d; ++i) {
            int idx = k - d + i;
            a[idx] = int(mod_nonneg(a[idx] - Int(c) * f[i], p));
        }
    }
    a.resize(d);
    return a;
}

bool poly_is_irreducible(const std::vector<int>& f, Int p) {
    const int d = int(f.size()) - 1;
    for (int k = 1; k <= d / 2; ++k) {
        // monic candidates of degree k
        Int combos = checked_pow(p, k);
        for (Int c = 0; c < combos; ++c) {
            std::vector<int> g(k + 1, 0);
            Int t = c;
            for (int i = 0; i < k; ++i) {
                g[i] = int(t % p);
                t /= p;
            }
            g[k] = 1;
            std::vector<int> rem = poly_mod(std::vector<int>(f), g, p);
            // degree-(k-1) remainder; zero remainder means g divides f
            bool zero = true;
            for (int i = 0; i < k; ++i)
                if (i < int(rem.size()) && rem[i] != 0) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace

struct RingBuilder {
    static RingPtr build_zmod(Int n, int cap);
    static RingPtr build_product(const std::vector<RingPtr>& factors, int cap);
    static RingPtr build_poly_quot(Int p, std::vector<int> f, bool require_irreducible, int cap);
    static RingPtr build_quotient(const RingPtr& base, const Ideal& ideal, int cap);
    static RingPtr build_idealization(const RingPtr& base, Int mod, std::vector<int> action,
                                      int cap);
    static RingPtr build_localization(const RingPtr& base, const MultiplicativeSet& mset, int cap);

    static RingPtr make(RingKind kind, json spec) {
        auto r = std::shared_ptr<Ring>(new Ring());
        r->kind_ = kind;
        r->spec_ = std::move(spec);
        r->id_ = r->spec_.dump();
        return r;
    }

    static void finish_tables(Ring& r, int n, int one) {
        r.n_ = n;
        r.one_ = one;
        verify_ring_axioms(r);
    }

    static Ring& mut(const RingPtr& p) { return const_cast<Ring&>(*p); }
};

RingPtr Ring::integers() {
    static RingPtr z = RingBuilder::make(RingKind::Integers, json{{"kind", "integers"}});
    return z;
}

int Ring::size() const {
    if (is_integers()) throw ValidationError("infinite ring");
    return n_;
}

int Ring::pow(int a, long long e) const {
    if (e < 0) throw ValidationError("negative exponent");
    int r = one_;
    int base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return r;
}

RingPtr Ring::base_ring() const {
    if (!base_) throw ValidationError("ring has no base ring");
    return base_;
}

int Ring::project(int base_idx) const {
    if (kind_ != RingKind::Quotient) throw ValidationError("not a quotient ring");
    return qclass_of_[base_idx];
}

int Ring::localization_image(int base_idx) const {
    if (kind_ != RingKind::Localization) throw ValidationError("not a localization");
    return loc_map_[base_idx];
}

// --- construction -----------------------------------------------------------

RingPtr RingBuilder::build_zmod(Int n, int cap) {
    if (n < 2) throw ValidationError("zmod requires modulus >= 2");
    if (n > cap) throw ValidationError("ring size cap exceeded");
    auto r = RingBuilder::make(RingKind::Zmod, json{{"kind", "zmod"}, {"n", n}});
    auto& m = RingBuilder::mut(r);
    m.zn_ = n;
    int nn = int(n);
    m.add_.resize(size_t(nn) * nn);
    m.mul_.resize(size_t(nn) * nn);
    m.neg_.resize(nn);
    for (int a = 0; a < nn; ++a) {
        m.neg_[a] = uint16_t((nn - a) % nn);
        for (int b = 0; b < nn; ++b) {
            m.add_[size_t(a) * nn + b] = uint16_t((a + b) % nn);
            m.mul_[size_t(a) * nn + b] = uint16_t((Int(a) * b) % nn);
        }
    }
    RingBuilder::finish_tables(m, nn, 1 % nn);
    return r;
}

RingPtr RingBuilder::build_product(const std::vector<RingPtr>& factors, int cap) {
    if (factors.empty()) throw ValidationError("product requires at least one factor");
    Int total = 1;
    json fspecs = json::array();
    for (auto& f : factors) {
        if (!f->is_finite()) throw ValidationError("product factors must be finite");
        total = checked_mul(total, f->size());
        if (total > cap) throw ValidationError("ring size cap exceeded");
        fspecs.push_back(f->spec());
    }
    auto r = RingBuilder::make(RingKind::Product, json{{"factors", fspecs}, {"kind", "product"}});
    auto& m = RingBuilder::mut(r);
    m.factors_ = factors;
    const int k = int(factors.size());
    m.strides_.assign(k, 1);
    for (int i = k - 2; i >= 0; --i) m.strides_[i] = m.strides_[i + 1] * factors[i + 1]->size();
    const int n = int(total);
    auto digit = [&](int idx, int i) { return (idx / m.strides_[i]) % factors[i]->size(); };
    m.add_.resize(size_t(n) * n);
    m.mul_.resize(size_t(n) * n);
    m.neg_.resize(n);
    int one = 0;
    for (int i = 0; i < k; ++i) one += factors[i]->one() * m.strides_[i];
    for (int a = 0; a < n; ++a) {
        int nv = 0;
        for (int i = 0; i < k; ++i) nv += factors[i]->neg(digit(a, i)) * m.strides_[i];
        m.neg_[a] = uint16_t(nv);
        for (int b = 0; b < n; ++b) {
            int va = 0, vm = 0;
            for (int i = 0; i < k; ++i) {
                va += factors[i]->add(digit(a, i), digit(b, i)) * m.strides_[i];
                vm += factors[i]->mul(digit(a, i), digit(b, i)) * m.strides_[i];
            }
            m.add_[size_t(a) * n + b] = uint16_t(va);
            m.mul_[size_t(a) * n + b] = uint16_t(vm);
        }
    }
    RingBuilder::finish_tables(m, n, one);
    return r;
}

RingPtr RingBuilder::build_poly_quot(Int p, std::vector<int> f,
                                      bool require_irreducible, int cap) {
    if (!is_prime_int(p)) throw ValidationError("poly_quot characteristic must be prime");
    if (f.size() < 2) throw ValidationError("poly_quot modulus must have degree >= 1");
    for (auto& c : f) c = int(mod_nonneg(c, p));
    if (f.back() != 1) throw ValidationError("poly_quot modulus must be monic");
    if (require_irreducible && !poly_is_irreducible(f, p))
        throw ValidationError("poly_quot modulus must be irreducible");
    const int d = int(f.size()) - 1;
    Int total = checked_pow(p, d);
    if (total > cap) throw ValidationError("ring size cap exceeded");
    json spec{{"f", f}, {"kind", "poly_quot"}, {"p", p}};
    if (require_irreducible) spec["irreducible"] = true;
    auto r = RingBuilder::make(RingKind::PolyQuot, std::move(spec));
    auto& m = RingBuilder::mut(r);
    m.pq_p_ = p;
    m.pq_f_ = f;
    const int n = int(total);
    auto decode = [&](int idx) {
        std::vector<int> c(d);
        for (int i = 0; i < d; ++i) {
            c[i] = int(idx % p);
            idx = int(idx / p);
        }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        Int idx = 0;
        for (int i = d - 1; i >= 0; --i) idx = idx * p + (i < int(c.size()) ? c[i] : 0);
        return int(idx);
    };
    m.add_.resize(size_t(n) * n);
    m.mul_.resize(size_t(n) * n);
    m.neg_.resize(n);
    for (int a = 0; a < n; ++a) {
        auto ca = decode(a);
        std::vector<int> cn(d);
        for (int i = 0; i < d; ++i) cn[i] = int(mod_nonneg(-ca[i], p));
        m.neg_[a] = uint16_t(encode(cn));
        for (int b = 0; b < n; ++b) {
            auto cb = decode(b);
            std::vector<int> cs(d);
            for (int i = 0; i < d; ++i) cs[i] = int((ca[i] + cb[i]) % p);
            m.add_[size_t(a) * n + b] = uint16_t(encode(cs));
            std::vector<int> cp(2 * d - 1, 0);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) cp[i + j] = int((cp[i + j] + Int(ca[i]) * cb[j]) % p);
            m.mul_[size_t(a) * n + b] = uint16_t(encode(poly_mod(std::move(cp), f, p)));
        }
    }
    RingBuilder::finish_tables(m, n, encode({1}));
    return r;
}

RingPtr RingBuilder::build_quotient(const RingPtr& base, const Ideal& ideal, int /*cap*/) {
    if (!base->is_finite()) throw ValidationError("quotient requires a finite ring");
    if (!ideal.is_proper()) throw ValidationError("improper ideal");
    json gens = json::array();
    for (int g : base->generators_for(ideal.elems())) gens.push_back(base->element_to_json(g));
    auto r = RingBuilder::make(
        RingKind::Quotient,
        json{{"base", base->spec()}, {"ideal_gens", gens}, {"kind", "quotient"}});
    auto& m = RingBuilder::mut(r);
    m.base_ = base;
    const int nb = base->size();
    m.qclass_of_.assign(nb, -1);
    const auto members = ideal.elems().to_list();
    for (int x = 0; x < nb; ++x) {
        if (m.qclass_of_[x] != -1) continue;
        int cls = int(m.qreps_.size());
        m.qreps_.push_back(x);
        for (int i : members) m.qclass_of_[base->add(x, i)] = cls;
    }
    const int n = int(m.qreps_.size());
    if (n * int(members.size()) != nb)
        throw ValidationError("quotient construction: cosets do not partition evenly");
    m.add_.resize(size_t(n) * n);
    m.mul_.resize(size_t(n) * n);
    m.neg_.resize(n);
    for (int a = 0; a < n; ++a) {
        m.neg_[a] = uint16_t(m.qclass_of_[base->neg(m.qreps_[a])]);
        for (int b = 0; b < n; ++b) {
            m.add_[size_t(a) * n + b] = uint16_t(m.qclass_of_[base->add(m.qreps_[a], m.qreps_[b])]);
            m.mul_[size_t(a) * n + b] = uint16_t(m.qclass_of_[base->mul(m.qreps_[a], m.qreps_[b])]);
        }
    }
    RingBuilder::finish_tables(m, n, m.qclass_of_[base->one()]);
    // projection is a homomorphism, exhaustively
    for (int a = 0; a < nb; ++a)
        for (int b = 0; b < nb; ++b) {
            if (m.qclass_of_[base->add(a, b)] != m.add(m.qclass_of_[a], m.qclass_of_[b]) ||
                m.qclass_of_[base->mul(a, b)] != m.mul(m.qclass_of_[a], m.qclass_of_[b]))
                throw ValidationError("quotient projection is not a homomorphism");
        }
    return r;
}

RingPtr RingBuilder::build_idealization(const RingPtr& base, Int mod,
                                        std::vector<int> action, int cap) {
    if (!base->is_finite()) throw ValidationError("idealization requires a finite base ring");
    if (mod < 2) throw ValidationError("idealization modulus must be >= 2");
    const int nb = base->size();
    if (int(action.size()) != nb)
        throw ValidationError("idealization action must list one value per base element");
    for (auto& v : action) v = int(mod_nonneg(v, mod));
    auto bad = [&] { throw ValidationError("action map not a ring homomorphism"); };
    if (action[base->one()] != 1 % mod) bad();
    for (int a = 0; a < nb; ++a)
        for (int b = 0; b < nb; ++b) {
            if (action[base->add(a, b)] != (action[a] + action[b]) % mod) bad();
            if (action[base->mul(a, b)] != int((Int(action[a]) * action[b]) % mod)) bad();
        }
    Int total = checked_mul(Int(nb), mod);
    if (total > cap) throw ValidationError("ring size cap exceeded");
    auto r = RingBuilder::make(RingKind::Idealization,
                               json{{"action", action},
                                    {"base", base->spec()},
                                    {"kind", "idealization"},
                                    {"m", mod}});
    auto& m = RingBuilder::mut(r);
    m.base_ = base;
    m.ideal_m_ = mod;
    m.ideal_action_ = action;
    const int n = int(total);
    const int mm = int(mod);
    m.add_.resize(size_t(n) * n);
    m.mul_.resize(size_t(n) * n);
    m.neg_.resize(n);
    for (int a = 0; a < n; ++a) {
        int ra = a / mm, xa = a % mm;
        m.neg_[a] = uint16_t(base->neg(ra) * mm + (mm - xa) % mm);
        for (int b = 0; b < n; ++b) {
            int rb = b / mm, xb = b % mm;
            m.add_[size_t(a) * n + b] = uint16_t(base->add(ra, rb) * mm + (xa + xb) % mm);
            int xm = int((Int(action[ra]) * xb + Int(action[rb]) * xa) % mm);
            m.mul_[size_t(a) * n + b] = uint16_t(base->mul(ra, rb) * mm + xm);
        }
    }
    RingBuilder::finish_tables(m, n, base->one() * mm + 0);
    return r;
}

RingPtr RingBuilder::build_localization(const RingPtr& base, const MultiplicativeSet& mset,
                                        int /*cap*/) {
    if (!base->is_finite()) throw ValidationError("infinite ring");
    const auto msels = mset.elems().to_list();
    json gens = json::array();
    for (int g : mset.gen_indices()) gens.push_back(base->element_to_json(g));
    auto r = RingBuilder::make(
        RingKind::Localization,
        json{{"base", base->spec()}, {"kind", "localization"}, {"mset_gens", gens}});
    auto& m = RingBuilder::mut(r);
    m.base_ = base;
    m.loc_msels_ = msels;
    const int nb = base->size();

    int s_pi = base->one();
    for (int s : msels) s_pi = base->mul(s_pi, s);
    // stable idempotent power of the product of all set elements
    int e = -1;
    {
        std::vector<int> seen_at(nb, -1);
        std::vector<int> powers;
        int x = s_pi;
        while (seen_at[x] == -1) {
            seen_at[x] = int(powers.size());
            powers.push_back(x);
            x = base->mul(x, s_pi);
        }
        for (size_t i = seen_at[x]; i < powers.size(); ++i)
            if (base->mul(powers[i], powers[i]) == powers[i]) {
                e = powers[i];
                break;
            }
        if (e < 0) throw ValidationError("localization: no idempotent found (internal)");
    }

    std::vector<int> vals;
    std::vector<int> rank(nb, -1);
    for (int x = 0; x < nb; ++x) {
        int v = base->mul(e, x);
        if (rank[v] == -1) rank[v] = 0;
    }
    for (int v = 0; v < nb; ++v)
        if (rank[v] == 0) {
            rank[v] = int(vals.size());
            vals.push_back(v);
        }
    m.loc_vals_ = vals;

    m.loc_inv_.assign(msels.size(), -1);
    for (size_t si = 0; si < msels.size(); ++si) {
        int es = base->mul(e, msels[si]);
        for (int z : vals)
            if (base->mul(es, z) == e) {
                m.loc_inv_[si] = z;
                break;
            }
        if (m.loc_inv_[si] < 0)
            throw ValidationError("localization: set element not invertible in corner (internal)");
    }
    auto class_of_pair = [&](int a, size_t si) {
        return rank[base->mul(base->mul(e, a), m.loc_inv_[si])];
    };

    const int n = int(vals.size());
    m.loc_map_.resize(nb);
    for (int a = 0; a < nb; ++a) m.loc_map_[a] = rank[base->mul(e, a)];
    m.loc_pairs_.assign(n, {-1, -1});
    for (int a = 0; a < nb; ++a)
        for (size_t si = 0; si < msels.size(); ++si) {
            int c = class_of_pair(a, si);
            if (m.loc_pairs_[c].first == -1) m.loc_pairs_[c] = {a, msels[si]};
        }

    m.add_.resize(size_t(n) * n);
    m.mul_.resize(size_t(n) * n);
    m.neg_.resize(n);
    for (int a = 0; a < n; ++a) {
        m.neg_[a] = uint16_t(rank[base->neg(vals[a])]);
        for (int b = 0; b < n; ++b) {
            m.add_[size_t(a) * n + b] = uint16_t(rank[base->add(vals[a], vals[b])]);
            m.mul_[size_t(a) * n + b] = uint16_t(rank[base->mul(vals[a], vals[b])]);
        }
    }
    RingBuilder::finish_tables(m, n, rank[e]);

    // canonical map is a homomorphism, exhaustively
    for (int a = 0; a < nb; ++a)
        for (int b = 0; b < nb; ++b) {
            if (m.loc_map_[base->add(a, b)] != m.add(m.loc_map_[a], m.loc_map_[b]) ||
                m.loc_map_[base->mul(a, b)] != m.mul(m.loc_map_[a], m.loc_map_[b]))
                throw ValidationError("localization canonical map is not a homomorphism");
        }
    // classes agree with the pair equivalence (a,s) ~ (a',s') iff
    // t(as' - a's) = 0 for some t in S; full check at small sizes
    if (nb * int(msels.size()) <= 256) {
        for (int a = 0; a < nb; ++a)
            for (size_t si = 0; si < msels.size(); ++si)
                for (int a2 = 0; a2 < nb; ++a2)
                    for (size_t sj = 0; sj < msels.size(); ++sj) {
                        int diff = base->sub(base->mul(a, msels[sj]), base->mul(a2, msels[si]));
                        bool equiv = false;
                        for (int t : msels)
                            if (base->mul(t, diff) == 0) {
                                equiv = true;
                                break;
                            }
                        if (equiv != (class_of_pair(a, si) == class_of_pair(a2, sj)))
                            throw ValidationError(
                                "localization classes disagree with pair equivalence (internal)");
                    }
    }
    return r;
}

RingPtr Ring::construct(const json& spec, int size_cap) {
    const int cap = size_cap > 0 ? size_cap : default_size_cap();
    if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string())
        throw ParseError("ring spec must be an object with a 'kind' string");
    const std::string kind = spec["kind"].get<std::string>();
    if (kind == "integers") return integers();
    if (kind == "zmod") return RingBuilder::build_zmod(require_int_field(spec, "n"), cap);
    if (kind == "product") {
        if (!spec.contains("factors") || !spec["factors"].is_array())
            throw ParseError("product spec requires a 'factors' array");
        std::vector<RingPtr> fs;
        for (const auto& f : spec["factors"]) fs.push_back(construct(f, cap));
        return RingBuilder::build_product(fs, cap);
    }
    if (kind == "poly_quot") {
        int p = require_int_field(spec, "p");
        if (!spec.contains("f") || !spec["f"].is_array())
            throw ParseError("poly_quot spec requires coefficient array 'f'");
        std::vector<int> f = spec["f"].get<std::vector<int>>();
        bool irr = spec.value("irreducible", false);
        return RingBuilder::build_poly_quot(p, std::move(f), irr, cap);
    }
    if (kind == "quotient") {
        if (!spec.contains("base")) throw ParseError("quotient spec requires 'base'");
        if (!spec.contains("ideal_gens") || !spec["ideal_gens"].is_array())
            throw ParseError("quotient spec requires 'ideal_gens' array");
        RingPtr base = construct(spec["base"], cap);
        Ideal I = ideal_generate_json(base, spec["ideal_gens"]);
        return RingBuilder::build_quotient(base, I, cap);
    }
    if (kind == "idealization") {
        if (!spec.contains("base")) throw ParseError("idealization spec requires 'base'");
        if (!spec.contains("action") || !spec["action"].is_array())
            throw ParseError("idealization spec requires 'action' array");
        RingPtr base = construct(spec["base"], cap);
        return RingBuilder::build_idealization(base, require_int_field(spec, "m"),
                                  spec["action"].get<std::vector<int>>(), cap);
    }
    if (kind == "localization") {
        if (!spec.contains("base")) throw ParseError("localization spec requires 'base'");
        if (!spec.contains("mset_gens") || !spec["mset_gens"].is_array())
            throw ParseError("localization spec requires 'mset_gens' array");
        RingPtr base = construct(spec["base"], cap);
        std::vector<RingElement> gens;
        for (const auto& g : spec["mset_gens"]) gens.push_back({base, base->element_from_json(g)});
        MultiplicativeSet S = mset_closure(base, gens);
        return RingBuilder::build_localization(base, S, cap);
    }
    throw ParseError("unknown ring kind '" + kind + "'");
}

RingPtr construct_ring(const json& spec, int size_cap) { return Ring::construct(spec, size_cap); }

RingPtr quotient_ring(const RingPtr& ring, const Ideal& ideal) {
    if (!ring->is_finite()) throw ValidationError("infinite ring");
    if (!ideal.ring()->same_ring(*ring)) throw ValidationError("ideal belongs to a different ring");
    return RingBuilder::build_quotient(ring, ideal, default_size_cap());
}

RingPtr localize(const RingPtr& ring, const MultiplicativeSet& mset) {
    if (!ring->is_finite()) throw ValidationError("infinite ring");
    if (!mset.ring()->same_ring(*ring))
        throw ValidationError("multiplicative set belongs to a different ring");
    return RingBuilder::build_localization(ring, mset, default_size_cap());
}

// --- element payloads -------------------------------------------------------

json Ring::element_to_json(Int v) const {
    switch (kind_) {
        case RingKind::Integers:
            return json(v);
        case RingKind::Zmod:
            return json(v);
        case RingKind::Product: {
            json out = json::array();
            int idx = int(v);
            for (size_t i = 0; i < factors_.size(); ++i)
                out.push_back(
                    factors_[i]->element_to_json((idx / strides_[i]) % factors_[i]->size()));
            return out;
        }
        case RingKind::PolyQuot: {
            json out = json::array();
            Int idx = v;
            for (size_t i = 0; i + 1 < pq_f_.size(); ++i) {
                out.push_back(idx % pq_p_);
                idx /= pq_p_;
            }
            return out;
        }
        case RingKind::Quotient:
            return base_->element_to_json(qreps_[v]);
        case RingKind::Idealization:
            return json::array({base_->element_to_json(v / ideal_m_), v % ideal_m_});
        case RingKind::Localization: {
            auto [a, s] = loc_pairs_[v];
            return json::array({base_->element_to_json(a), base_->element_to_json(s)});
        }
    }
    throw ValidationError("unreachable");
}

Int Ring::element_from_json(const json& j) const {
    switch (kind_) {
        case RingKind::Integers:
            if (!j.is_number_integer()) throw ParseError("integer element payload expected");
            return j.get<Int>();
        case RingKind::Zmod:
            if (!j.is_number_integer()) throw ParseError("residue payload expected");
            return mod_nonneg(j.get<Int>(), zn_);
        case RingKind::Product: {
            if (!j.is_array() || j.size() != factors_.size())
                throw ParseError("product element payload must list one entry per factor");
            int idx = 0;
            for (size_t i = 0; i < factors_.size(); ++i)
                idx += int(factors_[i]->element_from_json(j[i])) * strides_[i];
            return idx;
        }
        case RingKind::PolyQuot: {
            if (!j.is_array()) throw ParseError("polynomial payload expected");
            if (j.size() >= pq_f_.size()) throw ParseError("polynomial payload degree too large");
            Int idx = 0;
            for (size_t i = j.size(); i-- > 0;) {
                if (!j[i].is_number_integer()) throw ParseError("polynomial payload expected");
                idx = idx * pq_p_ + mod_nonneg(j[i].get<Int>(), pq_p_);
            }
            return idx;
        }
        case RingKind::Quotient:
            return qclass_of_[base_->element_from_json(j)];
        case RingKind::Idealization: {
            if (!j.is_array() || j.size() != 2)
                throw ParseError("idealization element payload must be [r, m]");
            Int r = base_->element_from_json(j[0]);
            if (!j[1].is_number_integer()) throw ParseError("idealization payload expected");
            return r * ideal_m_ + mod_nonneg(j[1].get<Int>(), ideal_m_);
        }
        case RingKind::Localization: {
            if (!j.is_array() || j.size() != 2)
                throw ParseError("localization element payload must be [a, s]");
            int a = int(base_->element_from_json(j[0]));
            int s = int(base_->element_from_json(j[1]));
            auto it = std::find(loc_msels_.begin(), loc_msels_.end(), s);
            if (it == loc_msels_.end())
                throw ValidationError("localization denominator is not in the multiplicative set");
            size_t si = size_t(it - loc_msels_.begin());
            int e = loc_vals_[one_];
            int val = base_->mul(base_->mul(e, a), loc_inv_[si]);
            for (size_t c = 0; c < loc_vals_.size(); ++c)
                if (loc_vals_[c] == val) return Int(c);
            throw ValidationError("localization class lookup failed (internal)");
        }
    }
    throw ValidationError("unreachable");
}

std::string Ring::element_str(Int v) const {
    switch (kind_) {
        case RingKind::Integers:
        case RingKind::Zmod:
            return std::to_string(v);
        case RingKind::Product: {
            std::string out = "(";
            int idx = int(v);
            for (size_t i = 0; i < factors_.size(); ++i) {
                if (i) out += ",";
                out += factors_[i]->element_str((idx / strides_[i]) % factors_[i]->size());
            }
            return out + ")";
        }
        case RingKind::PolyQuot: {
            std::string out = "[";
            Int idx = v;
            for (size_t i = 0; i + 1 < pq_f_.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(idx % pq_p_);
                idx /= pq_p_;
            }
            return out + "]";
        }
        case RingKind::Quotient:
            return base_->element_str(qreps_[v]);
        case RingKind::Idealization:
            return "(" + base_->element_str(v / ideal_m_) + "|" + std::to_string(v % ideal_m_) +
                   ")";
        case RingKind::Localization: {
            auto [a, s] = loc_pairs_[v];
            return base_->element_str(a) + "/" + base_->element_str(s);
        }
    }
    return "?";
}

// --- lazy structure ---------------------------------------------------------

const ElemSet& Ring::nil_set() const {
    std::lock_guard<std::mutex> lk(cache_mu_);
    if (!nil_cache_) {
        ElemSet s(n_);
        for (int a = 0; a < n_; ++a)
            if (pow(a, n_) == 0) s.set(a);
        nil_cache_ = std::move(s);
    }
    return *nil_cache_;
}

const ElemSet& Ring::unit_set() const {
    std::lock_guard<std::mutex> lk(cache_mu_);
    if (!unit_cache_) {
        ElemSet s(n_);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (mul(a, b) == one_) {
                    s.set(a);
                    break;
                }
        unit_cache_ = std::move(s);
    }
    return *unit_cache_;
}

ElemSet Ring::principal_set(int a) const {
    ElemSet s(n_);
    for (int x = 0; x < n_; ++x) s.set(mul(a, x));
    return s;
}

ElemSet Ring::additive_closure(ElemSet s) const {
    std::vector<int> items = s.to_list();
    for (size_t i = 0; i < items.size(); ++i)
        for (size_t j = 0; j <= i; ++j) {
            int x = add(items[i], items[j]);
            if (!s.test(x)) {
                s.set(x);
                items.push_back(x);
            }
        }
    return s;
}

ElemSet Ring::ideal_closure_set(const std::vector<int>& gens) const {
    ElemSet u(n_);
    u.set(0);
    for (int g : gens) u = u | principal_set(g);
    return additive_closure(std::move(u));
}

std::vector<int> Ring::generators_for(const ElemSet& elems) const {
    std::vector<int> gens;
    ElemSet cur(n_);
    cur.set(0);
    for (int i = 0; i < n_; ++i) {
        if (!elems.test(i) || cur.test(i)) continue;
        gens.push_back(i);
        cur = additive_closure(cur | principal_set(i));
        if (cur == elems) break;
    }
    if (!(cur == elems))
        throw ValidationError("set is not an ideal: generator reconstruction failed");
    return gens;
}

const std::vector<IdealData>& Ring::all_ideals() const {
    std::lock_guard<std::mutex> lk(cache_mu_);
    if (!ideals_cache_) {
        std::vector<ElemSet> list;
        auto try_add = [&](const ElemSet& s) {
            for (auto& t : list)
                if (t == s) return false;
            list.push_back(s);
            return true;
        };
        for (int a = 0; a < n_; ++a) try_add(principal_set(a));
        bool grew = true;
        while (grew) {
            grew = false;
            size_t sz = list.size();
            for (size_t i = 0; i < sz; ++i)
                for (size_t j = 0; j < i; ++j)
                    if (try_add(additive_closure(list[i] | list[j]))) grew = true;
        }
        std::sort(list.begin(), list.end(),
                  [](const ElemSet& a, const ElemSet& b) { return a.canonical_less(b); });
        std::vector<IdealData> out;
        out.reserve(list.size());
        for (auto& s : list) out.push_back({s, generators_for(s)});
        ideals_cache_ = std::move(out);
    }
    return *ideals_cache_;
}

int Ring::ideal_index(const ElemSet& elems) const {
    const auto& all = all_ideals();
    for (size_t i = 0; i < all.size(); ++i)
        if (all[i].elems == elems) return int(i);
    return -1;
}

// --- element-level arithmetic ----------------------------------------------

namespace {
void require_same_ring(const RingElement& a, const RingElement& b) {
    if (!a.ring->same_ring(*b.ring)) throw ValidationError("cross-ring element mixing");
}
}  // namespace

RingElement ring_add(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    if (a.ring->is_integers()) return {a.ring, checked_add(a.v, b.v)};
    return {a.ring, a.ring->add(int(a.v), int(b.v))};
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    if (a.ring->is_integers()) return {a.ring, checked_mul(a.v, b.v)};
    return {a.ring, a.ring->mul(int(a.v), int(b.v))};
}

RingElement ring_neg(const RingElement& a) {
    if (a.ring->is_integers()) return {a.ring, -a.v};
    return {a.ring, a.ring->neg(int(a.v))};
}

RingElement ring_pow(const RingElement& a, long long e) {
    if (e < 0) throw ValidationError("negative exponent");
    if (a.ring->is_integers()) return {a.ring, checked_pow(a.v, e)};
    return {a.ring, a.ring->pow(int(a.v), e)};
}

std::vector<RingElement> enumerate_elements(const RingPtr& ring) {
    if (!ring->is_finite()) throw ValidationError("infinite ring");
    std::vector<RingElement> out;
    out.reserve(ring->size());
    for (int i = 0; i < ring->size(); ++i) out.push_back({ring, i});
    return out;
}

}  // namespace sprimary
