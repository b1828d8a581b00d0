#include "sprimary/ideal.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace sprimary {

namespace {
void require_same(const RingPtr& a, const RingPtr& b) {
    if (!a->same_ring(*b)) throw ValidationError("cross-ring operands");
}
}  // namespace

// --- Ideal -------------------------------------------------------------------

Ideal Ideal::from_set(RingPtr ring, ElemSet elems) {
    Ideal I;
    I.ring_ = std::move(ring);
    I.elems_ = std::move(elems);
    return I;
}

Ideal Ideal::from_gen_indices(RingPtr ring, const std::vector<int>& gens) {
    Ideal I;
    I.elems_ = ring->ideal_closure_set(gens);
    I.ring_ = std::move(ring);
    return I;
}

Ideal Ideal::z_ideal(RingPtr ring, Int n) {
    if (!ring->is_integers()) throw ValidationError("z_ideal requires the integer ring");
    if (n < 0) n = -n;
    Ideal I;
    I.ring_ = std::move(ring);
    I.zn_ = n;
    return I;
}

const ElemSet& Ideal::elems() const {
    if (!finite_rep()) throw ValidationError("infinite ring");
    return elems_;
}

Int Ideal::zgen() const {
    if (finite_rep()) throw ValidationError("not an integer-ring ideal");
    return zn_;
}

std::vector<Int> Ideal::gens() const {
    if (!finite_rep()) return {zn_};
    if (!gens_cache_) gens_cache_ = ring_->generators_for(elems_);
    std::vector<Int> out(gens_cache_->begin(), gens_cache_->end());
    return out;
}

bool Ideal::contains(Int v) const {
    if (finite_rep()) return elems_.test(int(v));
    return zn_ == 0 ? v == 0 : v % zn_ == 0;
}

bool Ideal::is_proper() const { return !contains(finite_rep() ? ring_->one() : 1); }

bool Ideal::is_zero() const { return finite_rep() ? elems_.count() == 1 : zn_ == 0; }

bool Ideal::subset_of(const Ideal& o) const {
    require_same(ring_, o.ring_);
    if (finite_rep()) return elems_.subset_of(o.elems_);
    return o.zn_ == 0 ? zn_ == 0 : zn_ % o.zn_ == 0;
}

bool Ideal::operator==(const Ideal& o) const {
    if (!ring_->same_ring(*o.ring_)) return false;
    return finite_rep() ? elems_ == o.elems_ : zn_ == o.zn_;
}

bool Ideal::canonical_less(const Ideal& o) const {
    if (finite_rep()) return elems_.canonical_less(o.elems_);
    auto key = [](Int n) { return n == 0 ? std::numeric_limits<Int>::max() : n; };
    return key(zn_) < key(o.zn_);
}

std::string Ideal::str() const {
    if (!finite_rep()) return std::to_string(zn_) + "Z";
    std::string out = "(";
    auto gs = gens();
    if (gs.empty()) out += "0";
    for (size_t i = 0; i < gs.size(); ++i) {
        if (i) out += ",";
        out += ring_->element_str(gs[i]);
    }
    return out + ")";
}

// --- MultiplicativeSet --------------------------------------------------------

MultiplicativeSet MultiplicativeSet::from_closed_set(RingPtr ring, ElemSet elems,
                                                     std::vector<int> gens) {
    if (!ring->is_finite()) throw ValidationError("explicit sets require a finite ring");
    if (!elems.test(ring->one())) throw ValidationError("multiplicative set must contain 1");
    if (elems.test(0)) throw ValidationError("degenerate multiplicative set contains 0");
    auto members = elems.to_list();
    for (int a : members)
        for (int b : members)
            if (!elems.test(ring->mul(a, b)))
                throw ValidationError("set is not multiplicatively closed");
    if (gens.empty()) {
        // greedy generators whose closure is exactly the set
        ElemSet cur(ring->size());
        cur.set(ring->one());
        for (int a : members) {
            if (cur.test(a)) continue;
            gens.push_back(a);
            std::vector<int> items = cur.to_list();
            cur.set(a);
            items.push_back(a);
            for (size_t i = 0; i < items.size(); ++i)
                for (size_t j = 0; j <= i; ++j) {
                    int x = ring->mul(items[i], items[j]);
                    if (!cur.test(x)) {
                        cur.set(x);
                        items.push_back(x);
                    }
                }
        }
    }
    MultiplicativeSet S;
    S.ring_ = std::move(ring);
    S.elems_ = std::move(elems);
    S.gens_ = std::move(gens);
    return S;
}

MultiplicativeSet MultiplicativeSet::z_prime_set(RingPtr ring, std::vector<Int> primes,
                                                 bool units) {
    if (!ring->is_integers()) throw ValidationError("prime-set shape requires the integer ring");
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (Int p : primes)
        if (!is_prime_int(p)) throw ValidationError("prime-set entries must be prime");
    MultiplicativeSet S;
    S.ring_ = std::move(ring);
    S.zshape_ = ZShape::PrimeSet;
    S.zprimes_ = std::move(primes);
    S.zunits_ = units;
    return S;
}

MultiplicativeSet MultiplicativeSet::z_complement_of_prime(RingPtr ring, Int p) {
    if (!ring->is_integers())
        throw ValidationError("complement-of-prime shape requires the integer ring");
    if (!is_prime_int(p)) throw ValidationError("complement_of_prime requires a prime");
    MultiplicativeSet S;
    S.ring_ = std::move(ring);
    S.zshape_ = ZShape::ComplementOfPrime;
    S.zp_ = p;
    return S;
}

const ElemSet& MultiplicativeSet::elems() const {
    if (!finite_rep()) throw ValidationError("integer-ring sets have no element list");
    return elems_;
}

bool MultiplicativeSet::contains(Int v) const {
    if (finite_rep()) return elems_.test(int(v));
    if (zshape_ == ZShape::ComplementOfPrime) return mod_nonneg(v, zp_) != 0;
    if (v == 0) return false;
    if (v < 0 && !zunits_) return false;
    Int a = v < 0 ? -v : v;
    for (auto& [p, e] : factorize(a))
        if (!std::binary_search(zprimes_.begin(), zprimes_.end(), p)) return false;
    return true;
}

bool MultiplicativeSet::is_trivial() const {
    if (finite_rep()) return elems_.count() == 1;
    return zshape_ == ZShape::PrimeSet && zprimes_.empty() && !zunits_;
}

std::vector<std::pair<Int, Int>> MultiplicativeSet::attainable_residues(Int n) const {
    if (finite_rep()) throw ValidationError("residues apply to integer-ring sets");
    if (n < 1) throw ValidationError("modulus must be positive");
    std::vector<std::pair<Int, Int>> out;
    if (zshape_ == ZShape::ComplementOfPrime) {
        const Int p = zp_;
        if (n % p == 0) {
            for (Int r = 1; r < n; ++r)
                if (r % p != 0) out.emplace_back(r, r);
        } else {
            for (Int r = 0; r < n; ++r) {
                if (r == 0)
                    out.emplace_back(r, n);
                else
                    out.emplace_back(r, r % p == 0 ? r + n : r);
            }
        }
        return out;
    }
    // smallest-magnitude product of allowed primes per residue class
    struct State {
        unsigned long long mag;
        Int res;
        Int wit;
    };
    auto cmp = [](const State& a, const State& b) {
        return a.mag != b.mag ? a.mag > b.mag : a.res > b.res;
    };
    std::priority_queue<State, std::vector<State>, decltype(cmp)> pq(cmp);
    pq.push({1, mod_nonneg(1, n), 1});
    if (zunits_) pq.push({1, mod_nonneg(-1, n), -1});
    std::vector<char> seen(size_t(n), 0);
    while (!pq.empty()) {
        State st = pq.top();
        pq.pop();
        if (seen[size_t(st.res)]) continue;
        seen[size_t(st.res)] = 1;
        out.emplace_back(st.res, st.wit);
        for (Int p : zprimes_) {
            if (st.mag > (~0ull / 2) / (unsigned long long)p) continue;
            unsigned long long m2 = st.mag * (unsigned long long)p;
            if (m2 > (unsigned long long)std::numeric_limits<Int>::max()) continue;
            pq.push({m2, mod_nonneg(st.res * (p % n), n), checked_mul(st.wit, p)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string MultiplicativeSet::str() const {
    if (finite_rep()) {
        std::string out = "{";
        bool first = true;
        elems_.for_each([&](int x) {
            if (!first) out += ",";
            first = false;
            out += ring_->element_str(x);
        });
        return out + "}";
    }
    if (zshape_ == ZShape::ComplementOfPrime) return "Z\\" + std::to_string(zp_) + "Z";
    std::string out = "<";
    for (size_t i = 0; i < zprimes_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(zprimes_[i]);
    }
    out += ">";
    if (zunits_) out += "+-";
    return out;
}

// --- operations ----------------------------------------------------------------

Ideal ideal_generate(const RingPtr& ring, const std::vector<RingElement>& gens) {
    if (ring->is_integers()) {
        Int g = 0;
        for (const auto& e : gens) {
            if (!e.ring->same_ring(*ring)) throw ValidationError("cross-ring operands");
            g = gcd_int(g, e.v < 0 ? -e.v : e.v);
        }
        return Ideal::z_ideal(ring, g);
    }
    std::vector<int> idx;
    for (const auto& e : gens) {
        if (!e.ring->same_ring(*ring)) throw ValidationError("cross-ring operands");
        idx.push_back(int(e.v));
    }
    return Ideal::from_gen_indices(ring, idx);
}

Ideal ideal_generate_json(const RingPtr& ring, const json& gen_payloads) {
    if (!gen_payloads.is_array()) throw ParseError("ideal generators must be an array");
    std::vector<RingElement> gens;
    for (const auto& g : gen_payloads) gens.push_back({ring, ring->element_from_json(g)});
    return ideal_generate(ring, gens);
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same(a.ring(), b.ring());
    if (!a.finite_rep()) return Ideal::z_ideal(a.ring(), gcd_int(a.zgen(), b.zgen()));
    return Ideal::from_set(a.ring(), a.ring()->additive_closure(a.elems() | b.elems()));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    require_same(a.ring(), b.ring());
    if (!a.finite_rep()) return Ideal::z_ideal(a.ring(), lcm_int(a.zgen(), b.zgen()));
    return Ideal::from_set(a.ring(), a.elems() & b.elems());
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    require_same(a.ring(), b.ring());
    if (!a.finite_rep()) return Ideal::z_ideal(a.ring(), checked_mul(a.zgen(), b.zgen()));
    const auto& R = a.ring();
    ElemSet prods(R->size());
    prods.set(0);
    a.elems().for_each(
        [&](int x) { b.elems().for_each([&](int y) { prods.set(R->mul(x, y)); }); });
    return Ideal::from_set(R, R->additive_closure(std::move(prods)));
}

Ideal ideal_colon(const Ideal& I, const RingElement& s) {
    require_same(I.ring(), s.ring);
    if (!I.finite_rep()) {
        Int n = I.zgen(), v = s.v < 0 ? -s.v : s.v;
        if (n == 0) return Ideal::z_ideal(I.ring(), v == 0 ? 1 : 0);
        Int g = gcd_int(n, v);  // gcd(n, 0) = n, covering (nZ : 0) = Z
        return Ideal::z_ideal(I.ring(), n / g);
    }
    const auto& R = I.ring();
    ElemSet out(R->size());
    for (int a = 0; a < R->size(); ++a)
        if (I.elems().test(R->mul(int(s.v), a))) out.set(a);
    return Ideal::from_set(R, std::move(out));
}

Ideal ideal_colon_ideal(const Ideal& I, const Ideal& J) {
    require_same(I.ring(), J.ring());
    if (!I.finite_rep()) {
        Int n = I.zgen(), m = J.zgen();
        if (n == 0) return Ideal::z_ideal(I.ring(), m == 0 ? 1 : 0);
        Int g = gcd_int(n, m);
        return Ideal::z_ideal(I.ring(), n / g);
    }
    const auto& R = I.ring();
    auto jgens = J.gens();
    ElemSet out(R->size());
    for (int a = 0; a < R->size(); ++a) {
        bool ok = true;
        for (Int g : jgens)
            if (!I.elems().test(R->mul(a, int(g)))) {
                ok = false;
                break;
            }
        if (ok) out.set(a);
    }
    return Ideal::from_set(R, std::move(out));
}

Ideal radical(const Ideal& I) {
    if (!I.finite_rep()) return Ideal::z_ideal(I.ring(), squarefree_kernel(I.zgen()));
    const auto& R = I.ring();
    const int n = R->size();
    ElemSet out(n);
    for (int a = 0; a < n; ++a) {
        int x = a;
        for (int k = 1; k <= n; ++k) {
            if (I.elems().test(x)) {
                out.set(a);
                break;
            }
            x = R->mul(x, a);
        }
    }
    return Ideal::from_set(R, std::move(out));
}

Ideal nilradical(const RingPtr& ring) {
    if (ring->is_integers()) return Ideal::z_ideal(ring, 0);
    return Ideal::from_set(ring, ring->nil_set());
}

Ideal saturation(const Ideal& I, const MultiplicativeSet& S) {
    require_same(I.ring(), S.ring());
    if (!I.finite_rep()) {
        Int n = I.zgen();
        if (n == 0) return Ideal::z_ideal(I.ring(), 0);
        Int out = 1;
        for (auto& [p, e] : factorize(n)) {
            bool invertible = S.zshape() == MultiplicativeSet::ZShape::ComplementOfPrime
                                  ? p != S.zcomp_prime()
                                  : std::binary_search(S.zprimes().begin(), S.zprimes().end(), p);
            if (!invertible) out = checked_mul(out, checked_pow(p, e));
        }
        return Ideal::z_ideal(I.ring(), out);
    }
    const auto& R = I.ring();
    ElemSet out(R->size());
    for (int a = 0; a < R->size(); ++a) {
        bool found = false;
        S.elems().for_each([&](int s) {
            if (!found && I.elems().test(R->mul(s, a))) found = true;
        });
        if (found) out.set(a);
    }
    return Ideal::from_set(R, std::move(out));
}

std::vector<Ideal> enumerate_ideals(const RingPtr& ring) {
    if (!ring->is_finite()) throw ValidationError("infinite ring");
    std::vector<Ideal> out;
    for (const auto& d : ring->all_ideals()) out.push_back(Ideal::from_set(ring, d.elems));
    return out;
}

MultiplicativeSet mset_closure(const RingPtr& ring, const std::vector<RingElement>& gens) {
    if (!ring->is_finite()) throw ValidationError("explicit closures require a finite ring");
    std::vector<int> gidx;
    for (const auto& g : gens) {
        if (!g.ring->same_ring(*ring)) throw ValidationError("cross-ring operands");
        if (g.v == 0) throw ValidationError("multiplicative set generators must be nonzero");
        gidx.push_back(int(g.v));
    }
    std::sort(gidx.begin(), gidx.end());
    gidx.erase(std::unique(gidx.begin(), gidx.end()), gidx.end());
    ElemSet set(ring->size());
    set.set(ring->one());
    std::vector<int> items{ring->one()};
    for (int g : gidx) {
        if (!set.test(g)) {
            set.set(g);
            items.push_back(g);
        }
    }
    for (size_t i = 0; i < items.size(); ++i)
        for (size_t j = 0; j <= i; ++j) {
            int x = ring->mul(items[i], items[j]);
            if (x == 0) {
                std::string chain = ring->element_str(items[i]) + "*" + ring->element_str(items[j]);
                throw ValidationError("multiplicative closure reached 0: " + chain + " = 0");
            }
            if (!set.test(x)) {
                set.set(x);
                items.push_back(x);
            }
        }
    return MultiplicativeSet::from_closed_set(ring, std::move(set), std::move(gidx));
}

MultiplicativeSet mset_trivial(const RingPtr& ring) {
    if (ring->is_integers()) return MultiplicativeSet::z_prime_set(ring, {}, false);
    ElemSet s(ring->size());
    s.set(ring->one());
    return MultiplicativeSet::from_closed_set(ring, std::move(s), {});
}

bool is_divided(const Ideal& I) {
    if (!I.finite_rep()) throw ValidationError("divided test requires a finite ring");
    const auto& R = I.ring();
    for (int a = 0; a < R->size(); ++a) {
        if (I.elems().test(a)) continue;
        if (!I.elems().subset_of(R->principal_set(a))) return false;
    }
    return true;
}

bool disjoint_from(const Ideal& I, const MultiplicativeSet& S) {
    require_same(I.ring(), S.ring());
    if (I.finite_rep()) return !I.elems().intersects(S.elems());
    Int n = I.zgen();
    if (n == 0) return true;  // S never contains 0
    if (S.zshape() == MultiplicativeSet::ZShape::ComplementOfPrime)
        return n % S.zcomp_prime() == 0;
    for (auto& [p, e] : factorize(n))
        if (!std::binary_search(S.zprimes().begin(), S.zprimes().end(), p)) return true;
    return false;
}

Ideal unit_ideal(const RingPtr& ring) {
    if (ring->is_integers()) return Ideal::z_ideal(ring, 1);
    ElemSet s(ring->size());
    for (int i = 0; i < ring->size(); ++i) s.set(i);
    return Ideal::from_set(ring, std::move(s));
}

Ideal zero_ideal(const RingPtr& ring) {
    if (ring->is_integers()) return Ideal::z_ideal(ring, 0);
    ElemSet s(ring->size());
    s.set(0);
    return Ideal::from_set(ring, std::move(s));
}

Ideal principal_ideal(const RingElement& a) {
    if (a.ring->is_integers()) return Ideal::z_ideal(a.ring, a.v < 0 ? -a.v : a.v);
    return Ideal::from_set(a.ring, a.ring->principal_set(int(a.v)));
}

Ideal ideal_image_in_quotient(const RingPtr& quot, const Ideal& I) {
    if (quot->kind() != RingKind::Quotient) throw ValidationError("not a quotient ring");
    require_same(quot->base_ring(), I.ring());
    ElemSet img(quot->size());
    I.elems().for_each([&](int x) { img.set(quot->project(x)); });
    return Ideal::from_set(quot, std::move(img));
}

Ideal ideal_preimage_from_quotient(const Ideal& J) {
    const auto& Q = J.ring();
    if (Q->kind() != RingKind::Quotient) throw ValidationError("not a quotient ring");
    RingPtr base = Q->base_ring();
    ElemSet pre(base->size());
    for (int x = 0; x < base->size(); ++x)
        if (J.elems().test(Q->project(x))) pre.set(x);
    return Ideal::from_set(base, std::move(pre));
}

MultiplicativeSet mset_image_in_quotient(const RingPtr& quot, const MultiplicativeSet& S) {
    if (quot->kind() != RingKind::Quotient) throw ValidationError("not a quotient ring");
    require_same(quot->base_ring(), S.ring());
    ElemSet img(quot->size());
    S.elems().for_each([&](int s) { img.set(quot->project(s)); });
    return MultiplicativeSet::from_closed_set(quot, std::move(img));
}

Ideal ideal_image_in_localization(const RingPtr& loc, const Ideal& I) {
    if (loc->kind() != RingKind::Localization) throw ValidationError("not a localization");
    require_same(loc->base_ring(), I.ring());
    std::vector<int> gens;
    I.elems().for_each([&](int x) { gens.push_back(loc->localization_image(x)); });
    return Ideal::from_gen_indices(loc, gens);
}

}  // namespace sprimary
