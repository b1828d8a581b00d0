#include "sprimary/decompose.hpp"

#include <algorithm>

namespace sprimary {

Ideal Decomposition::intersection() const {
    Ideal acc = unit_ideal(target.ring());
    for (const auto& c : components) acc = ideal_intersect(acc, c.Q);
    return acc;
}

std::vector<std::pair<Ideal, RingElement>> s_primary_ideals(const RingPtr& ring,
                                                            const MultiplicativeSet& S) {
    std::vector<std::pair<Ideal, RingElement>> out;
    for (auto& I : enumerate_ideals(ring)) {
        if (!I.is_proper() || !disjoint_from(I, S)) continue;
        SPrimaryCertificate c = is_s_primary(I, S);
        if (c.verdict) out.emplace_back(I, *c.witness);
    }
    return out;
}

namespace {

Decomposition attach_report(Decomposition d, const MultiplicativeSet& S) {
    d.minimal = verify_minimality(d, S);
    return d;
}

// k-subset scan in lexicographic index order with early exit on exact match
bool combination_search(const std::vector<const ElemSet*>& cand, const ElemSet& target, int k,
                        std::vector<int>& pick) {
    std::vector<int> idx(k);
    std::vector<ElemSet> partial(k + 1);
    partial[0] = ElemSet(target.universe());
    for (int i = 0; i < target.universe(); ++i) partial[0].set(i);
    int m = int(cand.size());
    int level = 0;
    idx[0] = 0;
    while (level >= 0) {
        if (idx[level] >= m - (k - 1 - level)) {
            --level;
            if (level >= 0) ++idx[level];
            continue;
        }
        partial[level + 1] = partial[level] & *cand[idx[level]];
        if (level + 1 == k) {
            if (partial[k] == target) {
                pick.assign(idx.begin(), idx.end());
                return true;
            }
            ++idx[level];
        } else {
            ++level;
            idx[level] = idx[level - 1] + 1;
        }
    }
    return false;
}

}  // namespace

std::optional<Decomposition> decompose_finite_with_pool(
    const Ideal& I, const MultiplicativeSet& S,
    const std::vector<std::pair<Ideal, RingElement>>& pool) {
    if (!I.finite_rep()) throw ValidationError("decompose_finite requires a finite ring");
    if (!I.is_proper()) throw ValidationError("improper ideal");
    if (!disjoint_from(I, S)) throw ValidationError("ideal meets the multiplicative set");

    std::vector<const ElemSet*> cand;
    std::vector<int> cand_pool_idx;
    for (size_t i = 0; i < pool.size(); ++i)
        if (I.elems().subset_of(pool[i].first.elems())) {
            cand.push_back(&pool[i].first.elems());
            cand_pool_idx.push_back(int(i));
        }
    for (int k = 1; k <= int(cand.size()); ++k) {
        std::vector<int> pick;
        if (combination_search(cand, I.elems(), k, pick)) {
            Decomposition d;
            d.target = I;
            for (int c : pick) {
                const auto& [Q, w] = pool[cand_pool_idx[c]];
                d.components.push_back({Q, radical(Q), w});
            }
            return attach_report(std::move(d), S);
        }
    }
    return std::nullopt;
}

std::optional<Decomposition> decompose_finite(const Ideal& I, const MultiplicativeSet& S) {
    if (!I.finite_rep()) throw ValidationError("decompose_finite requires a finite ring");
    return decompose_finite_with_pool(I, S, s_primary_ideals(I.ring(), S));
}

Decomposition decompose_integers(const Ideal& I, const MultiplicativeSet& S) {
    if (I.finite_rep()) throw ValidationError("decompose_integers requires the integer ring");
    const Int n = I.zgen();
    if (n < 2) throw ValidationError("decompose_integers requires a proper nonzero ideal");
    if (!disjoint_from(I, S)) throw ValidationError("ideal meets the multiplicative set");
    auto invertible = [&](Int p) {
        return S.zshape() == MultiplicativeSet::ZShape::ComplementOfPrime
                   ? p != S.zcomp_prime()
                   : std::binary_search(S.zprimes().begin(), S.zprimes().end(), p);
    };
    Int u = 1;
    std::vector<std::pair<Int, int>> rest;
    for (auto& [p, e] : factorize(n)) {
        if (invertible(p))
            u = checked_mul(u, checked_pow(p, e));
        else
            rest.emplace_back(p, e);
    }
    if (rest.empty()) throw ValidationError("ideal meets the multiplicative set");  // unreachable
    Decomposition d;
    d.target = I;
    Int check_lcm = 1;
    for (auto& [q, f] : rest) {
        Int g = checked_mul(u, checked_pow(q, f));
        Ideal Q = Ideal::z_ideal(I.ring(), g);
        SPrimaryCertificate c = is_s_primary(Q, S);  // residue-search re-check
        if (!c.verdict)
            throw ValidationError("decompose_integers: component " + std::to_string(g) +
                                  " failed the S-primary re-check");
        d.components.push_back({Q, radical(Q), *c.witness});
        check_lcm = lcm_int(check_lcm, g);
    }
    if (check_lcm != n)
        throw ValidationError("decompose_integers: components do not intersect to the target");
    return attach_report(std::move(d), S);
}

void validate_decomposition(const Decomposition& d, const MultiplicativeSet& S) {
    if (d.components.empty()) throw ValidationError("decomposition has no components");
    for (const auto& c : d.components) {
        if (!c.Q.ring()->same_ring(*d.target.ring()))
            throw ValidationError("decomposition mixes rings");
        if (!c.Q.is_proper()) throw ValidationError("decomposition component is improper");
        if (!disjoint_from(c.Q, S))
            throw ValidationError("decomposition component meets the multiplicative set");
        if (!(radical(c.Q) == c.P))
            throw ValidationError("decomposition component radical mismatch");
        if (!is_s_primary(c.Q, S).verdict)
            throw ValidationError("decomposition component is not S-primary");
    }
    if (!(d.intersection() == d.target))
        throw ValidationError("decomposition does not intersect to its target");
}

MinimalityReport verify_minimality(const Decomposition& d, const MultiplicativeSet& S) {
    validate_decomposition(d, S);
    MinimalityReport rep;
    const int n = int(d.components.size());
    std::vector<Ideal> SP, SQ;
    for (const auto& c : d.components) {
        SP.push_back(saturation(c.P, S));
        SQ.push_back(saturation(c.Q, S));
    }
    rep.distinct_saturated_radicals = true;
    for (int i = 0; i < n && rep.distinct_saturated_radicals; ++i)
        for (int j = i + 1; j < n; ++j)
            if (SP[i] == SP[j]) {
                rep.distinct_saturated_radicals = false;
                rep.radical_clash = {i, j};
                break;
            }
    rep.redundant_saturated.resize(n);
    rep.redundant_plain.resize(n);
    for (int i = 0; i < n; ++i) {
        Ideal inter_sat = unit_ideal(d.target.ring());
        Ideal inter_plain = unit_ideal(d.target.ring());
        for (int j = 0; j < n; ++j)
            if (j != i) {
                inter_sat = ideal_intersect(inter_sat, SQ[j]);
                inter_plain = ideal_intersect(inter_plain, d.components[j].Q);
            }
        rep.redundant_saturated[i] = inter_sat.subset_of(SQ[i]);
        rep.redundant_plain[i] = inter_plain.subset_of(SQ[i]);
    }
    rep.forms_agree = rep.redundant_saturated == rep.redundant_plain;
    bool irredundant = true;
    for (int i = 0; i < n; ++i)
        if (rep.redundant_saturated[i]) irredundant = false;
    rep.minimal = rep.distinct_saturated_radicals && irredundant;
    return rep;
}

Decomposition minimalize(const Ideal& I, const MultiplicativeSet& S, const Decomposition& input) {
    if (!(input.target == I)) throw ValidationError("decomposition target mismatch");
    validate_decomposition(input, S);
    const RingPtr& R = I.ring();
    const bool finite = R->is_finite();

    // s* with (Q_i : s*) = S(Q_i) simultaneously; the witness product leads
    std::vector<Ideal> satQ;
    for (const auto& c : input.components) satQ.push_back(saturation(c.Q, S));
    auto achieves = [&](const RingElement& s) {
        for (size_t i = 0; i < satQ.size(); ++i)
            if (!(ideal_colon(input.components[i].Q, s) == satQ[i])) return false;
        return true;
    };
    std::optional<RingElement> sstar;
    {
        std::vector<RingElement> candidates;
        RingElement prod{R, finite ? Int(R->one()) : 1};
        bool prod_ok = true;
        for (const auto& c : input.components) {
            try {
                prod = ring_mul(prod, c.s);
            } catch (const ValidationError&) {
                prod_ok = false;
                break;
            }
        }
        if (prod_ok) candidates.push_back(prod);
        if (finite) {
            S.elems().for_each([&](int s) { candidates.push_back(RingElement{R, s}); });
        } else {
            Int t = 1;
            for (size_t i = 0; i < satQ.size(); ++i) {
                Int g = input.components[i].Q.zgen();
                if (g != 0) t = checked_mul(t, g / satQ[i].zgen());
            }
            candidates.push_back(RingElement{R, t});
        }
        for (const auto& s : candidates)
            if (S.contains(s.v) && achieves(s)) {
                sstar = s;
                break;
            }
    }
    if (!sstar)
        throw ValidationError(
            "minimalize: no s in S achieves S(Q_i) = (Q_i : s) for all components "
            "simultaneously");

    // group by saturated radical, intersect saturations within groups
    std::vector<Ideal> satP;
    for (const auto& c : input.components) satP.push_back(saturation(c.P, S));
    std::vector<Ideal> group_key;
    std::vector<Ideal> group_sat;  // S(I'_t)
    for (size_t i = 0; i < input.components.size(); ++i) {
        int g = -1;
        for (size_t t = 0; t < group_key.size(); ++t)
            if (group_key[t] == satP[i]) {
                g = int(t);
                break;
            }
        if (g < 0) {
            group_key.push_back(satP[i]);
            group_sat.push_back(satQ[i]);
        } else {
            group_sat[g] = ideal_intersect(group_sat[g], satQ[i]);
        }
    }

    // drop groups whose saturation contains the intersection of the others
    std::vector<bool> alive(group_sat.size(), true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t t = 0; t < group_sat.size() && !changed; ++t) {
            if (!alive[t]) continue;
            Ideal others = unit_ideal(R);
            bool any = false;
            for (size_t u = 0; u < group_sat.size(); ++u)
                if (u != t && alive[u]) {
                    others = ideal_intersect(others, group_sat[u]);
                    any = true;
                }
            if (any && others.subset_of(group_sat[t])) {
                alive[t] = false;
                changed = true;
            }
        }
    }

    Ideal cut = ideal_sum(I, principal_ideal(*sstar));  // I + R s*
    Decomposition out;
    out.target = I;
    for (size_t t = 0; t < group_sat.size(); ++t) {
        if (!alive[t]) continue;
        Ideal Q = ideal_intersect(group_sat[t], cut);
        RingElement w = *sstar;
        if (!recheck_s_primary_witness(Q, S, w)) {
            SPrimaryCertificate c = is_s_primary(Q, S);
            if (!c.verdict)
                throw ValidationError("minimalize: rewritten component is not S-primary");
            w = *c.witness;
        }
        out.components.push_back({Q, radical(Q), w});
    }
    if (!(out.intersection() == I))
        throw ValidationError("minimalize: rewritten components do not intersect to the target");
    out.minimal = verify_minimality(out, S);
    if (!out.minimal->minimal)
        throw ValidationError("minimalize: output failed the minimality conditions");
    return out;
}

ColonSplit colon_split_identity(const Ideal& I, const RingElement& s) {
    if (!I.finite_rep()) throw ValidationError("colon split sweep requires a finite ring");
    if (!s.ring->same_ring(*I.ring())) throw ValidationError("cross-ring operands");
    Ideal c1 = ideal_colon(I, s);
    Ideal c2 = ideal_colon(I, ring_mul(s, s));
    if (!(c1 == c2))
        throw ValidationError("colon split precondition (I : s) = (I : s^2) does not hold");
    Ideal right = ideal_sum(I, principal_ideal(s));
    ColonSplit out{c1, right, ideal_intersect(c1, right) == I};
    return out;
}

std::optional<std::pair<Ideal, RingElement>> find_s_maximal(const std::vector<Ideal>& family,
                                                            const MultiplicativeSet& S) {
    if (family.empty()) throw ValidationError("empty family");
    const RingPtr& R = family.front().ring();
    if (!R->is_finite()) throw ValidationError("find_s_maximal requires a finite ring");
    auto cands = S.elems().to_list();
    for (const auto& I : family) {
        for (int s : cands) {
            bool ok = true;
            for (const auto& J : family) {
                if (!I.subset_of(J)) continue;
                bool sJ_in_I = true;
                J.elems().for_each([&](int x) {
                    if (sJ_in_I && !I.contains(R->mul(s, x))) sJ_in_I = false;
                });
                if (!sJ_in_I) {
                    ok = false;
                    break;
                }
            }
            if (ok) return std::make_pair(I, RingElement{R, s});
        }
    }
    return std::nullopt;
}

}  // namespace sprimary
