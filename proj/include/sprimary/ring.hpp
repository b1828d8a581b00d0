#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sprimary/util.hpp"
#include "sprimary/zint.hpp"

namespace sprimary {

using json = nlohmann::json;

enum class RingKind { Zmod, Product, PolyQuot, Quotient, Idealization, Localization, Integers };

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ideal;
class MultiplicativeSet;

inline constexpr int kDefaultSizeCap = 4096;

/// Size cap used when none is given; SPRIMARY_SIZE_CAP overrides the default.
int default_size_cap();

struct IdealData {
    ElemSet elems;
    std::vector<int> gens;
};

/// A commutative ring with identity. Finite rings carry full operation
/// tables over element indices 0..n-1 with index 0 the zero element; the
/// integer ring carries no tables and its elements are Int values.
/// Immutable after construction; lazily computed views are cached behind a
/// mutex and behave as if recomputed.
class Ring : public std::enable_shared_from_this<Ring> {
public:
    /// Build and validate a ring from a specification record, e.g.
    /// {"kind":"zmod","n":12}. Ring axioms are verified exhaustively for
    /// finite rings up to 64 elements, quadratically above that.
    static RingPtr construct(const json& spec, int size_cap = 0);
    static RingPtr integers();

    RingKind kind() const { return kind_; }
    bool is_finite() const { return kind_ != RingKind::Integers; }
    bool is_integers() const { return kind_ == RingKind::Integers; }

    int size() const;
    int zero() const { return 0; }
    int one() const { return one_; }

    int add(int a, int b) const { return add_[size_t(a) * n_ + b]; }
    int mul(int a, int b) const { return mul_[size_t(a) * n_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int pow(int a, long long e) const;

    const json& spec() const { return spec_; }
    const std::string& id() const { return id_; }
    bool same_ring(const Ring& o) const { return id_ == o.id_; }

    json element_to_json(Int v) const;
    Int element_from_json(const json& j) const;
    std::string element_str(Int v) const;

    /// Base ring of a quotient / idealization / localization.
    RingPtr base_ring() const;
    /// Quotient kind: surjection base element -> coset index.
    int project(int base_idx) const;
    /// Localization kind: canonical map base element -> fraction class.
    int localization_image(int base_idx) const;

    /// Nilpotent elements (lazy).
    const ElemSet& nil_set() const;
    /// Units (lazy).
    const ElemSet& unit_set() const;
    /// Every ideal, canonically ordered by (cardinality, membership mask);
    /// computed once per ring (lazy, read-mostly cache).
    const std::vector<IdealData>& all_ideals() const;
    /// Index of an ideal's member set within all_ideals(), or -1.
    int ideal_index(const ElemSet& elems) const;

    /// Principal ideal aR as a member set.
    ElemSet principal_set(int a) const;
    /// Additive closure of a member set (the ideal it spans when the set is
    /// already closed under ring multiples).
    ElemSet additive_closure(ElemSet s) const;
    /// Smallest ideal containing the given elements.
    ElemSet ideal_closure_set(const std::vector<int>& gens) const;
    /// Greedy generator list that regenerates exactly `elems`.
    std::vector<int> generators_for(const ElemSet& elems) const;

private:
    Ring() = default;
    friend struct RingBuilder;

    RingKind kind_ = RingKind::Integers;
    json spec_;
    std::string id_;
    int n_ = 0;  // 0 for the integer ring
    int one_ = 0;
    std::vector<uint16_t> add_, mul_;
    std::vector<uint16_t> neg_;

    // per-kind structure
    Int zn_ = 0;                          // zmod modulus
    std::vector<RingPtr> factors_;        // product
    std::vector<int> strides_;            // product mixed-radix strides
    Int pq_p_ = 0;                        // poly quotient characteristic
    std::vector<int> pq_f_;               // poly quotient modulus coefficients (ascending)
    RingPtr base_;                        // quotient / idealization / localization
    std::vector<int> qclass_of_;          // quotient: base elem -> class
    std::vector<int> qreps_;              // quotient: class -> canonical base rep
    Int ideal_m_ = 0;                     // idealization modulus
    std::vector<int> ideal_action_;       // idealization hom base -> Z/m
    std::vector<int> loc_map_;            // localization: base elem -> class
    std::vector<int> loc_vals_;           // localization: class -> corner value in base
    std::vector<std::pair<int, int>> loc_pairs_;  // class -> canonical (a, s) base pair
    std::vector<int> loc_msels_;          // localization: multiplicative set elements
    std::vector<int> loc_inv_;            // corner inverse of e*s per set element

    mutable std::mutex cache_mu_;
    mutable std::optional<ElemSet> nil_cache_;
    mutable std::optional<ElemSet> unit_cache_;
    mutable std::optional<std::vector<IdealData>> ideals_cache_;
};

/// An element tagged with its ring (finite: index; integers: value).
struct RingElement {
    RingPtr ring;
    Int v = 0;

    bool operator==(const RingElement& o) const { return ring->same_ring(*o.ring) && v == o.v; }
};

RingPtr construct_ring(const json& spec, int size_cap = 0);

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_mul(const RingElement& a, const RingElement& b);
RingElement ring_neg(const RingElement& a);
RingElement ring_pow(const RingElement& a, long long e);

/// All elements of a finite ring in canonical index order.
std::vector<RingElement> enumerate_elements(const RingPtr& ring);

/// R/I with canonical coset representatives; the projection is available via
/// Ring::project on the result. Requires I proper, R finite.
RingPtr quotient_ring(const RingPtr& ring, const Ideal& ideal);

/// S^-1 R for a finite ring; the canonical map a -> a/1 is available via
/// Ring::localization_image on the result.
RingPtr localize(const RingPtr& ring, const MultiplicativeSet& mset);

}  // namespace sprimary
