#pragma once

// Subsets of a finite Abelian group as bit-vectors of length order(G).
// Provides the translate/sumset/negate/complement algebra plus the two
// operators the union-closed machinery is built from: the R-neighbourhood
// (dilation of A by R) and the R-interior (erosion of A by R), and the
// pairing map that partners each set S with the negated complement of its
// R-interior so that the two sizes always sum to at least |G|.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ucc/group.hpp"

namespace ucc {

class GSubset {
public:
    // The empty set over the given universe.
    explicit GSubset(GroupSpec spec);

    // Takes ownership of a raw word vector; it must have exactly the right
    // number of words and zero padding bits.
    GSubset(GroupSpec spec, std::vector<std::uint64_t> words);

    static GSubset empty_set(GroupSpec spec);
    static GSubset full_set(GroupSpec spec);
    static GSubset of(GroupSpec spec, std::initializer_list<int> elems);
    static GSubset from_elements(GroupSpec spec, const std::vector<int>& elems);

    // Set-literal grammar: comma-separated decimal element indices,
    // e.g. "0,1,3"; the empty set is spelled "-". Duplicates and arbitrary
    // order are accepted on input; output is ascending.
    static GSubset parse(GroupSpec spec, std::string_view literal);
    std::string to_literal() const;

    const GroupSpec& group() const { return spec_; }
    int universe() const { return spec_.order(); }

    bool test(int element) const;
    GSubset& set(int element);
    GSubset& reset(int element);

    int count() const;
    bool none() const { return count() == 0; }
    bool all() const { return count() == universe(); }
    std::vector<int> elements() const;

    GSubset complement() const;
    GSubset negate() const;
    bool is_symmetric() const;

    // {g + a : a in A}. Implemented per cyclic factor as a blockwise
    // rotation of the bit-vector, so it costs O(words) per factor.
    GSubset translate(int g) const;

    // {a + b : a in A, b in B}, as a union of translates of the larger
    // operand over the elements of the smaller one.
    GSubset sumset(const GSubset& other) const;

    // other is a subset of *this.
    bool includes(const GSubset& other) const;

    GSubset operator|(const GSubset& other) const;
    GSubset operator&(const GSubset& other) const;
    GSubset& operator|=(const GSubset& other);
    GSubset& operator&=(const GSubset& other);

    // Same universe and same bits. Subsets of different universes are
    // never equal.
    bool operator==(const GSubset& other) const;
    bool operator!=(const GSubset& other) const { return !(*this == other); }

    // Total order used everywhere for canonical output: bit-vectors read
    // as integers with bit i weighted 2^i. Returns -1, 0 or 1.
    static int compare(const GSubset& a, const GSubset& b);

    std::size_t hash() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void check_same_universe(const GSubset& other) const;
    void clear_padding();

    GroupSpec spec_;
    std::vector<std::uint64_t> words_;
};

// N_R(A) = A + R: every translate of R by an element of A, unioned.
GSubset neighbourhood(const GSubset& a, const GSubset& r);

// Int_R(A) = {x : x + R is contained in A}, computed as the intersection
// of the translates of A by the inverses of the elements of R.
GSubset interior(const GSubset& a, const GSubset& r);

// The pairing map: S maps to the negated complement of its R-interior.
// On the translate family of R this is a bijection pairing each member S
// with a partner so that |S| + |partner| >= |G|. R must be nonempty.
GSubset pairing_map(const GSubset& s, const GSubset& r);

// The same map computed along the sumset route: (-(G \ S)) + R. Agrees
// with pairing_map on every input; the verifier checks exactly that.
GSubset pairing_map_by_sumset(const GSubset& s, const GSubset& r);

}  // namespace ucc
