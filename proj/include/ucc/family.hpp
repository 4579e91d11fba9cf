#pragma once

// Families of group subsets: deduplicated, kept in canonical order (members
// ascending when each bit-vector is read as an integer, bit i weighted 2^i).
// Union-closedness is a checkable property of a family, not an invariant of
// the type. The closure engine computes the smallest union-closed family
// containing a generator collection; the translate family of R is the
// closure of the distinct translates of R together with the empty set, and
// a brute-force enumeration over all 2^|G| subsets serves as its oracle.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "ucc/group.hpp"
#include "ucc/subset.hpp"

namespace ucc {

// Guard for the brute-force oracle: it walks all 2^|G| subsets.
constexpr int kNaiveEnumerationMaxOrder = 20;

// Hard cap on closure size; trips a LimitError rather than eating all
// memory when someone closes a huge generator collection.
constexpr std::size_t kFamilyMemberCap = std::size_t{1} << 20;

class SetFamily {
public:
    explicit SetFamily(GroupSpec spec);

    // Sorts into canonical order and drops duplicates. All members must
    // share the spec.
    SetFamily(GroupSpec spec, std::vector<GSubset> members);

    const GroupSpec& group() const { return spec_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const GSubset& operator[](std::size_t i) const { return members_[i]; }
    std::vector<GSubset>::const_iterator begin() const { return members_.begin(); }
    std::vector<GSubset>::const_iterator end() const { return members_.end(); }

    // Binary search against the canonical order.
    bool contains(const GSubset& s) const;

    // Sum of member cardinalities.
    long long size_sum() const;

    bool operator==(const SetFamily& other) const;
    bool operator!=(const SetFamily& other) const { return !(*this == other); }

private:
    GroupSpec spec_;
    std::vector<GSubset> members_;
};

// Smallest union-closed family containing the generators, plus the empty
// set when include_empty is set. The generator collection must be nonempty
// and share one spec.
SetFamily union_closure(const std::vector<GSubset>& generators, bool include_empty);

// {A + R : A subset of G}: the closure of the distinct translates of R,
// with the empty set included (the A = empty case). R must be nonempty.
SetFamily translate_family(const GSubset& r);

// Direct transcription of {A + R : A subset of G} over all 2^|G| subsets.
// Slow on purpose; the fixpoint construction is checked against it.
SetFamily naive_translate_family(const GSubset& r);

bool is_union_closed(const SetFamily& f);

// The join-irreducible members: those not equal to the union of the
// strictly smaller members below them. For a union-closed family this is
// the minimal generator collection; closing it (with the empty set if the
// family had one) reproduces the family. The input must be union-closed.
std::vector<GSubset> minimal_generators(const SetFamily& f);

// Family file format: first line "# group: <spec>", then one set literal
// per line. Writers emit canonical order; readers accept any order and
// re-canonicalize, and skip later comment lines.
void write_family(std::ostream& out, const SetFamily& f);
std::string family_to_string(const SetFamily& f);
SetFamily read_family(std::istream& in);

}  // namespace ucc
