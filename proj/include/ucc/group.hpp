#pragma once

// Finite Abelian groups given as an ordered product of cyclic factors.
// Elements are flat indices in [0, order) under a mixed-radix encoding with
// the last factor varying fastest; the flat index doubles as the bit
// position in GSubset, so all set algebra stays allocation-free per element.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ucc {

// Order ceiling for newly constructed groups. Defaults to 4096; the
// environment variable UCC_MAX_ORDER overrides it.
int max_group_order();

class GroupSpec {
public:
    // Moduli must be >= 1 and the product must stay within the ceiling.
    explicit GroupSpec(std::vector<int> moduli);

    // Spec string grammar: "Z12" or "Z2xZ4". Z is case-insensitive,
    // integers are decimal, no whitespace anywhere.
    static GroupSpec parse(std::string_view text);

    int order() const { return data_->order; }
    const std::vector<int>& moduli() const { return data_->moduli; }

    // Canonical rendering, e.g. "Z2xZ4".
    const std::string& name() const { return data_->name; }

    int add(int a, int b) const;
    int neg(int a) const;

    // decode/encode are mutually inverse bijections between [0, order) and
    // the coordinate boxes [0, n_i).
    std::vector<int> decode(int index) const;
    int encode(const std::vector<int>& coords) const;

    // All element indices, in order: 0, 1, ..., order-1.
    std::vector<int> elements() const;

    std::size_t factor_count() const { return data_->moduli.size(); }
    int modulus(std::size_t i) const { return data_->moduli[i]; }

    // Mixed-radix stride of factor i (product of the moduli after it).
    int stride(std::size_t i) const { return data_->strides[i]; }

    // Throws UsageError unless 0 <= index < order.
    void check_element(int index) const;

    // Value equality: same factor list. Z4 and Z2xZ2 are distinct specs.
    bool operator==(const GroupSpec& other) const {
        return data_ == other.data_ || data_->moduli == other.data_->moduli;
    }
    bool operator!=(const GroupSpec& other) const { return !(*this == other); }

private:
    struct Data {
        std::vector<int> moduli;
        std::vector<int> strides;
        int order = 1;
        std::string name;
    };
    std::shared_ptr<const Data> data_;
};

}  // namespace ucc
