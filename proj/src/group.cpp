#include "ucc/group.hpp"

#include <cctype>
#include <cstdlib>
#include <utility>

#include "ucc/errors.hpp"

namespace ucc {

namespace {

constexpr int kDefaultMaxOrder = 4096;
// Anything above this makes bit-vector universes absurd even as an override.
constexpr long kAbsoluteMaxOrder = 1L << 26;

}  // namespace

int max_group_order() {
    const char* env = std::getenv("UCC_MAX_ORDER");
    if (env == nullptr || *env == '\0') return kDefaultMaxOrder;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > kAbsoluteMaxOrder) {
        throw UsageError("UCC_MAX_ORDER must be an integer in [1, " +
                         std::to_string(kAbsoluteMaxOrder) + "], got \"" +
                         std::string(env) + "\"");
    }
    return static_cast<int>(v);
}

GroupSpec::GroupSpec(std::vector<int> moduli) {
    if (moduli.empty()) throw UsageError("group needs at least one cyclic factor");
    const long ceiling = max_group_order();
    long order = 1;
    for (int n : moduli) {
        if (n < 1) throw UsageError("cyclic factor order must be >= 1, got " + std::to_string(n));
        order *= n;
        if (order > ceiling) {
            throw LimitError("group order exceeds the ceiling of " + std::to_string(ceiling) +
                             " (override with UCC_MAX_ORDER)");
        }
    }

    auto data = std::make_shared<Data>();
    data->moduli = std::move(moduli);
    data->order = static_cast<int>(order);
    data->strides.assign(data->moduli.size(), 1);
    for (std::size_t i = data->moduli.size() - 1; i-- > 0;) {
        data->strides[i] = data->strides[i + 1] * data->moduli[i + 1];
    }
    for (std::size_t i = 0; i < data->moduli.size(); ++i) {
        if (i > 0) data->name += 'x';
        data->name += 'Z';
        data->name += std::to_string(data->moduli[i]);
    }
    data_ = std::move(data);
}

GroupSpec GroupSpec::parse(std::string_view text) {
    if (text.empty()) throw UsageError("empty group spec string");
    std::vector<int> moduli;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != 'Z' && text[pos] != 'z') {
            throw UsageError("group spec \"" + std::string(text) +
                             "\": expected 'Z' at position " + std::to_string(pos));
        }
        ++pos;
        std::size_t digits = 0;
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > kAbsoluteMaxOrder) {
                throw LimitError("group spec \"" + std::string(text) + "\": factor too large");
            }
            ++pos;
            ++digits;
        }
        if (digits == 0) {
            throw UsageError("group spec \"" + std::string(text) +
                             "\": 'Z' must be followed by a decimal integer");
        }
        moduli.push_back(static_cast<int>(value));
        if (pos < text.size()) {
            if (text[pos] != 'x' && text[pos] != 'X') {
                throw UsageError("group spec \"" + std::string(text) +
                                 "\": expected factor separator 'x' at position " +
                                 std::to_string(pos));
            }
            ++pos;
            if (pos == text.size()) {
                throw UsageError("group spec \"" + std::string(text) +
                                 "\": trailing factor separator");
            }
        }
    }
    return GroupSpec(std::move(moduli));
}

void GroupSpec::check_element(int index) const {
    if (index < 0 || index >= order()) {
        throw UsageError("element index " + std::to_string(index) + " out of range for " +
                         name() + " (order " + std::to_string(order()) + ")");
    }
}

int GroupSpec::add(int a, int b) const {
    check_element(a);
    check_element(b);
    int out = 0;
    for (std::size_t i = 0; i < factor_count(); ++i) {
        const int n = data_->moduli[i];
        const int s = data_->strides[i];
        const int ca = (a / s) % n;
        const int cb = (b / s) % n;
        out += ((ca + cb) % n) * s;
    }
    return out;
}

int GroupSpec::neg(int a) const {
    check_element(a);
    int out = 0;
    for (std::size_t i = 0; i < factor_count(); ++i) {
        const int n = data_->moduli[i];
        const int s = data_->strides[i];
        const int ca = (a / s) % n;
        out += ((n - ca) % n) * s;
    }
    return out;
}

std::vector<int> GroupSpec::decode(int index) const {
    check_element(index);
    std::vector<int> coords(factor_count());
    for (std::size_t i = 0; i < factor_count(); ++i) {
        coords[i] = (index / data_->strides[i]) % data_->moduli[i];
    }
    return coords;
}

int GroupSpec::encode(const std::vector<int>& coords) const {
    if (coords.size() != factor_count()) {
        throw UsageError("coordinate tuple has " + std::to_string(coords.size()) +
                         " entries, expected " + std::to_string(factor_count()));
    }
    int index = 0;
    for (std::size_t i = 0; i < factor_count(); ++i) {
        if (coords[i] < 0 || coords[i] >= data_->moduli[i]) {
            throw UsageError("coordinate " + std::to_string(coords[i]) +
                             " out of range for factor Z" + std::to_string(data_->moduli[i]));
        }
        index += coords[i] * data_->strides[i];
    }
    return index;
}

std::vector<int> GroupSpec::elements() const {
    std::vector<int> out(order());
    for (int i = 0; i < order(); ++i) out[i] = i;
    return out;
}

}  // namespace ucc
