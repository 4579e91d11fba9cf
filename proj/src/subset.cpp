#include "ucc/subset.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <utility>

#include "ucc/errors.hpp"

namespace ucc {

namespace {

constexpr std::uint64_t kAllOnes = ~std::uint64_t{0};

std::size_t words_for(int order) {
    return (static_cast<std::size_t>(order) + 63) / 64;
}

std::uint64_t low_bits(int k) {
    return k >= 64 ? kAllOnes : ((std::uint64_t{1} << k) - 1);
}

// Sets bits [from, from + len) in w.
void fill_range(std::vector<std::uint64_t>& w, int from, int len) {
    if (len <= 0) return;
    const int to = from + len;  // exclusive
    const std::size_t wf = static_cast<std::size_t>(from) / 64;
    const std::size_t wt = static_cast<std::size_t>(to - 1) / 64;
    const std::uint64_t first = kAllOnes << (from % 64);
    const std::uint64_t last = (to % 64) ? low_bits(to % 64) : kAllOnes;
    if (wf == wt) {
        w[wf] |= first & last;
        return;
    }
    w[wf] |= first;
    for (std::size_t i = wf + 1; i < wt; ++i) w[i] = kAllOnes;
    w[wt] |= last;
}

std::vector<std::uint64_t> shift_left(const std::vector<std::uint64_t>& w, int s) {
    const std::size_t n = w.size();
    std::vector<std::uint64_t> out(n, 0);
    const std::size_t ws = static_cast<std::size_t>(s) / 64;
    const int bs = s % 64;
    for (std::size_t i = n; i-- > ws;) {
        std::uint64_t v = w[i - ws] << bs;
        if (bs != 0 && i - ws >= 1) v |= w[i - ws - 1] >> (64 - bs);
        out[i] = v;
    }
    return out;
}

std::vector<std::uint64_t> shift_right(const std::vector<std::uint64_t>& w, int s) {
    const std::size_t n = w.size();
    std::vector<std::uint64_t> out(n, 0);
    const std::size_t ws = static_cast<std::size_t>(s) / 64;
    const int bs = s % 64;
    for (std::size_t i = 0; i + ws < n; ++i) {
        std::uint64_t v = w[i + ws] >> bs;
        if (bs != 0 && i + ws + 1 < n) v |= w[i + ws + 1] << (64 - bs);
        out[i] = v;
    }
    return out;
}

// Rotates the n blocks of b bits inside every period of n*b bits upward by
// t blocks. This is exactly what adding t to one mixed-radix coordinate
// does to the flat bit-vector.
void rotate_factor(std::vector<std::uint64_t>& w, int order, int n, int b, int t) {
    const int period = n * b;
    const int keep = (n - t) * b;  // bits per period that move up by t*b
    std::vector<std::uint64_t> keep_mask(w.size(), 0);
    for (int s = 0; s < order; s += period) fill_range(keep_mask, s, keep);
    std::vector<std::uint64_t> lo(w.size()), hi(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        lo[i] = w[i] & keep_mask[i];
        hi[i] = w[i] & ~keep_mask[i];
    }
    const auto up = shift_left(lo, t * b);
    const auto down = shift_right(hi, keep);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = up[i] | down[i];
}

// Single-word variant of translate; order must be <= 64.
std::uint64_t translate_word(const GroupSpec& spec, std::uint64_t bits, int g) {
    for (std::size_t i = 0; i < spec.factor_count(); ++i) {
        const int n = spec.modulus(i);
        if (n == 1) continue;
        const int b = spec.stride(i);
        const int t = (g / b) % n;
        if (t == 0) continue;
        const int period = n * b;
        const int keep = (n - t) * b;
        std::uint64_t keep_mask = 0;
        const std::uint64_t chunk = low_bits(keep);
        for (int s = 0; s < spec.order(); s += period) keep_mask |= chunk << s;
        bits = ((bits & keep_mask) << (t * b)) | ((bits & ~keep_mask) >> keep);
    }
    return bits;
}

void require_same_universe(const GSubset& a, const GSubset& b) {
    if (a.group() != b.group()) {
        throw UsageError("operands use different group universes: " + a.group().name() +
                         " vs " + b.group().name());
    }
}

}  // namespace

GSubset::GSubset(GroupSpec spec)
    : spec_(std::move(spec)), words_(words_for(spec_.order()), 0) {}

GSubset::GSubset(GroupSpec spec, std::vector<std::uint64_t> words)
    : spec_(std::move(spec)), words_(std::move(words)) {
    if (words_.size() != words_for(spec_.order())) {
        throw UsageError("raw word vector has wrong length for group " + spec_.name());
    }
    const int tail = spec_.order() % 64;
    if (tail != 0 && (words_.back() & ~low_bits(tail)) != 0) {
        throw UsageError("raw word vector has nonzero padding bits");
    }
}

GSubset GSubset::empty_set(GroupSpec spec) { return GSubset(std::move(spec)); }

GSubset GSubset::full_set(GroupSpec spec) {
    GSubset out(std::move(spec));
    for (auto& w : out.words_) w = kAllOnes;
    out.clear_padding();
    return out;
}

GSubset GSubset::of(GroupSpec spec, std::initializer_list<int> elems) {
    GSubset out(std::move(spec));
    for (int e : elems) out.set(e);
    return out;
}

GSubset GSubset::from_elements(GroupSpec spec, const std::vector<int>& elems) {
    GSubset out(std::move(spec));
    for (int e : elems) out.set(e);
    return out;
}

GSubset GSubset::parse(GroupSpec spec, std::string_view literal) {
    GSubset out(std::move(spec));
    if (literal == "-") return out;
    if (literal.empty()) {
        throw UsageError("empty set literal (the empty set is spelled \"-\")");
    }
    std::size_t pos = 0;
    while (pos <= literal.size()) {
        const std::size_t comma = literal.find(',', pos);
        const std::string_view tok = comma == std::string_view::npos
                                         ? literal.substr(pos)
                                         : literal.substr(pos, comma - pos);
        if (tok.empty()) {
            throw UsageError("set literal \"" + std::string(literal) + "\": empty entry");
        }
        long value = 0;
        for (char c : tok) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw UsageError("set literal \"" + std::string(literal) +
                                 "\": entry \"" + std::string(tok) +
                                 "\" is not a decimal element index");
            }
            value = value * 10 + (c - '0');
            if (value > out.universe()) break;  // avoid overflow on absurd input
        }
        if (value >= out.universe()) {
            throw UsageError("set literal \"" + std::string(literal) + "\": element " +
                             std::string(tok) + " out of range for " + out.group().name());
        }
        out.set(static_cast<int>(value));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == literal.size()) {
            throw UsageError("set literal \"" + std::string(literal) + "\": trailing comma");
        }
    }
    return out;
}

std::string GSubset::to_literal() const {
    if (none()) return "-";
    std::string out;
    bool first = true;
    for (int e : elements()) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
    }
    return out;
}

bool GSubset::test(int element) const {
    spec_.check_element(element);
    return (words_[element / 64] >> (element % 64)) & 1;
}

GSubset& GSubset::set(int element) {
    spec_.check_element(element);
    words_[element / 64] |= std::uint64_t{1} << (element % 64);
    return *this;
}

GSubset& GSubset::reset(int element) {
    spec_.check_element(element);
    words_[element / 64] &= ~(std::uint64_t{1} << (element % 64));
    return *this;
}

int GSubset::count() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
}

std::vector<int> GSubset::elements() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w != 0) {
            out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

GSubset GSubset::complement() const {
    GSubset out(spec_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    out.clear_padding();
    return out;
}

GSubset GSubset::negate() const {
    GSubset out(spec_);
    for (int e : elements()) out.set(spec_.neg(e));
    return out;
}

bool GSubset::is_symmetric() const { return *this == negate(); }

GSubset GSubset::translate(int g) const {
    spec_.check_element(g);
    if (words_.size() == 1) {
        return GSubset(spec_, {translate_word(spec_, words_[0], g)});
    }
    std::vector<std::uint64_t> w = words_;
    for (std::size_t i = 0; i < spec_.factor_count(); ++i) {
        const int n = spec_.modulus(i);
        if (n == 1) continue;
        const int t = (g / spec_.stride(i)) % n;
        if (t == 0) continue;
        rotate_factor(w, universe(), n, spec_.stride(i), t);
    }
    return GSubset(spec_, std::move(w));
}

GSubset GSubset::sumset(const GSubset& other) const {
    check_same_universe(other);
    const GSubset& small = count() <= other.count() ? *this : other;
    const GSubset& large = count() <= other.count() ? other : *this;
    if (small.none()) return empty_set(spec_);
    if (words_.size() == 1) {
        std::uint64_t acc = 0;
        std::uint64_t bits = small.words_[0];
        while (bits != 0) {
            const int e = std::countr_zero(bits);
            bits &= bits - 1;
            acc |= translate_word(spec_, large.words_[0], e);
        }
        return GSubset(spec_, {acc});
    }
    GSubset acc = empty_set(spec_);
    for (int e : small.elements()) acc |= large.translate(e);
    return acc;
}

bool GSubset::includes(const GSubset& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((other.words_[i] & ~words_[i]) != 0) return false;
    }
    return true;
}

GSubset GSubset::operator|(const GSubset& other) const {
    GSubset out = *this;
    out |= other;
    return out;
}

GSubset GSubset::operator&(const GSubset& other) const {
    GSubset out = *this;
    out &= other;
    return out;
}

GSubset& GSubset::operator|=(const GSubset& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

GSubset& GSubset::operator&=(const GSubset& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

bool GSubset::operator==(const GSubset& other) const {
    return spec_ == other.spec_ && words_ == other.words_;
}

int GSubset::compare(const GSubset& a, const GSubset& b) {
    require_same_universe(a, b);
    for (std::size_t i = a.words_.size(); i-- > 0;) {
        if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i] ? -1 : 1;
    }
    return 0;
}

std::size_t GSubset::hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : words_) {
        std::uint64_t x = w + h;
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ull;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebull;
        x ^= x >> 31;
        h = x;
    }
    return static_cast<std::size_t>(h);
}

void GSubset::check_same_universe(const GSubset& other) const {
    require_same_universe(*this, other);
}

void GSubset::clear_padding() {
    const int tail = spec_.order() % 64;
    if (tail != 0) words_.back() &= low_bits(tail);
}

GSubset neighbourhood(const GSubset& a, const GSubset& r) {
    require_same_universe(a, r);
    return a.sumset(r);
}

GSubset interior(const GSubset& a, const GSubset& r) {
    require_same_universe(a, r);
    const GroupSpec& spec = a.group();
    if (a.words().size() == 1) {
        std::uint64_t acc = low_bits(spec.order());
        std::uint64_t bits = r.words()[0];
        while (bits != 0) {
            const int e = std::countr_zero(bits);
            bits &= bits - 1;
            acc &= translate_word(spec, a.words()[0], spec.neg(e));
        }
        return GSubset(spec, {acc});
    }
    GSubset acc = GSubset::full_set(spec);
    for (int e : r.elements()) acc &= a.translate(spec.neg(e));
    return acc;
}

GSubset pairing_map(const GSubset& s, const GSubset& r) {
    require_same_universe(s, r);
    if (r.none()) throw UsageError("pairing map requires a nonempty R");
    return interior(s, r).complement().negate();
}

GSubset pairing_map_by_sumset(const GSubset& s, const GSubset& r) {
    require_same_universe(s, r);
    if (r.none()) throw UsageError("pairing map requires a nonempty R");
    return s.complement().negate().sumset(r);
}

}  // namespace ucc
