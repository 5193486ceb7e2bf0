#include "pcube/vertex_set.hpp"

#include <bit>
#include <stdexcept>

namespace pcube {

namespace {
std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }
} // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, const std::vector<Vertex>& members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    if (universe % 64 != 0 && !s.words_.empty()) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > 64) throw std::invalid_argument("VertexSet::from_mask: universe exceeds 64");
    VertexSet s(universe);
    if (universe == 0) return s;
    if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
    s.words_[0] = mask;
    return s;
}

std::size_t VertexSet::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool VertexSet::empty() const noexcept {
    for (auto w : words_)
        if (w != 0) return false;
    return true;
}

void VertexSet::insert(Vertex v) {
    if (v >= universe_) throw std::out_of_range("VertexSet::insert: vertex " + std::to_string(v) + " out of range");
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
    if (v >= universe_) return;
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

void VertexSet::require_same_universe(const VertexSet& other) const {
    if (universe_ != other.universe_)
        throw std::invalid_argument("VertexSet: universe mismatch (" + std::to_string(universe_) + " vs " +
                                    std::to_string(other.universe_) + ")");
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    require_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    require_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    require_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    require_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    require_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

std::strong_ordering VertexSet::operator<=>(const VertexSet& other) const {
    if (auto c = universe_ <=> other.universe_; c != 0) return c;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        const std::uint64_t diff = words_[i] ^ other.words_[i];
        if (diff == 0) continue;
        const std::uint64_t low = diff & (~diff + 1);
        return (words_[i] & low) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

Vertex VertexSet::first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return universe_;
}

std::size_t VertexSet::hash() const noexcept {
    std::size_t h = std::hash<std::size_t>{}(universe_);
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first_member = true;
    for_each([&](Vertex v) {
        if (!first_member) out += ',';
        out += std::to_string(v);
        first_member = false;
    });
    out += '}';
    return out;
}

} // namespace pcube
