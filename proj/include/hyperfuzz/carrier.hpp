#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperfuzz {

// Finite carrier of named elements.  Element identity is the index; names are
// for parsing and rendering only.
class Carrier {
public:
    Carrier() = default;

    explicit Carrier(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) throw std::invalid_argument("carrier: empty");
        if (names_.size() > 64) throw std::invalid_argument("carrier: more than 64 elements");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) throw std::invalid_argument("carrier: empty element name");
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw std::invalid_argument("carrier: duplicate element name " + names_[i]);
        }
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<int> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<int>(i);
        return std::nullopt;
    }

private:
    std::vector<std::string> names_;
};

// Subset of a carrier, bitmask representation.  Carrier size is capped at 64.
class ElemSet {
public:
    ElemSet() = default;
    explicit ElemSet(int carrier_size) : n_(check_size(carrier_size)) {}

    static ElemSet single(int carrier_size, int e) {
        ElemSet s(carrier_size);
        s.insert(e);
        return s;
    }

    static ElemSet full(int carrier_size) {
        ElemSet s(carrier_size);
        s.bits_ = carrier_size == 64 ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << carrier_size) - 1;
        return s;
    }

    int carrier_size() const { return n_; }
    bool empty() const { return bits_ == 0; }
    int size() const { return __builtin_popcountll(bits_); }

    bool contains(int e) const {
        check_elem(e);
        return (bits_ >> e) & 1;
    }

    void insert(int e) {
        check_elem(e);
        bits_ |= std::uint64_t{1} << e;
    }

    void erase(int e) {
        check_elem(e);
        bits_ &= ~(std::uint64_t{1} << e);
    }

    ElemSet united(const ElemSet& o) const {
        ElemSet s(*this);
        s.bits_ |= o.bits_;
        return s;
    }

    bool subset_of(const ElemSet& o) const { return (bits_ & ~o.bits_) == 0; }

    friend bool operator==(const ElemSet& a, const ElemSet& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const ElemSet& a, const ElemSet& b) { return !(a == b); }

    std::uint64_t bits() const { return bits_; }

    // Iteration over member indices in increasing order.
    class iterator {
    public:
        iterator(std::uint64_t bits) : bits_(bits) {}
        int operator*() const { return __builtin_ctzll(bits_); }
        iterator& operator++() {
            bits_ &= bits_ - 1;
            return *this;
        }
        bool operator!=(const iterator& o) const { return bits_ != o.bits_; }

    private:
        std::uint64_t bits_;
    };
    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::string str(const Carrier& c) const {
        std::string out = "{";
        bool first = true;
        for (int e : *this) {
            if (!first) out += ", ";
            out += c.name(e);
            first = false;
        }
        return out + "}";
    }

private:
    static int check_size(int n) {
        if (n < 1 || n > 64) throw std::invalid_argument("elemset: carrier size out of range");
        return n;
    }
    void check_elem(int e) const {
        if (e < 0 || e >= n_) throw std::invalid_argument("elemset: element out of range");
    }

    std::uint64_t bits_ = 0;
    int n_ = 0;
};

}  // namespace hyperfuzz
