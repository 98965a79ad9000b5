#pragma once

#include <stdexcept>
#include <vector>

#include "hyperfuzz/carrier.hpp"

namespace hyperfuzz {

// Multivalued binary operation on one carrier: every cell a nonempty subset.
class HyperOp {
public:
    HyperOp() = default;

    HyperOp(int carrier_size, std::vector<ElemSet> cells)
        : n_(carrier_size), cells_(std::move(cells)) {
        if (static_cast<int>(cells_.size()) != n_ * n_)
            throw std::invalid_argument("hyperop: table not total");
        for (const ElemSet& s : cells_) {
            if (s.carrier_size() != n_) throw std::invalid_argument("hyperop: cell carrier mismatch");
            if (s.empty()) throw std::invalid_argument("hyperop: empty cell");
        }
    }

    int size() const { return n_; }
    const ElemSet& at(int a, int b) const { return cells_.at(index(a, b)); }
    const std::vector<ElemSet>& cells() const { return cells_; }

private:
    std::size_t index(int a, int b) const {
        if (a < 0 || a >= n_ || b < 0 || b >= n_)
            throw std::invalid_argument("hyperop: index out of range");
        return static_cast<std::size_t>(a) * n_ + b;
    }

    int n_ = 0;
    std::vector<ElemSet> cells_;
};

// Single-valued binary operation (multiplication tables).
class BinOp {
public:
    BinOp() = default;

    BinOp(int carrier_size, std::vector<int> cells) : n_(carrier_size), cells_(std::move(cells)) {
        if (static_cast<int>(cells_.size()) != n_ * n_)
            throw std::invalid_argument("binop: table not total");
        for (int v : cells_)
            if (v < 0 || v >= n_) throw std::invalid_argument("binop: value out of range");
    }

    int size() const { return n_; }
    int at(int a, int b) const { return cells_.at(index(a, b)); }
    const std::vector<int>& cells() const { return cells_; }

private:
    std::size_t index(int a, int b) const {
        if (a < 0 || a >= n_ || b < 0 || b >= n_)
            throw std::invalid_argument("binop: index out of range");
        return static_cast<std::size_t>(a) * n_ + b;
    }

    int n_ = 0;
    std::vector<int> cells_;
};

// Scalar action table: rows indexed by the scalar carrier, columns by the
// vector carrier, cells nonempty subsets of the vector carrier.
class ScalarAction {
public:
    ScalarAction() = default;

    ScalarAction(int scalars, int vectors, std::vector<ElemSet> cells)
        : nf_(scalars), nv_(vectors), cells_(std::move(cells)) {
        if (static_cast<int>(cells_.size()) != nf_ * nv_)
            throw std::invalid_argument("action: table not total");
        for (const ElemSet& s : cells_) {
            if (s.carrier_size() != nv_) throw std::invalid_argument("action: cell carrier mismatch");
            if (s.empty()) throw std::invalid_argument("action: empty cell");
        }
    }

    int scalars() const { return nf_; }
    int vectors() const { return nv_; }
    const ElemSet& at(int a, int x) const { return cells_.at(index(a, x)); }
    const std::vector<ElemSet>& cells() const { return cells_; }

private:
    std::size_t index(int a, int x) const {
        if (a < 0 || a >= nf_ || x < 0 || x >= nv_)
            throw std::invalid_argument("action: index out of range");
        return static_cast<std::size_t>(a) * nv_ + x;
    }

    int nf_ = 0;
    int nv_ = 0;
    std::vector<ElemSet> cells_;
};

// x # A, the union of x # a over a in A.  A must be nonempty.
inline ElemSet extend_elem_set(const HyperOp& op, int x, const ElemSet& a) {
    if (a.empty()) throw std::invalid_argument("extend_elem_set: empty set");
    ElemSet out(op.size());
    for (int e : a) out = out.united(op.at(x, e));
    return out;
}

// A # x.
inline ElemSet extend_set_elem(const HyperOp& op, const ElemSet& a, int x) {
    if (a.empty()) throw std::invalid_argument("extend_set_elem: empty set");
    ElemSet out(op.size());
    for (int e : a) out = out.united(op.at(e, x));
    return out;
}

// A # B, the union over all pairs.
inline ElemSet extend_set_set(const HyperOp& op, const ElemSet& a, const ElemSet& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("extend_set_set: empty set");
    ElemSet out(op.size());
    for (int x : a)
        for (int y : b) out = out.united(op.at(x, y));
    return out;
}

// a * X for the scalar action, union over x in X of a * x.
inline ElemSet act_elem_set(const ScalarAction& act, int a, const ElemSet& x) {
    if (x.empty()) throw std::invalid_argument("act_elem_set: empty set");
    ElemSet out(act.vectors());
    for (int e : x) out = out.united(act.at(a, e));
    return out;
}

// S * x for a set of scalars.
inline ElemSet act_set_elem(const ScalarAction& act, const ElemSet& s, int x) {
    if (s.empty()) throw std::invalid_argument("act_set_elem: empty set");
    ElemSet out(act.vectors());
    for (int a : s) out = out.united(act.at(a, x));
    return out;
}

}  // namespace hyperfuzz
