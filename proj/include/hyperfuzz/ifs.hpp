#pragma once

#include <stdexcept>
#include <vector>

#include "hyperfuzz/carrier.hpp"
#include "hyperfuzz/rational.hpp"

namespace hyperfuzz {

// Raw membership/non-membership value table, no constraint enforced.  Used
// for counterexample payloads that may violate the mu+nu bound.
struct OverlayValues {
    std::vector<Degree> mu;
    std::vector<Degree> nu;

    int size() const { return static_cast<int>(mu.size()); }
};

// Intuitionistic fuzzy set over a carrier of the given size: exact degrees
// with mu(x) + nu(x) <= 1 everywhere.
class Ifs {
public:
    Ifs() = default;

    Ifs(std::vector<Degree> mu, std::vector<Degree> nu) : mu_(std::move(mu)), nu_(std::move(nu)) {
        if (mu_.empty() || mu_.size() != nu_.size())
            throw std::invalid_argument("ifs: mu/nu size mismatch");
        for (std::size_t i = 0; i < mu_.size(); ++i) {
            if (!in_unit_interval(mu_[i]) || !in_unit_interval(nu_[i]))
                throw std::invalid_argument("ifs: degree outside [0,1]");
            if (mu_[i] + nu_[i] > Degree::one())
                throw std::invalid_argument("ifs: mu + nu exceeds 1 at index " + std::to_string(i));
        }
    }

    static Ifs constant(int n, Degree mu, Degree nu) {
        return Ifs(std::vector<Degree>(static_cast<std::size_t>(n), mu),
                   std::vector<Degree>(static_cast<std::size_t>(n), nu));
    }

    int size() const { return static_cast<int>(mu_.size()); }
    const Degree& mu(int x) const { return mu_.at(static_cast<std::size_t>(x)); }
    const Degree& nu(int x) const { return nu_.at(static_cast<std::size_t>(x)); }
    const std::vector<Degree>& mu() const { return mu_; }
    const std::vector<Degree>& nu() const { return nu_; }

    OverlayValues values() const { return OverlayValues{mu_, nu_}; }

    friend bool operator==(const Ifs& a, const Ifs& b) { return a.mu_ == b.mu_ && a.nu_ == b.nu_; }
    friend bool operator!=(const Ifs& a, const Ifs& b) { return !(a == b); }

private:
    std::vector<Degree> mu_;
    std::vector<Degree> nu_;
};

// Minimum of a degree map over a nonempty element set.
inline Degree aggregate_min(const std::vector<Degree>& f, const ElemSet& s) {
    if (s.empty()) throw std::invalid_argument("aggregate_min: empty set");
    bool first = true;
    Degree out;
    for (int e : s) {
        const Degree& v = f.at(static_cast<std::size_t>(e));
        out = first ? v : min(out, v);
        first = false;
    }
    return out;
}

// Maximum of a degree map over a nonempty element set.
inline Degree aggregate_max(const std::vector<Degree>& f, const ElemSet& s) {
    if (s.empty()) throw std::invalid_argument("aggregate_max: empty set");
    bool first = true;
    Degree out;
    for (int e : s) {
        const Degree& v = f.at(static_cast<std::size_t>(e));
        out = first ? v : max(out, v);
        first = false;
    }
    return out;
}

}  // namespace hyperfuzz
