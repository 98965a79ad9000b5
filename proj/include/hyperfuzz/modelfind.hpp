#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "hyperfuzz/ifs.hpp"
#include "hyperfuzz/structures.hpp"

namespace hyperfuzz {

// Deterministic RNG: the engine is fully specified by the standard and the
// draw uses explicit rejection, so streams are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform value in [0, k), unbiased.
    std::uint64_t below(std::uint64_t k) {
        if (k == 0) throw std::invalid_argument("rng: empty range");
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % k);
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % k;
    }

private:
    std::mt19937_64 eng_;
};

struct SearchSpec {
    enum class Kind { Hypergroup, Hyperfield, HypervectorSpace };
    Kind kind = Kind::Hypergroup;
    int size = 2;
    // Restrict the hyperaddition to commutative tables.  Implied for
    // hyperfields and hypervector spaces.
    bool commutative = false;
    // Scalar field, required for the hypervector space kind.
    std::optional<Hyperfield> field;
    // Node budget; when workers > 1 it is split evenly.  Exhaustion sets
    // complete=false on the result.
    std::uint64_t budget = 1000000;
    int workers = 1;
};

struct FoundStructure {
    std::variant<Hypergroup, Hyperfield, HypervectorSpace> value;
    std::string canonical;
};

struct SearchResult {
    std::vector<FoundStructure> structures;  // canonical representatives, canonical order
    bool complete = true;
    std::uint64_t nodes = 0;
};

// Exhaustive backtracking enumeration with the distinguished elements pinned
// (zero at index 0; one at index 1 for hyperfields of size >= 2; theta at
// index 0).  Every emitted structure passes its hypercore checker.
SearchResult enumerate_structures(const SearchSpec& spec);

// Lexicographically minimal serialized table over carrier permutations
// fixing the distinguished elements.  Equal strings iff the structures are
// relabelings of each other (with distinguished elements held fixed).
std::string canonical_form(const Hypergroup& g);
std::string canonical_form(const Hyperfield& f);
std::string canonical_form(const HypervectorSpace& v);

// Random valid overlay: mu drawn from the grid {0, 1/g, ..., 1}, nu from the
// grid points of {0, ..., 1-mu}, resampled until the relevant predicate
// passes.  Deterministic in (seed, grid).  Throws std::runtime_error when the
// retry cap is exhausted.
Ifs random_overlay(const Hyperfield& f, int grid, std::uint64_t seed, int retry_cap = 10000);
Ifs random_overlay(const HypervectorSpace& v, const Ifs& field_overlay, int grid,
                   std::uint64_t seed, int retry_cap = 10000);

}  // namespace hyperfuzz
