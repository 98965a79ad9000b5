#include "hyperfuzz/modelfind.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>
#include <utility>

#include "hyperfuzz/ifcheck.hpp"

namespace hyperfuzz {
namespace {

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

ElemSet mask_to_set(int n, std::uint64_t mask) {
    ElemSet s(n);
    for (int i = 0; i < n; ++i)
        if (mask & bit(i)) s.insert(i);
    return s;
}

std::uint64_t permute_mask(std::uint64_t mask, const std::vector<int>& p) {
    std::uint64_t out = 0;
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        if (mask & bit(i)) out |= bit(p[i]);
    return out;
}

// All permutations p of 0..n-1 with p[fixed[k]] == k; the remaining indices
// are mapped onto the remaining positions in every possible way.
std::vector<std::vector<int>> perms_with_fixed(int n, std::vector<int> fixed) {
    fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
        if (std::find(fixed.begin(), fixed.end(), i) == fixed.end()) rest.push_back(i);
    const int prefix = n - static_cast<int>(rest.size());
    std::vector<std::vector<int>> out;
    std::sort(rest.begin(), rest.end());
    do {
        std::vector<int> p(static_cast<std::size_t>(n), -1);
        for (int k = 0; k < static_cast<int>(fixed.size()); ++k) p[fixed[k]] = k;
        for (int i = 0; i < static_cast<int>(rest.size()); ++i) p[rest[i]] = prefix + i;
        out.push_back(std::move(p));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

std::vector<int> invert(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (int i = 0; i < static_cast<int>(p.size()); ++i) inv[p[i]] = i;
    return inv;
}

std::vector<std::uint64_t> encode_add(const HyperOp& add, const std::vector<int>& p) {
    const int n = add.size();
    const std::vector<int> q = invert(p);
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out.push_back(permute_mask(add.at(q[a], q[b]).bits(), p));
    return out;
}

std::vector<std::uint64_t> encode_mul(const BinOp& mul, const std::vector<int>& p) {
    const int n = mul.size();
    const std::vector<int> q = invert(p);
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out.push_back(static_cast<std::uint64_t>(p[mul.at(q[a], q[b])]));
    return out;
}

// Scalars keep their labels; only the vector carrier is permuted.
std::vector<std::uint64_t> encode_action(const ScalarAction& act, const std::vector<int>& p) {
    const std::vector<int> q = invert(p);
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(act.scalars()) * act.vectors());
    for (int a = 0; a < act.scalars(); ++a)
        for (int x = 0; x < act.vectors(); ++x)
            out.push_back(permute_mask(act.at(a, q[x]).bits(), p));
    return out;
}

std::string join_key(const std::vector<std::uint64_t>& key) {
    std::string out;
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(key[i]);
    }
    return out;
}

struct CanonHg {
    std::vector<std::uint64_t> key;  // n*n add masks
    std::string form;
};

CanonHg canonical_hg_key(const HyperOp& add, int zero) {
    CanonHg best;
    for (const auto& p : perms_with_fixed(add.size(), {zero})) {
        auto key = encode_add(add, p);
        if (best.key.empty() || key < best.key) best.key = std::move(key);
    }
    best.form = "hg/" + std::to_string(add.size()) + "/" + join_key(best.key);
    return best;
}

struct CanonHf {
    std::vector<std::uint64_t> add_key;
    std::vector<std::uint64_t> mul_key;
    std::string form;
};

CanonHf canonical_hf_key(const HyperOp& add, const BinOp& mul, int zero, int one) {
    CanonHf best;
    for (const auto& p : perms_with_fixed(add.size(), {zero, one})) {
        auto akey = encode_add(add, p);
        auto mkey = encode_mul(mul, p);
        if (best.add_key.empty() || std::tie(akey, mkey) < std::tie(best.add_key, best.mul_key)) {
            best.add_key = std::move(akey);
            best.mul_key = std::move(mkey);
        }
    }
    best.form = "hf/" + std::to_string(add.size()) + "/" + join_key(best.add_key) + "/" +
                join_key(best.mul_key);
    return best;
}

struct CanonHvs {
    std::vector<std::uint64_t> vadd_key;
    std::vector<std::uint64_t> act_key;
    std::string form;
};

CanonHvs canonical_hvs_key(const Hyperfield& f, const HyperOp& vadd, const ScalarAction& act,
                           int theta) {
    CanonHvs best;
    for (const auto& p : perms_with_fixed(vadd.size(), {theta})) {
        auto vkey = encode_add(vadd, p);
        auto akey = encode_action(act, p);
        if (best.vadd_key.empty() ||
            std::tie(vkey, akey) < std::tie(best.vadd_key, best.act_key)) {
            best.vadd_key = std::move(vkey);
            best.act_key = std::move(akey);
        }
    }
    // The scalar field is part of the identity of the space, serialized as-is.
    std::vector<int> ident(static_cast<std::size_t>(f.carrier.size()));
    for (int i = 0; i < f.carrier.size(); ++i) ident[static_cast<std::size_t>(i)] = i;
    best.form = "hvs/" + std::to_string(f.carrier.size()) + "x" + std::to_string(vadd.size()) +
                "/" + join_key(encode_add(f.add, ident)) + "|" + join_key(encode_mul(f.mul, ident)) +
                "/" + join_key(best.vadd_key) + "/" + join_key(best.act_key);
    return best;
}

Carrier numbered_carrier(int n, const std::string& prefix) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return Carrier(names);
}

HyperOp op_from_masks(int n, const std::vector<std::uint64_t>& masks) {
    std::vector<ElemSet> cells;
    cells.reserve(masks.size());
    for (std::uint64_t m : masks) cells.push_back(mask_to_set(n, m));
    return HyperOp(n, cells);
}

// Shared node budget for one worker; a node is one attempted cell value.
struct Budget {
    std::uint64_t limit = 0;
    std::uint64_t used = 0;
    bool exhausted = false;

    bool spend() {
        if (used >= limit) {
            exhausted = true;
            return false;
        }
        ++used;
        return true;
    }
};

// Backtracking fill of a hyperaddition table with the zero pinned at index 0.
// For commutative tables the zero row is forced to 0 # a = {a}, which every
// valid commutative table satisfies; non-commutative tables get no forcing.
class AddEnumerator {
public:
    AddEnumerator(int n, bool commutative, Budget& budget, int root_mod, int root_rem,
                  std::function<void(const HyperOp&)> emit)
        : n_(n),
          comm_(commutative),
          budget_(budget),
          root_mod_(root_mod),
          root_rem_(root_rem),
          emit_(std::move(emit)),
          cells_(static_cast<std::size_t>(n) * n, 0) {
        if (comm_) {
            for (int j = 0; j < n_; ++j) {
                cells_[static_cast<std::size_t>(j)] = bit(j);
                cells_[static_cast<std::size_t>(j) * n_] = bit(j);
            }
            for (int i = 1; i < n_; ++i)
                for (int j = i; j < n_; ++j) free_.push_back({i, j});
        } else {
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) free_.push_back({i, j});
        }
    }

    void run() {
        if (free_.empty()) {
            if (root_rem_ == 0) emit_(op_from_masks(n_, cells_));
            return;
        }
        fill(0);
    }

private:
    std::uint64_t cell(int i, int j) const { return cells_[static_cast<std::size_t>(i) * n_ + j]; }

    void set(int i, int j, std::uint64_t v) {
        cells_[static_cast<std::size_t>(i) * n_ + j] = v;
        if (comm_) cells_[static_cast<std::size_t>(j) * n_ + i] = v;
    }

    void fill(std::size_t d) {
        if (d == free_.size()) {
            emit_(op_from_masks(n_, cells_));
            return;
        }
        const auto [i, j] = free_[d];
        const std::uint64_t top = (n_ == 64) ? ~std::uint64_t{0} : (bit(n_) - 1);
        int ord = 0;
        for (std::uint64_t v = 1; v <= top && v != 0; ++v, ++ord) {
            if (d == 0 && root_mod_ > 1 && ord % root_mod_ != root_rem_) continue;
            if (!budget_.spend()) break;
            set(i, j, v);
            if (consistent(i, j)) fill(d + 1);
            if (budget_.exhausted) break;
        }
        set(i, j, 0);
    }

    // Union of x # w over assigned cells; false if any needed cell is open.
    bool image_known(int x, std::uint64_t ws, std::uint64_t* out) const {
        std::uint64_t acc = 0;
        for (int w = 0; w < n_; ++w) {
            if (!(ws & bit(w))) continue;
            const std::uint64_t c = cell(x, w);
            if (!c) return false;
            acc |= c;
        }
        *out = acc;
        return true;
    }

    bool consistent(int i, int j) const {
        // Associativity on every triple that the new cell can have completed.
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                for (int z = 0; z < n_; ++z) {
                    if (x != i && x != j && y != i && y != j && z != i && z != j) continue;
                    const std::uint64_t yz = cell(y, z);
                    const std::uint64_t xy = cell(x, y);
                    if (!yz || !xy) continue;
                    std::uint64_t lhs = 0, rhs = 0;
                    if (!image_known(x, yz, &lhs)) continue;
                    bool rhs_known = true;
                    for (int u = 0; u < n_; ++u) {
                        if (!(xy & bit(u))) continue;
                        const std::uint64_t c = cell(u, z);
                        if (!c) {
                            rhs_known = false;
                            break;
                        }
                        rhs |= c;
                    }
                    if (rhs_known && lhs != rhs) return false;
                }
        // Element 0 must end up with exactly one negative for every a.
        for (int a : {i, j}) {
            if (a == j && i == j) break;
            int confirmed = 0;
            bool all_known = true;
            for (int b = 0; b < n_; ++b) {
                const std::uint64_t ab = cell(a, b);
                const std::uint64_t ba = cell(b, a);
                if (!ab || !ba) {
                    all_known = false;
                    continue;
                }
                if ((ab & 1) && (ba & 1)) ++confirmed;
            }
            if (confirmed > 1) return false;
            if (all_known && confirmed != 1) return false;
        }
        return true;
    }

    int n_;
    bool comm_;
    Budget& budget_;
    int root_mod_;
    int root_rem_;
    std::function<void(const HyperOp&)> emit_;
    std::vector<std::uint64_t> cells_;
    std::vector<std::pair<int, int>> free_;
};

// Commutative multiplication tables over a fixed additive table: the zero row
// and column are absorbing and index 1 acts as identity (both hold in every
// valid table once zero and one are pinned there).
class MulEnumerator {
public:
    MulEnumerator(int n, Budget& budget, std::function<void(const BinOp&)> emit)
        : n_(n), budget_(budget), emit_(std::move(emit)),
          cells_(static_cast<std::size_t>(n) * n, -1) {
        for (int a = 0; a < n_; ++a) {
            set(0, a, 0);
            if (n_ >= 2) set(1, a, a);
        }
        for (int i = 2; i < n_; ++i)
            for (int j = i; j < n_; ++j) free_.push_back({i, j});
    }

    void run() {
        if (free_.empty()) {
            emit_(BinOp(n_, std::vector<int>(cells_.begin(), cells_.end())));
            return;
        }
        fill(0);
    }

private:
    int cell(int i, int j) const { return cells_[static_cast<std::size_t>(i) * n_ + j]; }

    void set(int i, int j, int v) {
        cells_[static_cast<std::size_t>(i) * n_ + j] = v;
        cells_[static_cast<std::size_t>(j) * n_ + i] = v;
    }

    void fill(std::size_t d) {
        if (d == free_.size()) {
            emit_(BinOp(n_, std::vector<int>(cells_.begin(), cells_.end())));
            return;
        }
        const auto [i, j] = free_[d];
        for (int v = 0; v < n_; ++v) {
            if (!budget_.spend()) break;
            set(i, j, v);
            if (assoc_ok()) fill(d + 1);
            if (budget_.exhausted) break;
        }
        set(i, j, -1);
    }

    bool assoc_ok() const {
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                for (int z = 0; z < n_; ++z) {
                    const int xy = cell(x, y);
                    const int yz = cell(y, z);
                    if (xy < 0 || yz < 0) continue;
                    const int l = cell(xy, z);
                    const int r = cell(x, yz);
                    if (l >= 0 && r >= 0 && l != r) return false;
                }
        return true;
    }

    int n_;
    Budget& budget_;
    std::function<void(const BinOp&)> emit_;
    std::vector<int> cells_;
    std::vector<std::pair<int, int>> free_;
};

// Scalar action tables over a fixed field and vector addition, theta at 0.
// Cells are filtered by the unit laws every valid action satisfies: the zero
// scalar always yields theta (exactly theta on theta itself) and the one
// scalar's cell contains its input.
class ActionEnumerator {
public:
    ActionEnumerator(const Hyperfield& f, int nv, Budget& budget,
                     std::function<void(const ScalarAction&)> emit)
        : f_(f), nf_(f.carrier.size()), nv_(nv), budget_(budget), emit_(std::move(emit)),
          cells_(static_cast<std::size_t>(nf_) * nv_, 0) {
        set(f_.zero, 0, 1);  // 0 * theta = {theta}
        for (int a = 0; a < nf_; ++a)
            for (int x = 0; x < nv_; ++x)
                if (!cell(a, x) && !(a == f_.zero && x == 0)) free_.push_back({a, x});
    }

    void run() {
        if (free_.empty()) {
            emit_(make());
            return;
        }
        fill(0);
    }

private:
    std::uint64_t cell(int a, int x) const { return cells_[static_cast<std::size_t>(a) * nv_ + x]; }
    void set(int a, int x, std::uint64_t v) { cells_[static_cast<std::size_t>(a) * nv_ + x] = v; }

    ScalarAction make() const {
        std::vector<ElemSet> cells;
        cells.reserve(cells_.size());
        for (std::uint64_t m : cells_) cells.push_back(mask_to_set(nv_, m));
        return ScalarAction(nf_, nv_, cells);
    }

    void fill(std::size_t d) {
        if (d == free_.size()) {
            emit_(make());
            return;
        }
        const auto [a, x] = free_[d];
        const std::uint64_t top = (nv_ == 64) ? ~std::uint64_t{0} : (bit(nv_) - 1);
        for (std::uint64_t v = 1; v <= top && v != 0; ++v) {
            if (a == f_.zero && !(v & 1)) continue;
            if (a == f_.one && !(v & bit(x))) continue;
            if (!budget_.spend()) break;
            set(a, x, v);
            if (consistent(a)) fill(d + 1);
            if (budget_.exhausted) break;
        }
        set(a, x, 0);
    }

    // (a.b) * x must equal a * (b * x) wherever both sides are determined.
    bool consistent(int a0) const {
        for (int a = 0; a < nf_; ++a)
            for (int b = 0; b < nf_; ++b)
                for (int x = 0; x < nv_; ++x) {
                    const int ab = f_.mul.at(a, b);
                    if (a != a0 && b != a0 && ab != a0) continue;
                    const std::uint64_t lhs = cell(ab, x);
                    const std::uint64_t bx = cell(b, x);
                    if (!lhs || !bx) continue;
                    std::uint64_t rhs = 0;
                    bool known = true;
                    for (int w = 0; w < nv_; ++w) {
                        if (!(bx & bit(w))) continue;
                        const std::uint64_t c = cell(a, w);
                        if (!c) {
                            known = false;
                            break;
                        }
                        rhs |= c;
                    }
                    if (known && lhs != rhs) return false;
                }
        return true;
    }

    const Hyperfield& f_;
    int nf_;
    int nv_;
    Budget& budget_;
    std::function<void(const ScalarAction&)> emit_;
    std::vector<std::uint64_t> cells_;
    std::vector<std::pair<int, int>> free_;
};

struct WorkerOutput {
    std::vector<FoundStructure> found;
    std::uint64_t nodes = 0;
    bool complete = true;
};

// One worker's share of the search: candidate values of the first free cell
// are split round-robin across workers.
WorkerOutput run_worker(const SearchSpec& spec, std::uint64_t budget, int root_mod, int root_rem) {
    WorkerOutput out;
    Budget b{budget, 0, false};
    const int n = spec.size;

    if (spec.kind == SearchSpec::Kind::Hypergroup) {
        const Carrier carrier = numbered_carrier(n, "");
        AddEnumerator(n, spec.commutative, b, root_mod, root_rem, [&](const HyperOp& add) {
            auto r = check_hypergroup(carrier, add, 1);
            if (!r.group || r.group->zero != 0) return;
            auto canon = canonical_hg_key(add, 0);
            auto rc = check_hypergroup(carrier, op_from_masks(n, canon.key), 1);
            if (!rc.group) throw std::logic_error("search: canonical table failed its own audit");
            out.found.push_back({std::move(*rc.group), canon.form});
        }).run();
    } else if (spec.kind == SearchSpec::Kind::Hyperfield) {
        const Carrier carrier = numbered_carrier(n, "");
        AddEnumerator(n, true, b, root_mod, root_rem, [&](const HyperOp& add) {
            auto hg = check_hypergroup(carrier, add, 1);
            if (!hg.group || hg.group->zero != 0) return;
            MulEnumerator(n, b, [&](const BinOp& mul) {
                auto hf = check_hyperfield(carrier, add, mul, 1);
                if (!hf.field || hf.field->zero != 0) return;
                if (n >= 2 && hf.field->one != 1) return;
                auto canon = canonical_hf_key(add, mul, hf.field->zero, hf.field->one);
                std::vector<int> mul_cells;
                mul_cells.reserve(canon.mul_key.size());
                for (std::uint64_t v : canon.mul_key) mul_cells.push_back(static_cast<int>(v));
                auto rc = check_hyperfield(carrier, op_from_masks(n, canon.add_key),
                                           BinOp(n, mul_cells), 1);
                if (!rc.field) throw std::logic_error("search: canonical table failed its own audit");
                out.found.push_back({std::move(*rc.field), canon.form});
            }).run();
        }).run();
    } else {
        const Hyperfield& f = *spec.field;
        const Carrier vcarrier = numbered_carrier(n, "v");
        AddEnumerator(n, true, b, root_mod, root_rem, [&](const HyperOp& vadd) {
            auto hg = check_hypergroup(vcarrier, vadd, 1);
            if (!hg.group || hg.group->zero != 0) return;
            ActionEnumerator(f, n, b, [&](const ScalarAction& act) {
                auto hv = check_hypervector_space(f, vcarrier, vadd, act, 1);
                if (!hv.space || hv.space->theta != 0) return;
                auto canon = canonical_hvs_key(f, vadd, act, 0);
                std::vector<ElemSet> act_cells;
                act_cells.reserve(canon.act_key.size());
                for (std::uint64_t m : canon.act_key) act_cells.push_back(mask_to_set(n, m));
                auto rc = check_hypervector_space(
                    f, vcarrier, op_from_masks(n, canon.vadd_key),
                    ScalarAction(f.carrier.size(), n, act_cells), 1);
                if (!rc.space) throw std::logic_error("search: canonical table failed its own audit");
                out.found.push_back({std::move(*rc.space), canon.form});
            }).run();
        }).run();
    }

    out.nodes = b.used;
    out.complete = !b.exhausted;
    return out;
}

}  // namespace

SearchResult enumerate_structures(const SearchSpec& spec) {
    if (spec.size < 1 || spec.size > 10)
        throw std::invalid_argument("search: size must be between 1 and 10");
    if (spec.budget == 0) throw std::invalid_argument("search: budget must be positive");
    if (spec.kind == SearchSpec::Kind::HypervectorSpace && !spec.field)
        throw std::invalid_argument("search: hypervector space search needs a scalar field");

    const int workers = std::clamp(spec.workers, 1, 64);
    std::vector<WorkerOutput> parts(static_cast<std::size_t>(workers));
    if (workers == 1) {
        parts[0] = run_worker(spec, spec.budget, 1, 0);
    } else {
        const std::uint64_t share = spec.budget / static_cast<std::uint64_t>(workers);
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t wb = share + (w == 0 ? spec.budget % workers : 0);
            threads.emplace_back([&parts, &spec, wb, workers, w] {
                parts[static_cast<std::size_t>(w)] = run_worker(spec, wb, workers, w);
            });
        }
        for (auto& t : threads) t.join();
    }

    SearchResult result;
    for (auto& p : parts) {
        result.nodes += p.nodes;
        result.complete = result.complete && p.complete;
        for (auto& f : p.found) result.structures.push_back(std::move(f));
    }
    std::sort(result.structures.begin(), result.structures.end(),
              [](const FoundStructure& a, const FoundStructure& b) {
                  return a.canonical < b.canonical;
              });
    result.structures.erase(
        std::unique(result.structures.begin(), result.structures.end(),
                    [](const FoundStructure& a, const FoundStructure& b) {
                        return a.canonical == b.canonical;
                    }),
        result.structures.end());
    return result;
}

std::string canonical_form(const Hypergroup& g) { return canonical_hg_key(g.add, g.zero).form; }

std::string canonical_form(const Hyperfield& f) {
    return canonical_hf_key(f.add, f.mul, f.zero, f.one).form;
}

std::string canonical_form(const HypervectorSpace& v) {
    return canonical_hvs_key(v.field, v.vadd, v.action, v.theta).form;
}

namespace {

Ifs random_overlay_impl(int n, int grid, std::uint64_t seed, int retry_cap,
                        const std::function<bool(const Ifs&)>& pred, const char* what) {
    if (grid < 1) throw std::invalid_argument("random_overlay: grid must be positive");
    if (retry_cap < 1) throw std::invalid_argument("random_overlay: retry cap must be positive");
    Rng rng(seed);
    for (int attempt = 0; attempt < retry_cap; ++attempt) {
        std::vector<Degree> mu, nu;
        mu.reserve(static_cast<std::size_t>(n));
        nu.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const auto mnum = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(grid) + 1));
            const auto nnum = static_cast<std::int64_t>(
                rng.below(static_cast<std::uint64_t>(grid - mnum) + 1));
            mu.emplace_back(mnum, grid);
            nu.emplace_back(nnum, grid);
        }
        Ifs cand(std::move(mu), std::move(nu));
        if (pred(cand)) return cand;
    }
    throw std::runtime_error(std::string("random_overlay: retry cap exhausted for ") + what);
}

}  // namespace

Ifs random_overlay(const Hyperfield& f, int grid, std::uint64_t seed, int retry_cap) {
    return random_overlay_impl(
        f.carrier.size(), grid, seed, retry_cap,
        [&](const Ifs& cand) { return check_if_hyperfield(f, cand, 1).ok(); }, "a field overlay");
}

Ifs random_overlay(const HypervectorSpace& v, const Ifs& field_overlay, int grid,
                   std::uint64_t seed, int retry_cap) {
    if (field_overlay.size() != v.field.carrier.size())
        throw std::invalid_argument("random_overlay: field overlay size mismatch");
    if (grid < 1) throw std::invalid_argument("random_overlay: grid must be positive");
    if (retry_cap < 1) throw std::invalid_argument("random_overlay: retry cap must be positive");
    // Every passing overlay satisfies mu_B <= mu_A(1) and nu_B >= nu_A(1)
    // pointwise (the bounds at theta propagate through the hyperaddition
    // conditions), so candidates are drawn inside that envelope; bare
    // rejection would need ~grid^(2n) attempts when the envelope is tight.
    // The remaining conditions are still settled by the full audit.
    const Degree mu_one = field_overlay.mu(v.field.one);
    const Degree nu_one = field_overlay.nu(v.field.one);
    const std::int64_t g = grid;
    const std::int64_t mu_cap = mu_one.num() * g / mu_one.den();
    const std::int64_t nu_lo = (nu_one.num() * g + nu_one.den() - 1) / nu_one.den();
    const int n = v.vcarrier.size();
    Rng rng(seed);
    for (int attempt = 0; attempt < retry_cap; ++attempt) {
        std::vector<Degree> mu, nu;
        mu.reserve(static_cast<std::size_t>(n));
        nu.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const auto m = static_cast<std::int64_t>(
                rng.below(static_cast<std::uint64_t>(mu_cap) + 1));
            // mu_A(1) + nu_A(1) <= 1 guarantees g - m >= nu_lo.
            const std::int64_t hi = g - m;
            const auto nn = nu_lo + static_cast<std::int64_t>(
                                        rng.below(static_cast<std::uint64_t>(hi - nu_lo) + 1));
            mu.emplace_back(m, g);
            nu.emplace_back(nn, g);
        }
        Ifs cand(std::move(mu), std::move(nu));
        if (check_if_hvs(v, field_overlay, cand, 1).ok()) return cand;
    }
    throw std::runtime_error("random_overlay: retry cap exhausted for a vector overlay");
}

}  // namespace hyperfuzz
