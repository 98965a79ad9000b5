#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace hyperfuzz {

// One failed axiom instance.  `axiom` is a stable id string (e.g. DEF2.3.ii);
// witnesses bind quantified variable names to element indices so the instance
// can be re-evaluated; lhs/rhs carry the rendered values that disagreed.
struct Violation {
    std::string axiom;
    std::vector<std::pair<std::string, int>> witness;  // variable name -> element index
    std::string witness_names;                         // rendered "a=1, b=0"
    std::string lhs_desc;
    std::string lhs;
    std::string rhs_desc;
    std::string rhs;

    std::string str() const {
        std::string out = axiom;
        if (!witness_names.empty()) out += " [" + witness_names + "]";
        out += ": " + lhs_desc + " = " + lhs + " vs " + rhs_desc + " = " + rhs;
        return out;
    }
};

// Deterministic violation list.  All instances are evaluated; recording stops
// at the cap.  Final order is lexicographic in (axiom id, witness indices).
class Report {
public:
    explicit Report(int cap = 100) : cap_(cap) {}

    bool ok() const { return violations_.empty(); }
    bool truncated() const { return truncated_; }
    const std::vector<Violation>& violations() const { return violations_; }

    void add(Violation v) {
        if (static_cast<int>(violations_.size()) >= cap_) {
            truncated_ = true;
            return;
        }
        violations_.push_back(std::move(v));
    }

    void merge(const Report& o) {
        for (const Violation& v : o.violations_) add(v);
        truncated_ = truncated_ || o.truncated_;
    }

    bool has_axiom(const std::string& id) const {
        for (const Violation& v : violations_)
            if (v.axiom == id) return true;
        return false;
    }

    const Violation* find_axiom(const std::string& id) const {
        for (const Violation& v : violations_)
            if (v.axiom == id) return &v;
        return nullptr;
    }

    void sort() {
        std::stable_sort(violations_.begin(), violations_.end(),
                         [](const Violation& a, const Violation& b) {
                             if (a.axiom != b.axiom) return a.axiom < b.axiom;
                             std::vector<int> wa, wb;
                             for (auto& p : a.witness) wa.push_back(p.second);
                             for (auto& p : b.witness) wb.push_back(p.second);
                             return wa < wb;
                         });
    }

    std::string str() const {
        std::string out;
        for (const Violation& v : violations_) out += v.str() + "\n";
        if (truncated_) out += "(violation cap reached, list truncated)\n";
        return out;
    }

private:
    int cap_;
    bool truncated_ = false;
    std::vector<Violation> violations_;
};

}  // namespace hyperfuzz
