#include "hyperfuzz/lintrans.hpp"

#include <stdexcept>

namespace hyperfuzz {

namespace {

ElemSet image_of(const LinearMap& t, const ElemSet& s) {
    ElemSet out(t.target->vcarrier.size());
    for (int e : s) out.insert(t.at(e));
    return out;
}

void require_map(const LinearMap& t) {
    if (!t.source || !t.target) throw std::invalid_argument("linear map: missing space");
    if (!same_field(t.source->field, t.target->field))
        throw std::invalid_argument("linear map: spaces over different hyperfields");
    if (static_cast<int>(t.map.size()) != t.source->vcarrier.size())
        throw std::invalid_argument("linear map: not total");
    for (int y : t.map)
        if (y < 0 || y >= t.target->vcarrier.size())
            throw std::invalid_argument("linear map: value out of range");
}

}  // namespace

bool same_field(const Hyperfield& a, const Hyperfield& b) {
    return a.carrier.names() == b.carrier.names() && a.add.cells() == b.add.cells() &&
           a.mul.cells() == b.mul.cells() && a.zero == b.zero && a.one == b.one;
}

bool same_space(const HypervectorSpace& a, const HypervectorSpace& b) {
    return same_field(a.field, b.field) && a.vcarrier.names() == b.vcarrier.names() &&
           a.vadd.cells() == b.vadd.cells() && a.action.cells() == b.action.cells();
}

Report check_linear(const LinearMap& t, int cap) {
    require_map(t);
    const HypervectorSpace& v = *t.source;
    const HypervectorSpace& w = *t.target;
    Report report(cap);

    auto fail = [&](const char* axiom, std::vector<std::pair<std::string, int>> witness,
                    std::string witness_names, const char* lhs_desc, std::string lhs,
                    const char* rhs_desc, std::string rhs) {
        Violation viol;
        viol.axiom = axiom;
        viol.witness = std::move(witness);
        viol.witness_names = std::move(witness_names);
        viol.lhs_desc = lhs_desc;
        viol.lhs = std::move(lhs);
        viol.rhs_desc = rhs_desc;
        viol.rhs = std::move(rhs);
        report.add(viol);
    };

    // (iii) T(theta) = theta'
    if (t.at(v.theta) != w.theta)
        fail("DEF4.1.iii", {{"theta", v.theta}}, "theta=" + v.vcarrier.name(v.theta), "T(theta)",
             w.vcarrier.name(t.at(v.theta)), "theta'", w.vcarrier.name(w.theta));

    // (i) T(x # y) within T(x) #' T(y)
    for (int x = 0; x < v.vcarrier.size(); ++x)
        for (int y = 0; y < v.vcarrier.size(); ++y) {
            const ElemSet lhs = image_of(t, v.vadd.at(x, y));
            const ElemSet rhs = w.vadd.at(t.at(x), t.at(y));
            if (!lhs.subset_of(rhs))
                fail("DEF4.1.i", {{"x", x}, {"y", y}},
                     "x=" + v.vcarrier.name(x) + ", y=" + v.vcarrier.name(y), "T(x # y)",
                     lhs.str(w.vcarrier), "T(x) #' T(y)", rhs.str(w.vcarrier));
        }

    // (ii) T(a * x) within a *' T(x)
    for (int a = 0; a < v.field.carrier.size(); ++a)
        for (int x = 0; x < v.vcarrier.size(); ++x) {
            const ElemSet lhs = image_of(t, v.action.at(a, x));
            const ElemSet rhs = w.action.at(a, t.at(x));
            if (!lhs.subset_of(rhs))
                fail("DEF4.1.ii", {{"a", a}, {"x", x}},
                     "a=" + v.field.carrier.name(a) + ", x=" + v.vcarrier.name(x), "T(a * x)",
                     lhs.str(w.vcarrier), "a *' T(x)", rhs.str(w.vcarrier));
        }

    report.sort();
    return report;
}

Ifs preimage_ifs(const LinearMap& t, const Ifs& b) {
    require_map(t);
    if (b.size() != t.target->vcarrier.size())
        throw std::invalid_argument("preimage_ifs: overlay size mismatch");
    std::vector<Degree> mu, nu;
    mu.reserve(t.map.size());
    nu.reserve(t.map.size());
    for (int x = 0; x < t.source->vcarrier.size(); ++x) {
        mu.push_back(b.mu(t.at(x)));
        nu.push_back(b.nu(t.at(x)));
    }
    return Ifs(std::move(mu), std::move(nu));
}

LinearMap compose(const LinearMap& t, const LinearMap& s) {
    require_map(t);
    require_map(s);
    if (!same_space(*s.target, *t.source))
        throw std::invalid_argument("compose: inner/outer spaces disagree");
    LinearMap out;
    out.source = s.source;
    out.target = t.target;
    out.map.reserve(s.map.size());
    for (int x = 0; x < s.source->vcarrier.size(); ++x) out.map.push_back(t.at(s.at(x)));
    return out;
}

TheoremVerdict theorem_4_2_oracle(const LinearMap& t, const Ifs& a, const Ifs& b) {
    TheoremVerdict verdict;
    require_map(t);

    Report linear = check_linear(t);
    if (!linear.ok()) {
        verdict.status = TheoremVerdict::Status::PreconditionFailed;
        verdict.failure = std::move(linear);
        return verdict;
    }
    Report field_report = check_if_hyperfield(t.target->field, a);
    if (!field_report.ok()) {
        verdict.status = TheoremVerdict::Status::PreconditionFailed;
        verdict.failure = std::move(field_report);
        return verdict;
    }
    Report target_report = check_if_hvs(*t.target, a, b);
    if (!target_report.ok()) {
        verdict.status = TheoremVerdict::Status::PreconditionFailed;
        verdict.failure = std::move(target_report);
        return verdict;
    }

    const Ifs pre = preimage_ifs(t, b);
    verdict.counterexample = pre.values();
    Report audit = check_if_hvs(*t.source, a, pre);
    if (!audit.ok()) {
        verdict.status = TheoremVerdict::Status::Counterexample;
        verdict.failure = std::move(audit);
        return verdict;
    }
    const long nv = t.source->vcarrier.size();
    const long nf = t.source->field.carrier.size();
    verdict.status = TheoremVerdict::Status::Verified;
    verdict.instances = 2 * nv * nv + 2 * nv + 2 * nf * nv + 2;
    return verdict;
}

std::vector<LinearMap> enumerate_linear_maps(const HypervectorSpace& v, const HypervectorSpace& w,
                                             std::uint64_t bound) {
    if (!same_field(v.field, w.field))
        throw std::invalid_argument("enumerate_linear_maps: spaces over different hyperfields");
    const int nv = v.vcarrier.size();
    const int nw = w.vcarrier.size();

    std::uint64_t total = 1;
    for (int i = 0; i < nv; ++i) {
        if (total > bound / static_cast<std::uint64_t>(nw) + 1) {
            total = bound + 1;
            break;
        }
        total *= static_cast<std::uint64_t>(nw);
    }
    if (total > bound)
        throw std::length_error("enumerate_linear_maps: |W|^|V| exceeds the bound");

    std::vector<LinearMap> out;
    std::vector<int> table(static_cast<std::size_t>(nv), 0);
    // Odometer with the last coordinate fastest: emits tables in
    // lexicographic order.
    while (true) {
        LinearMap t{&v, &w, table};
        if (check_linear(t).ok()) out.push_back(std::move(t));
        int i = nv - 1;
        while (i >= 0 && table[static_cast<std::size_t>(i)] == nw - 1) {
            table[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++table[static_cast<std::size_t>(i)];
    }
    return out;
}

}  // namespace hyperfuzz
