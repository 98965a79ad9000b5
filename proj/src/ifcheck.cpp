#include "hyperfuzz/ifcheck.hpp"

#include <stdexcept>

namespace hyperfuzz {

namespace {

void require_sizes(int carrier, const Ifs& s, const char* what) {
    if (s.size() != carrier) throw std::invalid_argument(std::string(what) + ": overlay size mismatch");
}

struct Ctx {
    const Carrier& c;
    Report& report;

    void fail(const char* axiom, std::vector<std::pair<std::string, int>> witness,
              const char* lhs_desc, const Degree& lhs, const char* rhs_desc, const Degree& rhs) {
        Violation v;
        v.axiom = axiom;
        v.witness = std::move(witness);
        std::string names;
        for (auto& [name, idx] : v.witness) {
            if (!names.empty()) names += ", ";
            names += name + "=" + c.name(idx);
        }
        v.witness_names = names;
        v.lhs_desc = lhs_desc;
        v.lhs = lhs.str();
        v.rhs_desc = rhs_desc;
        v.rhs = rhs.str();
        report.add(v);
    }
};

}  // namespace

Report check_if_hyperfield(const Hyperfield& f, const Ifs& a, int cap) {
    require_sizes(f.carrier.size(), a, "check_if_hyperfield");
    Report report(cap);
    Ctx ctx{f.carrier, report};
    const int n = f.carrier.size();

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const ElemSet sum = f.add.at(x, y);
            // (i) min mu over x+y >= mu(x) ^ mu(y)
            const Degree mu_min = aggregate_min(a.mu(), sum);
            const Degree mu_bound = min(a.mu(x), a.mu(y));
            if (!(mu_min >= mu_bound))
                ctx.fail("DEF3.1.i", {{"a", x}, {"b", y}}, "min mu over a+b", mu_min,
                         "mu(a) ^ mu(b)", mu_bound);
            // (v) max nu over x+y <= nu(x) v nu(y)
            const Degree nu_max = aggregate_max(a.nu(), sum);
            const Degree nu_bound = max(a.nu(x), a.nu(y));
            if (!(nu_max <= nu_bound))
                ctx.fail("DEF3.1.v", {{"a", x}, {"b", y}}, "max nu over a+b", nu_max,
                         "nu(a) v nu(b)", nu_bound);
        }

    for (int x = 0; x < n; ++x) {
        const int nx = f.neg[static_cast<std::size_t>(x)];
        // (ii) mu(-a) >= mu(a)
        if (!(a.mu(nx) >= a.mu(x)))
            ctx.fail("DEF3.1.ii", {{"a", x}}, "mu(-a)", a.mu(nx), "mu(a)", a.mu(x));
        // (vi) nu(-a) <= nu(a)
        if (!(a.nu(nx) <= a.nu(x)))
            ctx.fail("DEF3.1.vi", {{"a", x}}, "nu(-a)", a.nu(nx), "nu(a)", a.nu(x));
    }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int prod = f.mul.at(x, y);
            // (iii) mu(a.b) >= mu(a) ^ mu(b)
            const Degree mu_bound = min(a.mu(x), a.mu(y));
            if (!(a.mu(prod) >= mu_bound))
                ctx.fail("DEF3.1.iii", {{"a", x}, {"b", y}}, "mu(a.b)", a.mu(prod),
                         "mu(a) ^ mu(b)", mu_bound);
            // (vii) nu(a.b) <= nu(a) v nu(b)
            const Degree nu_bound = max(a.nu(x), a.nu(y));
            if (!(a.nu(prod) <= nu_bound))
                ctx.fail("DEF3.1.vii", {{"a", x}, {"b", y}}, "nu(a.b)", a.nu(prod),
                         "nu(a) v nu(b)", nu_bound);
        }

    for (int x = 0; x < n; ++x) {
        if (x == f.zero) continue;
        const int ix = f.inv[static_cast<std::size_t>(x)];
        // (iv) mu(a^-1) >= mu(a)
        if (!(a.mu(ix) >= a.mu(x)))
            ctx.fail("DEF3.1.iv", {{"a", x}}, "mu(a^-1)", a.mu(ix), "mu(a)", a.mu(x));
        // (viii) nu(a^-1) <= nu(a)
        if (!(a.nu(ix) <= a.nu(x)))
            ctx.fail("DEF3.1.viii", {{"a", x}}, "nu(a^-1)", a.nu(ix), "nu(a)", a.nu(x));
    }

    report.sort();
    return report;
}

Report check_result_3_2(const Hyperfield& f, const Ifs& a, int cap) {
    require_sizes(f.carrier.size(), a, "check_result_3_2");
    Report report(cap);
    Ctx ctx{f.carrier, report};

    for (int x = 0; x < f.carrier.size(); ++x) {
        // (i) mu(0) >= mu(a)
        if (!(a.mu(f.zero) >= a.mu(x)))
            ctx.fail("RES3.2.i", {{"a", x}}, "mu(0)", a.mu(f.zero), "mu(a)", a.mu(x));
        // (ii) mu(1) >= mu(a) for a != 0
        if (x != f.zero && !(a.mu(f.one) >= a.mu(x)))
            ctx.fail("RES3.2.ii", {{"a", x}}, "mu(1)", a.mu(f.one), "mu(a)", a.mu(x));
        // (iv) nu(0) <= nu(a)
        if (!(a.nu(f.zero) <= a.nu(x)))
            ctx.fail("RES3.2.iv", {{"a", x}}, "nu(0)", a.nu(f.zero), "nu(a)", a.nu(x));
        // (v) nu(1) <= nu(a) for a != 0
        if (x != f.zero && !(a.nu(f.one) <= a.nu(x)))
            ctx.fail("RES3.2.v", {{"a", x}}, "nu(1)", a.nu(f.one), "nu(a)", a.nu(x));
    }
    // (iii) mu(0) >= mu(1), (vi) nu(0) <= nu(1)
    if (!(a.mu(f.zero) >= a.mu(f.one)))
        ctx.fail("RES3.2.iii", {}, "mu(0)", a.mu(f.zero), "mu(1)", a.mu(f.one));
    if (!(a.nu(f.zero) <= a.nu(f.one)))
        ctx.fail("RES3.2.vi", {}, "nu(0)", a.nu(f.zero), "nu(1)", a.nu(f.one));

    report.sort();
    return report;
}

Report check_if_hvs(const HypervectorSpace& v, const Ifs& a, const Ifs& b, int cap) {
    require_sizes(v.field.carrier.size(), a, "check_if_hvs (field overlay)");
    require_sizes(v.vcarrier.size(), b, "check_if_hvs (vector overlay)");
    Report report(cap);
    const int nf = v.field.carrier.size();
    const int nv = v.vcarrier.size();

    auto fail = [&](const char* axiom, std::vector<std::pair<std::string, int>> scalar_w,
                    std::vector<std::pair<std::string, int>> vector_w, const char* lhs_desc,
                    const Degree& lhs, const char* rhs_desc, const Degree& rhs) {
        Violation viol;
        viol.axiom = axiom;
        std::string names;
        for (auto& [name, idx] : scalar_w) {
            if (!names.empty()) names += ", ";
            names += name + "=" + v.field.carrier.name(idx);
            viol.witness.push_back({name, idx});
        }
        for (auto& [name, idx] : vector_w) {
            if (!names.empty()) names += ", ";
            names += name + "=" + v.vcarrier.name(idx);
            viol.witness.push_back({name, idx});
        }
        viol.witness_names = names;
        viol.lhs_desc = lhs_desc;
        viol.lhs = lhs.str();
        viol.rhs_desc = rhs_desc;
        viol.rhs = rhs.str();
        report.add(viol);
    };

    for (int x = 0; x < nv; ++x)
        for (int y = 0; y < nv; ++y) {
            const ElemSet sum = v.vadd.at(x, y);
            // (i) min mu over x#y >= mu(x) ^ mu(y)
            const Degree mu_min = aggregate_min(b.mu(), sum);
            const Degree mu_bound = min(b.mu(x), b.mu(y));
            if (!(mu_min >= mu_bound))
                fail("DEF3.3.i", {}, {{"x", x}, {"y", y}}, "min mu over x#y", mu_min,
                     "mu(x) ^ mu(y)", mu_bound);
            // (v) max nu over x#y <= nu(x) v nu(y)
            const Degree nu_max = aggregate_max(b.nu(), sum);
            const Degree nu_bound = max(b.nu(x), b.nu(y));
            if (!(nu_max <= nu_bound))
                fail("DEF3.3.v", {}, {{"x", x}, {"y", y}}, "max nu over x#y", nu_max,
                     "nu(x) v nu(y)", nu_bound);
        }

    for (int x = 0; x < nv; ++x) {
        const int nx = v.vneg[static_cast<std::size_t>(x)];
        // (ii) mu(-x) >= mu(x); (vi) nu(-x) <= nu(x)
        if (!(b.mu(nx) >= b.mu(x)))
            fail("DEF3.3.ii", {}, {{"x", x}}, "mu(-x)", b.mu(nx), "mu(x)", b.mu(x));
        if (!(b.nu(nx) <= b.nu(x)))
            fail("DEF3.3.vi", {}, {{"x", x}}, "nu(-x)", b.nu(nx), "nu(x)", b.nu(x));
    }

    for (int s = 0; s < nf; ++s)
        for (int x = 0; x < nv; ++x) {
            const ElemSet cell = v.action.at(s, x);
            // (iii) min mu over a*x >= mu(x) ^ muF(a)
            const Degree mu_min = aggregate_min(b.mu(), cell);
            const Degree mu_bound = min(b.mu(x), a.mu(s));
            if (!(mu_min >= mu_bound))
                fail("DEF3.3.iii", {{"a", s}}, {{"x", x}}, "min mu over a*x", mu_min,
                     "mu(x) ^ muF(a)", mu_bound);
            // (vii) max nu over a*x <= nu(x) v nuF(a)
            const Degree nu_max = aggregate_max(b.nu(), cell);
            const Degree nu_bound = max(b.nu(x), a.nu(s));
            if (!(nu_max <= nu_bound))
                fail("DEF3.3.vii", {{"a", s}}, {{"x", x}}, "max nu over a*x", nu_max,
                     "nu(x) v nuF(a)", nu_bound);
        }

    // (iv) muF(1) >= mu(theta); (viii) nuF(1) <= nu(theta)
    if (!(a.mu(v.field.one) >= b.mu(v.theta)))
        fail("DEF3.3.iv", {}, {}, "muF(1)", a.mu(v.field.one), "mu(theta)", b.mu(v.theta));
    if (!(a.nu(v.field.one) <= b.nu(v.theta)))
        fail("DEF3.3.viii", {}, {}, "nuF(1)", a.nu(v.field.one), "nu(theta)", b.nu(v.theta));

    report.sort();
    return report;
}

Report check_result_3_4(const HypervectorSpace& v, const Ifs& a, const Ifs& b, int cap) {
    require_sizes(v.field.carrier.size(), a, "check_result_3_4 (field overlay)");
    require_sizes(v.vcarrier.size(), b, "check_result_3_4 (vector overlay)");
    Report report(cap);

    auto fail = [&](const char* axiom, std::vector<std::pair<std::string, int>> w,
                    const char* lhs_desc, const Degree& lhs, const char* rhs_desc,
                    const Degree& rhs) {
        Violation viol;
        viol.axiom = axiom;
        viol.witness = std::move(w);
        std::string names;
        for (auto& [name, idx] : viol.witness) {
            if (!names.empty()) names += ", ";
            names += name + "=" + v.vcarrier.name(idx);
        }
        viol.witness_names = names;
        viol.lhs_desc = lhs_desc;
        viol.lhs = lhs.str();
        viol.rhs_desc = rhs_desc;
        viol.rhs = rhs.str();
        report.add(viol);
    };

    const Degree& mu_f0 = a.mu(v.field.zero);
    const Degree& nu_f0 = a.nu(v.field.zero);
    const Degree& mu_theta = b.mu(v.theta);
    const Degree& nu_theta = b.nu(v.theta);

    // (i) muF(0) >= mu(theta); (iv) nuF(0) <= nu(theta)
    if (!(mu_f0 >= mu_theta)) fail("RES3.4.i", {}, "muF(0)", mu_f0, "mu(theta)", mu_theta);
    if (!(nu_f0 <= nu_theta)) fail("RES3.4.iv", {}, "nuF(0)", nu_f0, "nu(theta)", nu_theta);

    for (int x = 0; x < v.vcarrier.size(); ++x) {
        // (ii) mu(theta) >= mu(x); (v) nu(theta) <= nu(x)
        if (!(mu_theta >= b.mu(x)))
            fail("RES3.4.ii", {{"x", x}}, "mu(theta)", mu_theta, "mu(x)", b.mu(x));
        if (!(nu_theta <= b.nu(x)))
            fail("RES3.4.v", {{"x", x}}, "nu(theta)", nu_theta, "nu(x)", b.nu(x));
        // (iii) muF(0) >= mu(x); (vi) nuF(0) <= nu(x)
        if (!(mu_f0 >= b.mu(x)))
            fail("RES3.4.iii", {{"x", x}}, "muF(0)", mu_f0, "mu(x)", b.mu(x));
        if (!(nu_f0 <= b.nu(x)))
            fail("RES3.4.vi", {{"x", x}}, "nuF(0)", nu_f0, "nu(x)", b.nu(x));
    }

    report.sort();
    return report;
}

Report check_characterization(const HypervectorSpace& v, const Ifs& a, const Ifs& b, int cap) {
    require_sizes(v.field.carrier.size(), a, "check_characterization (field overlay)");
    require_sizes(v.vcarrier.size(), b, "check_characterization (vector overlay)");
    Report report(cap);
    const int nf = v.field.carrier.size();
    const int nv = v.vcarrier.size();

    auto fail = [&](const char* axiom, std::vector<std::pair<std::string, int>> scalar_w,
                    std::vector<std::pair<std::string, int>> vector_w, const char* lhs_desc,
                    const Degree& lhs, const char* rhs_desc, const Degree& rhs) {
        Violation viol;
        viol.axiom = axiom;
        std::string names;
        for (auto& [name, idx] : scalar_w) {
            if (!names.empty()) names += ", ";
            names += name + "=" + v.field.carrier.name(idx);
            viol.witness.push_back({name, idx});
        }
        for (auto& [name, idx] : vector_w) {
            if (!names.empty()) names += ", ";
            names += name + "=" + v.vcarrier.name(idx);
            viol.witness.push_back({name, idx});
        }
        viol.witness_names = names;
        viol.lhs_desc = lhs_desc;
        viol.lhs = lhs.str();
        viol.rhs_desc = rhs_desc;
        viol.rhs = rhs.str();
        report.add(viol);
    };

    for (int s = 0; s < nf; ++s)
        for (int t = 0; t < nf; ++t)
            for (int x = 0; x < nv; ++x)
                for (int y = 0; y < nv; ++y) {
                    const ElemSet composite =
                        extend_set_set(v.vadd, v.action.at(s, x), v.action.at(t, y));
                    // (i) min mu over a*x # b*y >= (muF(a)^mu(x)) ^ (muF(b)^mu(y))
                    const Degree mu_min = aggregate_min(b.mu(), composite);
                    const Degree mu_bound =
                        min(min(a.mu(s), b.mu(x)), min(a.mu(t), b.mu(y)));
                    if (!(mu_min >= mu_bound))
                        fail("THM3.5.i", {{"a", s}, {"b", t}}, {{"x", x}, {"y", y}},
                             "min mu over a*x # b*y", mu_min, "(muF(a)^mu(x)) ^ (muF(b)^mu(y))",
                             mu_bound);
                    // (iii) max nu over a*x # b*y <= (nuF(a)v nu(x)) v (nuF(b)v nu(y))
                    const Degree nu_max = aggregate_max(b.nu(), composite);
                    const Degree nu_bound =
                        max(max(a.nu(s), b.nu(x)), max(a.nu(t), b.nu(y)));
                    if (!(nu_max <= nu_bound))
                        fail("THM3.5.iii", {{"a", s}, {"b", t}}, {{"x", x}, {"y", y}},
                             "max nu over a*x # b*y", nu_max, "(nuF(a)v nu(x)) v (nuF(b)v nu(y))",
                             nu_bound);
                }

    // (ii) muF(1) >= mu(theta); (iv) nuF(1) <= nu(theta)
    if (!(a.mu(v.field.one) >= b.mu(v.theta)))
        fail("THM3.5.ii", {}, {}, "muF(1)", a.mu(v.field.one), "mu(theta)", b.mu(v.theta));
    if (!(a.nu(v.field.one) <= b.nu(v.theta)))
        fail("THM3.5.iv", {}, {}, "nuF(1)", a.nu(v.field.one), "nu(theta)", b.nu(v.theta));

    report.sort();
    return report;
}

EquivalenceRecord equivalence_oracle(const HypervectorSpace& v, const Ifs& a, const Ifs& b,
                                     int cap) {
    if (!check_if_hyperfield(v.field, a).ok())
        throw std::invalid_argument("equivalence_oracle: field overlay is not an IF hyperfield");
    EquivalenceRecord rec;
    rec.eight_report = check_if_hvs(v, a, b, cap);
    rec.four_report = check_characterization(v, a, b, cap);
    rec.eight = rec.eight_report.ok();
    rec.four = rec.four_report.ok();
    rec.agree = rec.eight == rec.four;
    return rec;
}

}  // namespace hyperfuzz
