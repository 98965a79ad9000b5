#include "hyperfuzz/structures.hpp"

#include <string>

namespace hyperfuzz {

namespace {

std::string bind_str(const Carrier& c, const std::vector<std::pair<std::string, int>>& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ", ";
        out += w[i].first + "=" + c.name(w[i].second);
    }
    return out;
}

// Elementwise image of a set under a single-valued operation, left argument
// fixed: a . S.
ElemSet map_elem_set(const BinOp& mul, int a, const ElemSet& s) {
    ElemSet out(mul.size());
    for (int e : s) out.insert(mul.at(a, e));
    return out;
}

ElemSet map_set_elem(const BinOp& mul, const ElemSet& s, int a) {
    ElemSet out(mul.size());
    for (int e : s) out.insert(mul.at(e, a));
    return out;
}

// Negatives of a relative to a candidate zero: all b with z in a#b and b#a.
ElemSet negatives_of(const HyperOp& add, int z, int a) {
    ElemSet out(add.size());
    for (int b = 0; b < add.size(); ++b)
        if (add.at(a, b).contains(z) && add.at(b, a).contains(z)) out.insert(b);
    return out;
}

void check_associativity(const Carrier& c, const HyperOp& add, Report& report) {
    const int n = add.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const ElemSet lhs = extend_elem_set(add, x, add.at(y, z));
                const ElemSet rhs = extend_set_elem(add, add.at(x, y), z);
                if (lhs != rhs) {
                    Violation v;
                    v.axiom = "DEF2.3.i";
                    v.witness = {{"x", x}, {"y", y}, {"z", z}};
                    v.witness_names = bind_str(c, v.witness);
                    v.lhs_desc = "x # (y # z)";
                    v.lhs = lhs.str(c);
                    v.rhs_desc = "(x # y) # z";
                    v.rhs = rhs.str(c);
                    report.add(v);
                }
            }
}

// Commutativity of a hyperaddition under the given axiom id.
void check_commutative(const Carrier& c, const HyperOp& add, const char* axiom, Report& report) {
    for (int a = 0; a < add.size(); ++a)
        for (int b = a + 1; b < add.size(); ++b)
            if (add.at(a, b) != add.at(b, a)) {
                Violation v;
                v.axiom = axiom;
                v.witness = {{"a", a}, {"b", b}};
                v.witness_names = bind_str(c, v.witness);
                v.lhs_desc = "a # b";
                v.lhs = add.at(a, b).str(c);
                v.rhs_desc = "b # a";
                v.rhs = add.at(b, a).str(c);
                report.add(v);
            }
}

// Multiplication-side hyperring/hyperfield checks that need no derived zero.
void check_mul_associativity(const Carrier& c, const BinOp& mul, Report& report) {
    const int n = mul.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d) {
                const int lhs = mul.at(mul.at(a, b), d);
                const int rhs = mul.at(a, mul.at(b, d));
                if (lhs != rhs) {
                    Violation v;
                    v.axiom = "DEF2.5.ii";
                    v.witness = {{"a", a}, {"b", b}, {"c", d}};
                    v.witness_names = bind_str(c, v.witness);
                    v.lhs_desc = "(a . b) . c";
                    v.lhs = c.name(lhs);
                    v.rhs_desc = "a . (b . c)";
                    v.rhs = c.name(rhs);
                    report.add(v);
                }
            }
}

void check_distributivity(const Carrier& c, const HyperOp& add, const BinOp& mul, Report& report) {
    const int n = mul.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d) {
                const ElemSet left_lhs = map_elem_set(mul, a, add.at(b, d));
                const ElemSet left_rhs = add.at(mul.at(a, b), mul.at(a, d));
                if (left_lhs != left_rhs) {
                    Violation v;
                    v.axiom = "DEF2.5.iii";
                    v.witness = {{"a", a}, {"b", b}, {"c", d}};
                    v.witness_names = bind_str(c, v.witness);
                    v.lhs_desc = "a . (b # c)";
                    v.lhs = left_lhs.str(c);
                    v.rhs_desc = "a.b # a.c";
                    v.rhs = left_rhs.str(c);
                    report.add(v);
                }
                const ElemSet right_lhs = map_set_elem(mul, add.at(b, d), a);
                const ElemSet right_rhs = add.at(mul.at(b, a), mul.at(d, a));
                if (right_lhs != right_rhs) {
                    Violation v;
                    v.axiom = "DEF2.5.iv";
                    v.witness = {{"a", a}, {"b", b}, {"c", d}};
                    v.witness_names = bind_str(c, v.witness);
                    v.lhs_desc = "(b # c) . a";
                    v.lhs = right_lhs.str(c);
                    v.rhs_desc = "b.a # c.a";
                    v.rhs = right_rhs.str(c);
                    report.add(v);
                }
            }
}

// Negation map induced by a zero candidate (unique negatives assumed).
std::vector<int> negation_for(const HyperOp& add, int z) {
    std::vector<int> neg(static_cast<std::size_t>(add.size()));
    for (int a = 0; a < add.size(); ++a)
        neg[static_cast<std::size_t>(a)] = *negatives_of(add, z, a).begin();
    return neg;
}

// Reversibility violations of the negation induced by a candidate zero:
// a in b#c must imply b in a#(-c).
void collect_reversibility(const Carrier& carrier, const HyperOp& add,
                           const std::vector<int>& neg, Report& report) {
    for (int b = 0; b < add.size(); ++b)
        for (int c = 0; c < add.size(); ++c)
            for (int a : add.at(b, c)) {
                const ElemSet back = add.at(a, neg[static_cast<std::size_t>(c)]);
                if (!back.contains(b)) {
                    Violation v;
                    v.axiom = "DEF2.3.iii";
                    v.witness = {{"a", a}, {"b", b}, {"c", c}};
                    v.witness_names = bind_str(carrier, v.witness);
                    v.lhs_desc = "a # (-c)";
                    v.lhs = back.str(carrier);
                    v.rhs_desc = "must contain";
                    v.rhs = carrier.name(b);
                    report.add(v);
                }
            }
}

void check_absorbing_zero(const Carrier& c, const BinOp& mul, int zero, Report& report) {
    for (int a = 0; a < mul.size(); ++a) {
        if (mul.at(a, zero) != zero) {
            Violation v;
            v.axiom = "DEF2.5.v";
            v.witness = {{"a", a}};
            v.witness_names = bind_str(c, v.witness);
            v.lhs_desc = "a . 0";
            v.lhs = c.name(mul.at(a, zero));
            v.rhs_desc = "0";
            v.rhs = c.name(zero);
            report.add(v);
        }
        if (mul.at(zero, a) != zero) {
            Violation v;
            v.axiom = "DEF2.5.v";
            v.witness = {{"a", a}};
            v.witness_names = bind_str(c, v.witness);
            v.lhs_desc = "0 . a";
            v.lhs = c.name(mul.at(zero, a));
            v.rhs_desc = "0";
            v.rhs = c.name(zero);
            report.add(v);
        }
    }
}

}  // namespace

std::vector<int> zero_candidates(const HyperOp& add) {
    std::vector<int> out;
    for (int z = 0; z < add.size(); ++z) {
        bool ok = true;
        for (int a = 0; a < add.size() && ok; ++a)
            if (negatives_of(add, z, a).size() != 1) ok = false;
        if (ok) out.push_back(z);
    }
    return out;
}

HypergroupResult check_hypergroup(const Carrier& carrier, const HyperOp& add, int cap) {
    if (carrier.size() != add.size())
        throw std::invalid_argument("check_hypergroup: carrier/table size mismatch");
    Report report(cap);
    check_associativity(carrier, add, report);

    const std::vector<int> zeros = zero_candidates(add);
    if (zeros.empty()) {
        // No candidate works; report, per candidate, the first element whose
        // negatives are missing or not unique.
        for (int z = 0; z < add.size(); ++z) {
            for (int a = 0; a < add.size(); ++a) {
                const ElemSet negs = negatives_of(add, z, a);
                if (negs.size() == 1) continue;
                Violation v;
                v.axiom = "DEF2.3.ii";
                v.witness = {{"z", z}, {"a", a}};
                v.witness_names = bind_str(carrier, v.witness);
                v.lhs_desc = "b with z in a#b and z in b#a";
                v.lhs = negs.str(carrier);
                v.rhs_desc = "required";
                v.rhs = "exactly one";
                report.add(v);
                break;
            }
        }
    }

    // The zero axiom is existential: any candidate whose induced negation
    // also satisfies reversibility can serve as the zero.  Engage the
    // smallest such candidate; report reversibility failures only when no
    // candidate works.
    std::vector<int> neg;
    int zero = -1;
    for (int z : zeros) {
        std::vector<int> cand_neg = negation_for(add, z);
        Report rev(cap);
        collect_reversibility(carrier, add, cand_neg, rev);
        if (rev.ok()) {
            zero = z;
            neg = std::move(cand_neg);
            break;
        }
    }
    if (zero < 0 && !zeros.empty())
        collect_reversibility(carrier, add, negation_for(add, zeros[0]), report);

    report.sort();
    HypergroupResult out{std::move(report), std::nullopt};
    if (out.report.ok()) out.group = Hypergroup{carrier, add, zero, std::move(neg)};
    return out;
}

Report check_prop_2_4(const Hypergroup& g, int cap) {
    Report report(cap);
    const Carrier& c = g.carrier;

    for (int a = 0; a < g.add.size(); ++a) {
        const int back = g.neg[static_cast<std::size_t>(g.neg[static_cast<std::size_t>(a)])];
        if (back != a) {
            Violation v;
            v.axiom = "PROP2.4.i";
            v.witness = {{"a", a}};
            v.witness_names = bind_str(c, v.witness);
            v.lhs_desc = "-(-a)";
            v.lhs = c.name(back);
            v.rhs_desc = "a";
            v.rhs = c.name(a);
            report.add(v);
        }
    }

    if (g.commutative()) {
        for (int a = 0; a < g.add.size(); ++a) {
            const ElemSet cell = g.add.at(g.zero, a);
            if (cell != ElemSet::single(g.add.size(), a)) {
                Violation v;
                v.axiom = "PROP2.4.ii";
                v.witness = {{"a", a}};
                v.witness_names = bind_str(c, v.witness);
                v.lhs_desc = "0 # a";
                v.lhs = cell.str(c);
                v.rhs_desc = "{a}";
                v.rhs = ElemSet::single(g.add.size(), a).str(c);
                report.add(v);
            }
        }
        // Uniqueness holds for the elements that genuinely serve as a zero:
        // candidates whose induced negation is also reversible.
        ElemSet zs(g.add.size());
        for (int z : zero_candidates(g.add)) {
            Report rev(1);
            collect_reversibility(c, g.add, negation_for(g.add, z), rev);
            if (rev.ok()) zs.insert(z);
        }
        if (zs.size() != 1) {
            Violation v;
            v.axiom = "PROP2.4.iii";
            v.lhs_desc = "hypergroup zeros";
            v.lhs = zs.str(c);
            v.rhs_desc = "required";
            v.rhs = "exactly one";
            report.add(v);
        }
    }

    report.sort();
    return report;
}

Report check_hyperring(const Carrier& carrier, const HyperOp& add, const BinOp& mul, int zero,
                       int cap) {
    if (carrier.size() != add.size() || carrier.size() != mul.size())
        throw std::invalid_argument("check_hyperring: carrier/table size mismatch");
    if (zero < 0 || zero >= carrier.size())
        throw std::invalid_argument("check_hyperring: zero out of range");

    HypergroupResult hg = check_hypergroup(carrier, add, cap);
    Report report(cap);
    report.merge(hg.report);
    check_commutative(carrier, add, "DEF2.5.i", report);

    if (hg.group && hg.group->zero != zero) {
        Violation v;
        v.axiom = "DECL.zero";
        v.witness = {{"declared", zero}, {"derived", hg.group->zero}};
        v.witness_names = bind_str(carrier, v.witness);
        v.lhs_desc = "declared zero";
        v.lhs = carrier.name(zero);
        v.rhs_desc = "derived zero";
        v.rhs = carrier.name(hg.group->zero);
        report.add(v);
    }

    check_mul_associativity(carrier, mul, report);
    check_distributivity(carrier, add, mul, report);
    const int effective_zero = hg.group ? hg.group->zero : zero;
    check_absorbing_zero(carrier, mul, effective_zero, report);

    report.sort();
    return report;
}

HyperfieldResult check_hyperfield(const Carrier& carrier, const HyperOp& add, const BinOp& mul,
                                  int cap) {
    if (carrier.size() != add.size() || carrier.size() != mul.size())
        throw std::invalid_argument("check_hyperfield: carrier/table size mismatch");

    HypergroupResult hg = check_hypergroup(carrier, add, cap);
    Report report(cap);
    report.merge(hg.report);
    check_commutative(carrier, add, "DEF2.5.i", report);
    check_mul_associativity(carrier, mul, report);
    check_distributivity(carrier, add, mul, report);
    if (hg.group) check_absorbing_zero(carrier, mul, hg.group->zero, report);

    // Identity: first e with a.e = a for every a.
    int one = -1;
    for (int e = 0; e < mul.size() && one < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < mul.size() && ok; ++a)
            if (mul.at(a, e) != a) ok = false;
        if (ok) one = e;
    }
    if (one < 0) {
        Violation v;
        v.axiom = "DEF2.6.ii";
        v.lhs_desc = "identity candidates";
        v.lhs = "{}";
        v.rhs_desc = "required";
        v.rhs = "some 1 with a . 1 = a for all a";
        report.add(v);
    }

    for (int a = 0; a < mul.size(); ++a)
        for (int b = a + 1; b < mul.size(); ++b)
            if (mul.at(a, b) != mul.at(b, a)) {
                Violation v;
                v.axiom = "DEF2.6.iv";
                v.witness = {{"a", a}, {"b", b}};
                v.witness_names = bind_str(carrier, v.witness);
                v.lhs_desc = "a . b";
                v.lhs = carrier.name(mul.at(a, b));
                v.rhs_desc = "b . a";
                v.rhs = carrier.name(mul.at(b, a));
                report.add(v);
            }

    std::vector<int> inv;
    if (hg.group && one >= 0) {
        const int zero = hg.group->zero;
        inv.assign(static_cast<std::size_t>(mul.size()), -1);
        for (int a = 0; a < mul.size(); ++a) {
            if (a == zero) continue;
            for (int b = 0; b < mul.size(); ++b)
                if (mul.at(a, b) == one) {
                    inv[static_cast<std::size_t>(a)] = b;
                    break;
                }
            if (inv[static_cast<std::size_t>(a)] < 0) {
                Violation v;
                v.axiom = "DEF2.6.iii";
                v.witness = {{"a", a}};
                v.witness_names = bind_str(carrier, v.witness);
                v.lhs_desc = "solutions of a . b = 1";
                v.lhs = "{}";
                v.rhs_desc = "required";
                v.rhs = "at least one";
                report.add(v);
            }
        }
    }

    report.sort();
    HyperfieldResult out{std::move(report), std::nullopt};
    if (out.report.ok())
        out.field = Hyperfield{carrier, add,     mul, hg.group->zero, one, std::move(hg.group->neg),
                               std::move(inv)};
    return out;
}

HvsResult check_hypervector_space(const Hyperfield& field, const Carrier& vcarrier,
                                  const HyperOp& vadd, const ScalarAction& action, int cap) {
    if (vcarrier.size() != vadd.size() || action.vectors() != vcarrier.size() ||
        action.scalars() != field.carrier.size())
        throw std::invalid_argument("check_hypervector_space: table size mismatch");

    const Carrier& fc = field.carrier;
    const int nf = fc.size();
    const int nv = vcarrier.size();

    HypergroupResult vg = check_hypergroup(vcarrier, vadd, cap);
    Report report(cap);
    report.merge(vg.report);
    check_commutative(vcarrier, vadd, "DEF2.7.comm", report);

    auto mixed_binding = [&](std::vector<std::pair<std::string, int>> scalar_part,
                             std::vector<std::pair<std::string, int>> vector_part, Violation& v) {
        std::string names;
        for (auto& p : scalar_part) {
            if (!names.empty()) names += ", ";
            names += p.first + "=" + fc.name(p.second);
            v.witness.push_back(p);
        }
        for (auto& p : vector_part) {
            if (!names.empty()) names += ", ";
            names += p.first + "=" + vcarrier.name(p.second);
            v.witness.push_back(p);
        }
        v.witness_names = names;
    };

    // (i) a * (alpha # beta) contained in a*alpha # a*beta.
    for (int a = 0; a < nf; ++a)
        for (int x = 0; x < nv; ++x)
            for (int y = 0; y < nv; ++y) {
                const ElemSet lhs = act_elem_set(action, a, vadd.at(x, y));
                const ElemSet rhs = extend_set_set(vadd, action.at(a, x), action.at(a, y));
                if (!lhs.subset_of(rhs)) {
                    Violation v;
                    v.axiom = "DEF2.7.i";
                    mixed_binding({{"a", a}}, {{"alpha", x}, {"beta", y}}, v);
                    v.lhs_desc = "a * (alpha # beta)";
                    v.lhs = lhs.str(vcarrier);
                    v.rhs_desc = "a*alpha # a*beta";
                    v.rhs = rhs.str(vcarrier);
                    report.add(v);
                }
            }

    // (ii) (a + b) * alpha contained in a*alpha # b*alpha.
    for (int a = 0; a < nf; ++a)
        for (int b = 0; b < nf; ++b)
            for (int x = 0; x < nv; ++x) {
                const ElemSet lhs = act_set_elem(action, field.add.at(a, b), x);
                const ElemSet rhs = extend_set_set(vadd, action.at(a, x), action.at(b, x));
                if (!lhs.subset_of(rhs)) {
                    Violation v;
                    v.axiom = "DEF2.7.ii";
                    mixed_binding({{"a", a}, {"b", b}}, {{"alpha", x}}, v);
                    v.lhs_desc = "(a + b) * alpha";
                    v.lhs = lhs.str(vcarrier);
                    v.rhs_desc = "a*alpha # b*alpha";
                    v.rhs = rhs.str(vcarrier);
                    report.add(v);
                }
            }

    // (iii) (a . b) * alpha = a * (b * alpha), as sets.
    for (int a = 0; a < nf; ++a)
        for (int b = 0; b < nf; ++b)
            for (int x = 0; x < nv; ++x) {
                const ElemSet lhs = action.at(field.mul.at(a, b), x);
                const ElemSet rhs = act_elem_set(action, a, action.at(b, x));
                if (lhs != rhs) {
                    Violation v;
                    v.axiom = "DEF2.7.iii";
                    mixed_binding({{"a", a}, {"b", b}}, {{"alpha", x}}, v);
                    v.lhs_desc = "(a . b) * alpha";
                    v.lhs = lhs.str(vcarrier);
                    v.rhs_desc = "a * (b * alpha)";
                    v.rhs = rhs.str(vcarrier);
                    report.add(v);
                }
            }

    // (iv) (-a) * alpha = a * (-alpha); needs the derived vector negation.
    if (vg.group) {
        for (int a = 0; a < nf; ++a)
            for (int x = 0; x < nv; ++x) {
                const int na = field.neg[static_cast<std::size_t>(a)];
                const int nx = vg.group->neg[static_cast<std::size_t>(x)];
                const ElemSet lhs = action.at(na, x);
                const ElemSet rhs = action.at(a, nx);
                if (lhs != rhs) {
                    Violation v;
                    v.axiom = "DEF2.7.iv";
                    mixed_binding({{"a", a}}, {{"alpha", x}}, v);
                    v.lhs_desc = "(-a) * alpha";
                    v.lhs = lhs.str(vcarrier);
                    v.rhs_desc = "a * (-alpha)";
                    v.rhs = rhs.str(vcarrier);
                    report.add(v);
                }
            }
    }

    // (v) alpha in 1*alpha; theta in 0*alpha; 0*theta = {theta}.
    for (int x = 0; x < nv; ++x) {
        const ElemSet one_cell = action.at(field.one, x);
        if (!one_cell.contains(x)) {
            Violation v;
            v.axiom = "DEF2.7.v";
            mixed_binding({}, {{"alpha", x}}, v);
            v.lhs_desc = "1 * alpha";
            v.lhs = one_cell.str(vcarrier);
            v.rhs_desc = "must contain";
            v.rhs = vcarrier.name(x);
            report.add(v);
        }
    }
    if (vg.group) {
        const int theta = vg.group->zero;
        for (int x = 0; x < nv; ++x) {
            const ElemSet zero_cell = action.at(field.zero, x);
            if (!zero_cell.contains(theta)) {
                Violation v;
                v.axiom = "DEF2.7.v";
                mixed_binding({}, {{"alpha", x}}, v);
                v.lhs_desc = "0 * alpha";
                v.lhs = zero_cell.str(vcarrier);
                v.rhs_desc = "must contain";
                v.rhs = vcarrier.name(theta);
                report.add(v);
            }
        }
        const ElemSet zt = action.at(field.zero, theta);
        if (zt != ElemSet::single(nv, theta)) {
            Violation v;
            v.axiom = "DEF2.7.v";
            mixed_binding({}, {{"alpha", theta}}, v);
            v.lhs_desc = "0 * theta";
            v.lhs = zt.str(vcarrier);
            v.rhs_desc = "{theta}";
            v.rhs = ElemSet::single(nv, theta).str(vcarrier);
            report.add(v);
        }
    }

    report.sort();
    HvsResult out{std::move(report), std::nullopt};
    if (out.report.ok())
        out.space = HypervectorSpace{field,          vcarrier, vadd, action, vg.group->zero,
                                     std::move(vg.group->neg)};
    return out;
}

}  // namespace hyperfuzz
