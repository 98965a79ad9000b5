#include "hyperfuzz/family.hpp"

#include <stdexcept>

namespace hyperfuzz {

const char* to_string(FamilyOp op) { return op == FamilyOp::Intersect ? "intersect" : "union"; }
const char* to_string(Convention c) { return c == Convention::Paper ? "paper" : "standard"; }

CombineResult combine_values(const Carrier& carrier, const std::vector<const Ifs*>& members,
                             FamilyOp op, Convention conv) {
    if (members.empty()) throw std::invalid_argument("combine: empty family");
    const int n = members.front()->size();
    for (const Ifs* m : members)
        if (m->size() != n) throw std::invalid_argument("combine: member size mismatch");
    if (carrier.size() != n) throw std::invalid_argument("combine: carrier size mismatch");

    // mu follows the family operation; nu follows it too under the paper
    // convention and is dualized under the standard one.
    const bool mu_max = op == FamilyOp::Union;
    const bool nu_max = conv == Convention::Paper ? mu_max : !mu_max;

    CombineResult out;
    out.values.mu.reserve(static_cast<std::size_t>(n));
    out.values.nu.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        Degree m = members.front()->mu(x);
        Degree v = members.front()->nu(x);
        for (std::size_t i = 1; i < members.size(); ++i) {
            m = mu_max ? max(m, members[i]->mu(x)) : min(m, members[i]->mu(x));
            v = nu_max ? max(v, members[i]->nu(x)) : min(v, members[i]->nu(x));
        }
        out.values.mu.push_back(m);
        out.values.nu.push_back(v);
    }

    for (int x = 0; x < n; ++x) {
        if (out.values.mu[static_cast<std::size_t>(x)] +
                out.values.nu[static_cast<std::size_t>(x)] >
            Degree::one()) {
            Violation viol;
            viol.axiom = "DEF2.9";
            viol.witness = {{"x", x}};
            viol.witness_names = "x=" + carrier.name(x);
            viol.lhs_desc = "mu(x) + nu(x)";
            viol.lhs = (out.values.mu[static_cast<std::size_t>(x)] +
                        out.values.nu[static_cast<std::size_t>(x)])
                           .str();
            viol.rhs_desc = "bound";
            viol.rhs = "1";
            out.constraint.add(viol);
        }
    }
    out.constraint.sort();
    if (out.constraint.ok()) out.ifs = Ifs(out.values.mu, out.values.nu);
    return out;
}

CombineResult combine_family(const OverlayFamily& family, FamilyOp op, Convention conv) {
    if (!family.space) throw std::invalid_argument("combine_family: no space");
    std::vector<const Ifs*> members;
    members.reserve(family.members.size());
    for (const Ifs& m : family.members) members.push_back(&m);
    return combine_values(family.space->vcarrier, members, op, conv);
}

TheoremVerdict closure_oracle(const OverlayFamily& family, FamilyOp op, Convention conv) {
    TheoremVerdict verdict;
    verdict.op = op;
    verdict.convention = conv;
    if (!family.space) throw std::invalid_argument("closure_oracle: no space");
    const HypervectorSpace& v = *family.space;

    Report field_report = check_if_hyperfield(v.field, family.field_overlay);
    if (!field_report.ok()) {
        verdict.status = TheoremVerdict::Status::PreconditionFailed;
        verdict.failure = std::move(field_report);
        return verdict;
    }
    for (const Ifs& m : family.members) {
        Report member_report = check_if_hvs(v, family.field_overlay, m);
        if (!member_report.ok()) {
            verdict.status = TheoremVerdict::Status::PreconditionFailed;
            verdict.failure = std::move(member_report);
            return verdict;
        }
    }

    CombineResult combined = combine_family(family, op, conv);
    verdict.counterexample = combined.values;
    if (!combined.ifs) {
        verdict.status = TheoremVerdict::Status::Counterexample;
        verdict.failure = std::move(combined.constraint);
        return verdict;
    }

    Report audit = check_if_hvs(v, family.field_overlay, *combined.ifs);
    if (!audit.ok()) {
        verdict.status = TheoremVerdict::Status::Counterexample;
        verdict.failure = std::move(audit);
        return verdict;
    }

    const long nv = v.vcarrier.size();
    const long nf = v.field.carrier.size();
    verdict.status = TheoremVerdict::Status::Verified;
    verdict.instances = 2 * nv * nv + 2 * nv + 2 * nf * nv + 2;
    return verdict;
}

Ifs shift_overlay(const Ifs& b, const Degree& c) {
    if (!in_unit_interval(c)) throw std::invalid_argument("shift_overlay: shift outside [0,1]");
    std::vector<Degree> mu, nu;
    mu.reserve(static_cast<std::size_t>(b.size()));
    nu.reserve(static_cast<std::size_t>(b.size()));
    for (int x = 0; x < b.size(); ++x) {
        mu.push_back(max(Degree::zero(), b.mu(x) - c));
        nu.push_back(min(Degree::one(), b.nu(x) + c));
    }
    return Ifs(std::move(mu), std::move(nu));
}

}  // namespace hyperfuzz
