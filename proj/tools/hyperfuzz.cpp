// Command-line front end: check | fuzz-check | combine | preimage | theorem | search.
// Exit codes: 0 pass, 1 audit/content failure, 2 theorem counterexample or
// refutation, 64 usage error (bad flags or unreadable top-level paths).

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperfuzz/family.hpp"
#include "hyperfuzz/fixtures.hpp"
#include "hyperfuzz/ifcheck.hpp"
#include "hyperfuzz/io.hpp"
#include "hyperfuzz/lintrans.hpp"
#include "hyperfuzz/modelfind.hpp"

namespace hf = hyperfuzz;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitAuditFail = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitUsage = 64;

std::uint64_t sub_seed(std::uint64_t base, std::uint64_t k) {
    return base * 0x9E3779B97F4A7C15ull + (k + 1) * 0xD1B54A32D192ED03ull;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return seed * 1000003ull + trial;
}

const char* kind_name(hf::StructureKind k) {
    switch (k) {
        case hf::StructureKind::Hypergroup: return "hypergroup";
        case hf::StructureKind::Hyperfield: return "hyperfield";
        case hf::StructureKind::HypervectorSpace: return "hypervectorspace";
    }
    return "?";
}

void print_report(const hf::Report& r) {
    for (const hf::Violation& v : r.violations()) std::cout << v.str() << "\n";
    if (r.truncated()) std::cout << "(violation cap reached, list truncated)\n";
}

// Loads a structure referenced from inside another file; a missing file there
// is malformed content, not a usage error.
hf::ParsedStructure parse_structure_ref(const std::string& referring, const std::string& resolved) {
    try {
        return hf::parse_structure_file(resolved);
    } catch (const hf::FileUnreadable&) {
        throw hf::ParseError(referring, 0, "references unreadable file " + resolved);
    }
}

std::string certificate_records(const hf::Report& failure, const std::string& convention,
                                std::uint64_t seed) {
    std::string out;
    for (const hf::Violation& v : failure.violations()) {
        out += "axiom=" + v.axiom + " | witness=" + v.witness_names + " | lhs=" + v.lhs +
               " | rhs=" + v.rhs + " | convention=" + convention +
               " | seed=" + std::to_string(seed) + "\n";
    }
    return out;
}

// ---------------------------------------------------------------- check ----

int cmd_check(const std::string& path) {
    const hf::ParsedStructure p = hf::parse_structure_file(path);
    const hf::StructureAudit a = hf::audit_structure(p);
    if (a.report.ok()) {
        std::cout << "PASS " << path << " (" << kind_name(p.kind) << ")\n";
        return kExitPass;
    }
    print_report(a.report);
    std::cout << "FAIL " << path << " (" << kind_name(p.kind) << "): "
              << a.report.violations().size() << " violation(s)\n";
    return kExitAuditFail;
}

// ----------------------------------------------------------- fuzz-check ----

int cmd_fuzz_check(const std::string& structure_path, const std::string& overlay_path,
                   const std::string& field_overlay_path) {
    const hf::ParsedStructure p = hf::parse_structure_file(structure_path);
    const hf::StructureAudit a = hf::audit_structure(p);
    if (!a.report.ok()) {
        std::cout << "structure failed validation:\n";
        print_report(a.report);
        return kExitAuditFail;
    }

    if (p.kind == hf::StructureKind::Hypergroup) {
        std::cout << "fuzz-check needs a hyperfield or hypervectorspace structure\n";
        return kExitAuditFail;
    }

    const hf::OverlayDoc od = hf::parse_overlay_file(overlay_path);

    if (p.kind == hf::StructureKind::Hyperfield) {
        if (!field_overlay_path.empty()) {
            std::cerr << "--field-overlay only applies to hypervectorspace structures\n";
            return kExitUsage;
        }
        const hf::Ifs overlay = hf::bind_overlay(od, p.carrier);
        hf::Report r = hf::check_if_hyperfield(*a.field, overlay);
        if (r.ok()) {
            std::cout << "PASS " << overlay_path << " over " << structure_path << "\n";
            return kExitPass;
        }
        print_report(r);
        std::cout << "FAIL " << overlay_path << " over " << structure_path << ": "
                  << r.violations().size() << " violation(s)\n";
        return kExitAuditFail;
    }

    // Without --field-overlay the audit runs against the crisp field overlay
    // (mu identically 1, nu identically 0), which is valid over every
    // hyperfield and reduces the mixed conditions to pure constraints on B.
    hf::Ifs field_overlay =
        hf::Ifs::constant(a.space->field.carrier.size(), hf::Degree::one(), hf::Degree::zero());
    if (!field_overlay_path.empty()) {
        const hf::OverlayDoc ad = hf::parse_overlay_file(field_overlay_path);
        field_overlay = hf::bind_overlay(ad, a.space->field.carrier);
    }
    hf::Report field_report = hf::check_if_hyperfield(a.space->field, field_overlay);
    if (!field_report.ok()) {
        std::cout << "field overlay failed its audit (precondition):\n";
        print_report(field_report);
        return kExitAuditFail;
    }
    const hf::Ifs overlay = hf::bind_overlay(od, p.carrier);
    hf::Report r = hf::check_if_hvs(*a.space, field_overlay, overlay);
    if (r.ok()) {
        std::cout << "PASS " << overlay_path << " over " << structure_path << "\n";
        return kExitPass;
    }
    print_report(r);
    std::cout << "FAIL " << overlay_path << " over " << structure_path << ": "
              << r.violations().size() << " violation(s)\n";
    return kExitAuditFail;
}

// -------------------------------------------------------------- combine ----

int cmd_combine(const std::string& op_str, const std::string& conv_str,
                const std::vector<std::string>& overlay_paths, const std::string& out_path) {
    const hf::FamilyOp op = op_str == "intersect" ? hf::FamilyOp::Intersect : hf::FamilyOp::Union;
    const hf::Convention conv =
        conv_str == "paper" ? hf::Convention::Paper : hf::Convention::Standard;

    std::vector<hf::OverlayDoc> docs;
    docs.reserve(overlay_paths.size());
    for (const std::string& path : overlay_paths) docs.push_back(hf::parse_overlay_file(path));
    for (std::size_t i = 1; i < docs.size(); ++i)
        if (docs[i].over_resolved != docs[0].over_resolved)
            throw hf::ParseError(docs[i].source_path, 0,
                                 "overlays reference different structures (" +
                                     docs[i].over_resolved + " vs " + docs[0].over_resolved + ")");

    const hf::ParsedStructure target =
        parse_structure_ref(docs[0].source_path, docs[0].over_resolved);
    std::vector<hf::Ifs> overlays;
    overlays.reserve(docs.size());
    for (const hf::OverlayDoc& d : docs) overlays.push_back(hf::bind_overlay(d, target.carrier));
    std::vector<const hf::Ifs*> ptrs;
    ptrs.reserve(overlays.size());
    for (const hf::Ifs& o : overlays) ptrs.push_back(&o);

    const hf::CombineResult r = hf::combine_values(target.carrier, ptrs, op, conv);
    if (!r.ifs) {
        std::cout << "combined overlay violates mu + nu <= 1 (" << hf::to_string(op) << ", "
                  << hf::to_string(conv) << " convention):\n";
        print_report(r.constraint);
        return kExitAuditFail;
    }
    hf::write_file_atomic(out_path,
                          hf::serialize_overlay(*r.ifs, target.carrier, docs[0].over_verbatim));
    std::cout << "wrote " << out_path << " (" << hf::to_string(op) << ", " << hf::to_string(conv)
              << " convention, " << overlays.size() << " member(s))\n";
    return kExitPass;
}

// ------------------------------------------------------------- preimage ----

int cmd_preimage(const std::string& map_path, const std::string& overlay_path,
                 const std::string& out_path) {
    const hf::MapDoc md = hf::parse_map_file(map_path);
    const hf::ParsedStructure sp = parse_structure_ref(map_path, md.source_resolved);
    const hf::ParsedStructure tp = parse_structure_ref(map_path, md.target_resolved);
    if (sp.kind != hf::StructureKind::HypervectorSpace ||
        tp.kind != hf::StructureKind::HypervectorSpace)
        throw hf::ParseError(map_path, 0, "source and target must be hypervectorspace files");
    const hf::StructureAudit sa = hf::audit_structure(sp);
    const hf::StructureAudit ta = hf::audit_structure(tp);
    if (!sa.space) {
        std::cout << "source space failed validation:\n";
        print_report(sa.report);
        return kExitAuditFail;
    }
    if (!ta.space) {
        std::cout << "target space failed validation:\n";
        print_report(ta.report);
        return kExitAuditFail;
    }

    const std::vector<int> table = hf::bind_map(md, sa.space->vcarrier, ta.space->vcarrier);
    const hf::LinearMap t{&*sa.space, &*ta.space, table};
    hf::Report lr = hf::check_linear(t);
    if (!lr.ok()) {
        std::cout << "map failed the linearity audit:\n";
        print_report(lr);
        return kExitAuditFail;
    }

    const hf::OverlayDoc od = hf::parse_overlay_file(overlay_path);
    const hf::Ifs b = hf::bind_overlay(od, ta.space->vcarrier);
    const hf::Ifs pre = hf::preimage_ifs(t, b);
    hf::write_file_atomic(out_path,
                          hf::serialize_overlay(pre, sa.space->vcarrier, md.source_verbatim));
    std::cout << "wrote " << out_path << "\n";
    return kExitPass;
}

// -------------------------------------------------------------- theorem ----

struct TheoremArgs {
    std::string id;
    long trials = 500;
    std::uint64_t seed = 1;
    int grid = 8;
    std::string convention = "paper";
    bool sweep = false;
    std::string out;
};

// Writes the self-contained artifact set next to the certificate so the
// verdict replays through fuzz-check / combine without rebuilding anything.
struct ArtifactWriter {
    std::string base;

    std::string file_name(const std::string& suffix) const {
        const std::size_t slash = base.rfind('/');
        return (slash == std::string::npos ? base : base.substr(slash + 1)) + suffix;
    }

    std::string write_space(const hf::HypervectorSpace& space) const {
        hf::write_file_atomic(base + ".field.hs", hf::serialize_structure(space.field));
        hf::write_file_atomic(base + ".space.hs",
                              hf::serialize_structure(space, file_name(".field.hs")));
        return base + ".space.hs";
    }

    std::string write_overlay(const std::string& suffix, const hf::Ifs& ifs,
                              const hf::Carrier& carrier, const std::string& over) const {
        hf::write_file_atomic(base + suffix, hf::serialize_overlay(ifs, carrier, over));
        return base + suffix;
    }
};

int cmd_theorem_35(const TheoremArgs& args) {
    const hf::HypervectorSpace kk = hf::fixtures::k_over_k();
    const hf::HypervectorSpace plane = hf::fixtures::gf2_plane();

    long agree = 0;
    bool refuted = false;
    std::string cert;
    ArtifactWriter artifacts{args.out};

    auto record_refutation = [&](const hf::HypervectorSpace& sp, const hf::Ifs& a, const hf::Ifs& b,
                                 const hf::EquivalenceRecord& eq, const std::string& origin) {
        refuted = true;
        if (!cert.empty()) return;
        cert = "; hyperfuzz certificate\n; id: 3.5\n; origin: " + origin +
               "\n; verdict: refutation\n; eight-condition audit passed: " +
               (eq.eight ? "yes" : "no") +
               "\n; four-condition audit passed: " + (eq.four ? "yes" : "no") + "\n";
        const std::string space_file = artifacts.write_space(sp);
        artifacts.write_overlay(".A.ifs", a, sp.field.carrier, artifacts.file_name(".field.hs"));
        artifacts.write_overlay(".B.ifs", b, sp.vcarrier, artifacts.file_name(".space.hs"));
        cert += "; replay: hyperfuzz fuzz-check " + space_file + " " + args.out +
                ".B.ifs --field-overlay " + args.out + ".A.ifs\n";
        cert += certificate_records(eq.eight ? eq.four_report : eq.eight_report, "n/a", args.seed);
    };

    for (long t = 0; t < args.trials; ++t) {
        const hf::HypervectorSpace& sp = (t % 2 == 0) ? kk : plane;
        const std::uint64_t base = trial_seed(args.seed, static_cast<std::uint64_t>(t));
        const hf::Ifs a = hf::random_overlay(sp.field, args.grid, sub_seed(base, 1));
        const hf::Ifs b = hf::random_overlay(sp, a, args.grid, sub_seed(base, 2));
        const hf::EquivalenceRecord eq = hf::equivalence_oracle(sp, a, b);
        if (eq.agree) ++agree;
        else record_refutation(sp, a, b, eq, "random trial " + std::to_string(t));
    }
    std::cout << "theorem 3.5 random: " << agree << "/" << args.trials << " agree\n";

    if (args.sweep) {
        std::vector<std::pair<hf::Degree, hf::Degree>> pairs;
        const int g = 4;
        for (int mn = 0; mn <= g; ++mn)
            for (int nn = 0; nn + mn <= g; ++nn) pairs.emplace_back(hf::Degree(mn, g), hf::Degree(nn, g));
        long total = 0, sweep_agree = 0, refutations = 0;
        for (const auto& [mu0, nu0] : pairs)
            for (const auto& [mu1, nu1] : pairs) {
                const hf::Ifs a({mu0, mu1}, {nu0, nu1});
                if (!hf::check_if_hyperfield(kk.field, a, 1).ok()) continue;
                for (const auto& [bm0, bn0] : pairs)
                    for (const auto& [bm1, bn1] : pairs) {
                        const hf::Ifs b({bm0, bm1}, {bn0, bn1});
                        const hf::EquivalenceRecord eq = hf::equivalence_oracle(kk, a, b);
                        ++total;
                        if (eq.agree) ++sweep_agree;
                        else {
                            ++refutations;
                            record_refutation(kk, a, b, eq,
                                              "exhaustive sweep at grid " + std::to_string(g));
                        }
                    }
            }
        std::cout << "theorem 3.5 sweep (grid 4): " << sweep_agree << "/" << total << " agree, "
                  << refutations << " refutation(s)\n";
    }

    if (refuted) {
        hf::write_file_atomic(args.out, cert);
        std::cout << "refutation certificate: " << args.out << "\n";
        return kExitCounterexample;
    }
    return kExitPass;
}

int cmd_theorem_closure(const TheoremArgs& args, hf::FamilyOp op) {
    const hf::HypervectorSpace kk = hf::fixtures::k_over_k();
    const hf::Ifs a = hf::fixtures::worked_field_overlay();
    const hf::Convention conv =
        args.convention == "paper" ? hf::Convention::Paper : hf::Convention::Standard;

    long verified = 0, counterexamples = 0;
    bool wrote = false;
    ArtifactWriter artifacts{args.out};

    for (long t = 0; t < args.trials; ++t) {
        const std::uint64_t base = trial_seed(args.seed, static_cast<std::uint64_t>(t));
        const int k = 1 + static_cast<int>(hf::Rng(sub_seed(base, 0)).below(3));
        hf::OverlayFamily family{&kk, a, {}};
        for (int i = 0; i < k; ++i)
            family.members.push_back(
                hf::random_overlay(kk, a, args.grid, sub_seed(base, 1 + static_cast<std::uint64_t>(i))));
        const hf::TheoremVerdict v = hf::closure_oracle(family, op, conv);
        if (v.status == hf::TheoremVerdict::Status::Verified) {
            ++verified;
            continue;
        }
        if (v.status == hf::TheoremVerdict::Status::PreconditionFailed) {
            std::cout << "unexpected precondition failure at trial " << t << ":\n";
            print_report(v.failure);
            return kExitAuditFail;
        }
        ++counterexamples;
        if (wrote) continue;
        wrote = true;
        std::string cert = "; hyperfuzz certificate\n; id: " + args.id + "\n; op: " +
                           hf::to_string(op) + "\n; convention: " + hf::to_string(conv) +
                           "\n; seed: " + std::to_string(args.seed) + "\n; grid: " +
                           std::to_string(args.grid) + "\n; trial: " + std::to_string(t) +
                           "\n; verdict: counterexample\n";
        const std::string space_file = artifacts.write_space(kk);
        artifacts.write_overlay(".A.ifs", a, kk.field.carrier, artifacts.file_name(".field.hs"));
        std::string member_list;
        for (std::size_t i = 0; i < family.members.size(); ++i) {
            const std::string suffix = ".member-" + std::to_string(i + 1) + ".ifs";
            artifacts.write_overlay(suffix, family.members[i], kk.vcarrier,
                                    artifacts.file_name(".space.hs"));
            member_list += " " + args.out + suffix;
        }
        const bool valid_combined = !v.failure.has_axiom("DEF2.9");
        if (valid_combined) {
            artifacts.write_overlay(".B.ifs", hf::Ifs(v.counterexample.mu, v.counterexample.nu),
                                    kk.vcarrier, artifacts.file_name(".space.hs"));
            cert += "; replay: hyperfuzz fuzz-check " + space_file + " " + args.out +
                    ".B.ifs --field-overlay " + args.out + ".A.ifs\n";
        } else {
            cert += "; combined values violate mu + nu <= 1; replay: hyperfuzz combine --op " +
                    std::string(hf::to_string(op)) + " --convention " + hf::to_string(conv) +
                    " --out /tmp/replay.ifs" + member_list + "\n";
        }
        cert += certificate_records(v.failure, hf::to_string(conv), args.seed);
        hf::write_file_atomic(args.out, cert);
    }

    std::cout << "theorem " << args.id << " (" << hf::to_string(op) << ", " << hf::to_string(conv)
              << "): verified " << verified << "/" << args.trials << ", counterexamples "
              << counterexamples << "/" << args.trials << "\n";
    if (counterexamples) {
        std::cout << "counterexample certificate: " << args.out << "\n";
        return kExitCounterexample;
    }
    return kExitPass;
}

int cmd_theorem_42(const TheoremArgs& args) {
    const hf::HypervectorSpace kk = hf::fixtures::k_over_k();
    const hf::HypervectorSpace plane = hf::fixtures::gf2_plane();
    const std::vector<const hf::HypervectorSpace*> spaces = {&kk, &plane};

    long verified = 0, counterexamples = 0, total = 0, map_count = 0;
    bool wrote = false;
    ArtifactWriter artifacts{args.out};

    for (const hf::HypervectorSpace* v : spaces)
        for (const hf::HypervectorSpace* w : spaces) {
            if (!hf::same_field(v->field, w->field)) continue;
            const std::vector<hf::LinearMap> maps = hf::enumerate_linear_maps(*v, *w);
            for (std::size_t mi = 0; mi < maps.size(); ++mi) {
                ++map_count;
                for (long t = 0; t < args.trials; ++t) {
                    const std::uint64_t base =
                        sub_seed(trial_seed(args.seed, static_cast<std::uint64_t>(t)),
                                 static_cast<std::uint64_t>(map_count));
                    const hf::Ifs a = hf::random_overlay(w->field, args.grid, sub_seed(base, 1));
                    const hf::Ifs b = hf::random_overlay(*w, a, args.grid, sub_seed(base, 2));
                    const hf::TheoremVerdict verdict = hf::theorem_4_2_oracle(maps[mi], a, b);
                    ++total;
                    if (verdict.status == hf::TheoremVerdict::Status::Verified) {
                        ++verified;
                        continue;
                    }
                    if (verdict.status == hf::TheoremVerdict::Status::PreconditionFailed) {
                        std::cout << "unexpected precondition failure (map " << map_count
                                  << ", trial " << t << "):\n";
                        print_report(verdict.failure);
                        return kExitAuditFail;
                    }
                    ++counterexamples;
                    if (wrote) continue;
                    wrote = true;
                    hf::write_file_atomic(args.out + ".field.hs",
                                          hf::serialize_structure(w->field));
                    hf::write_file_atomic(
                        args.out + ".source.hs",
                        hf::serialize_structure(*v, artifacts.file_name(".field.hs")));
                    hf::write_file_atomic(
                        args.out + ".target.hs",
                        hf::serialize_structure(*w, artifacts.file_name(".field.hs")));
                    hf::write_file_atomic(
                        args.out + ".map.map",
                        hf::serialize_map(v->vcarrier, w->vcarrier, maps[mi].map,
                                          artifacts.file_name(".source.hs"),
                                          artifacts.file_name(".target.hs")));
                    artifacts.write_overlay(".A.ifs", a, w->field.carrier,
                                            artifacts.file_name(".field.hs"));
                    artifacts.write_overlay(".B.ifs", b, w->vcarrier,
                                            artifacts.file_name(".target.hs"));
                    artifacts.write_overlay(".preimage.ifs", hf::preimage_ifs(maps[mi], b),
                                            v->vcarrier, artifacts.file_name(".source.hs"));
                    std::string cert = "; hyperfuzz certificate\n; id: 4.2\n; seed: " +
                                       std::to_string(args.seed) + "\n; grid: " +
                                       std::to_string(args.grid) + "\n; map: " +
                                       std::to_string(map_count) + "\n; trial: " +
                                       std::to_string(t) + "\n; verdict: counterexample\n";
                    cert += "; replay: hyperfuzz preimage --map " + args.out + ".map.map --overlay " +
                            args.out + ".B.ifs --out " + args.out + ".replay.ifs\n";
                    cert += "; then: hyperfuzz fuzz-check " + args.out + ".source.hs " + args.out +
                            ".replay.ifs --field-overlay " + args.out + ".A.ifs\n";
                    cert += certificate_records(verdict.failure, "n/a", args.seed);
                    hf::write_file_atomic(args.out, cert);
                }
            }
        }

    std::cout << "theorem 4.2: verified " << verified << "/" << total << " over " << map_count
              << " map(s)\n";
    if (counterexamples) {
        std::cout << "counterexample certificate: " << args.out << "\n";
        return kExitCounterexample;
    }
    return kExitPass;
}

int cmd_theorem(const TheoremArgs& args) {
    if (args.id == "3.5") return cmd_theorem_35(args);
    if (args.id == "3.7") return cmd_theorem_closure(args, hf::FamilyOp::Intersect);
    if (args.id == "3.8") return cmd_theorem_closure(args, hf::FamilyOp::Union);
    return cmd_theorem_42(args);
}

// --------------------------------------------------------------- search ----

int cmd_search(const std::string& kind_str, int size, std::uint64_t budget, bool commutative,
               const std::string& field_path, int workers, const std::string& out_dir) {
    hf::SearchSpec spec;
    spec.size = size;
    spec.budget = budget;
    spec.commutative = commutative;
    spec.workers = workers;
    if (kind_str == "hypergroup") {
        spec.kind = hf::SearchSpec::Kind::Hypergroup;
    } else if (kind_str == "hyperfield") {
        spec.kind = hf::SearchSpec::Kind::Hyperfield;
    } else {
        spec.kind = hf::SearchSpec::Kind::HypervectorSpace;
        if (field_path.empty()) {
            std::cerr << "search --kind hypervectorspace needs --field\n";
            return kExitUsage;
        }
        const hf::ParsedStructure fp = hf::parse_structure_file(field_path);
        if (fp.kind != hf::StructureKind::Hyperfield)
            throw hf::ParseError(field_path, 0, "--field must reference a hyperfield file");
        const hf::StructureAudit fa = hf::audit_structure(fp);
        if (!fa.field) {
            std::cout << "scalar field failed validation:\n";
            print_report(fa.report);
            return kExitAuditFail;
        }
        spec.field = fa.field;
    }

    const hf::SearchResult result = hf::enumerate_structures(spec);
    const std::string field_abs =
        field_path.empty() ? "" : std::filesystem::absolute(field_path).string();
    int idx = 0;
    for (const hf::FoundStructure& f : result.structures) {
        ++idx;
        const std::string path =
            out_dir + "/" + kind_str + "-n" + std::to_string(size) + "-" + std::to_string(idx) + ".hs";
        std::string text;
        if (auto* g = std::get_if<hf::Hypergroup>(&f.value)) text = hf::serialize_structure(*g);
        else if (auto* fd = std::get_if<hf::Hyperfield>(&f.value))
            text = hf::serialize_structure(*fd);
        else
            text = hf::serialize_structure(std::get<hf::HypervectorSpace>(f.value), field_abs);
        hf::write_file_atomic(path, text);
        std::cout << "wrote " << path << "\n";
    }
    std::cout << "search: " << result.structures.size() << " structure(s), "
              << (result.complete ? "complete" : "partial (budget exhausted)")
              << ", nodes=" << result.nodes << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite hyperstructure and intuitionistic fuzzy overlay auditor"};
    app.require_subcommand(1);

    // check
    std::string check_path;
    CLI::App* check = app.add_subcommand("check", "audit a structure file");
    check->add_option("structure", check_path, "structure file (.hs)")->required();

    // fuzz-check
    std::string fc_structure, fc_overlay, fc_field_overlay;
    CLI::App* fuzz = app.add_subcommand("fuzz-check", "audit an overlay against a structure");
    fuzz->add_option("structure", fc_structure, "structure file (.hs)")->required();
    fuzz->add_option("overlay", fc_overlay, "overlay file (.ifs)")->required();
    fuzz->add_option("--field-overlay", fc_field_overlay,
                     "field overlay (.ifs), required for hypervectorspace structures");

    // combine
    std::string cb_op, cb_conv = "paper", cb_out;
    std::vector<std::string> cb_overlays;
    CLI::App* combine = app.add_subcommand("combine", "combine overlay files pointwise");
    combine->add_option("--op", cb_op, "intersect | union")
        ->required()
        ->check(CLI::IsMember({"intersect", "union"}));
    combine->add_option("--convention", cb_conv, "paper | standard")
        ->check(CLI::IsMember({"paper", "standard"}));
    combine->add_option("--out", cb_out, "output overlay path")->required();
    combine->add_option("overlays", cb_overlays, "overlay files")->required()->expected(-1);

    // preimage
    std::string pi_map, pi_overlay, pi_out;
    CLI::App* preimage = app.add_subcommand("preimage", "pull an overlay back through a linear map");
    preimage->add_option("--map", pi_map, "linear map file (.map)")->required();
    preimage->add_option("--overlay", pi_overlay, "overlay over the target space")->required();
    preimage->add_option("--out", pi_out, "output overlay path")->required();

    // theorem
    TheoremArgs th;
    CLI::App* theorem = app.add_subcommand("theorem", "run a theorem oracle on fixtures");
    theorem->add_option("--id", th.id, "3.5 | 3.7 | 3.8 | 4.2")
        ->required()
        ->check(CLI::IsMember({"3.5", "3.7", "3.8", "4.2"}));
    theorem->add_option("--trials", th.trials, "seeded trials (default 500)");
    theorem->add_option("--seed", th.seed, "base seed (default 1)");
    theorem->add_option("--grid", th.grid, "degree grid denominator (default 8)");
    theorem->add_option("--convention", th.convention, "paper | standard (3.7/3.8)")
        ->check(CLI::IsMember({"paper", "standard"}));
    theorem->add_flag("--sweep", th.sweep, "3.5 only: add the exhaustive grid-4 sweep");
    theorem->add_option("--out", th.out, "certificate path");

    // search
    std::string se_kind, se_field, se_out_dir = ".";
    int se_size = 2, se_workers = 1;
    std::uint64_t se_budget = 1000000;
    bool se_commutative = false;
    CLI::App* search = app.add_subcommand("search", "enumerate structures of a kind and size");
    search->add_option("--kind", se_kind, "hypergroup | hyperfield | hypervectorspace")
        ->required()
        ->check(CLI::IsMember({"hypergroup", "hyperfield", "hypervectorspace"}));
    search->add_option("--size", se_size, "carrier size")->required();
    search->add_option("--budget", se_budget, "node budget (default 10^6)");
    search->add_flag("--commutative", se_commutative, "restrict hypergroups to commutative tables");
    search->add_option("--field", se_field, "scalar hyperfield file (hypervectorspace kind)");
    search->add_option("--workers", se_workers, "worker threads (default 1)");
    search->add_option("--out-dir", se_out_dir, "output directory (default .)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(check)) return cmd_check(check_path);
        if (app.got_subcommand(fuzz)) return cmd_fuzz_check(fc_structure, fc_overlay, fc_field_overlay);
        if (app.got_subcommand(combine)) return cmd_combine(cb_op, cb_conv, cb_overlays, cb_out);
        if (app.got_subcommand(preimage)) return cmd_preimage(pi_map, pi_overlay, pi_out);
        if (app.got_subcommand(theorem)) {
            if (th.out.empty()) {
                th.out = "theorem-" + th.id;
                if (th.id == "3.7" || th.id == "3.8") th.out += "-" + th.convention;
                th.out += ".cert";
            }
            return cmd_theorem(th);
        }
        if (app.got_subcommand(search))
            return cmd_search(se_kind, se_size, se_budget, se_commutative, se_field, se_workers,
                              se_out_dir);
    } catch (const hf::FileUnreadable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hf::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAuditFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAuditFail;
    }
    return kExitUsage;
}
