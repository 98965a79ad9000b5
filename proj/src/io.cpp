#include "hyperfuzz/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace hyperfuzz {
namespace {

struct Line {
    int no = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> logical_lines(const std::string& text) {
    std::vector<Line> out;
    int no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string raw = text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
        pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
        ++no;
        const std::size_t comment = raw.find(';');
        if (comment != std::string::npos) raw.resize(comment);
        Line line;
        line.no = no;
        std::istringstream is(raw);
        std::string tok;
        while (is >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
        if (eol == std::string::npos) break;
    }
    return out;
}

std::int64_t parse_i64(const std::string& tok, const std::string& path, int line) {
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(tok.c_str(), &end, 10);
    if (tok.empty() || end != tok.c_str() + tok.size() || errno == ERANGE)
        throw ParseError(path, line, "malformed integer: " + tok);
    return v;
}

Degree parse_degree(const std::string& tok, const std::string& path, int line) {
    const std::size_t slash = tok.find('/');
    std::int64_t num, den = 1;
    if (slash == std::string::npos) {
        num = parse_i64(tok, path, line);
    } else {
        num = parse_i64(tok.substr(0, slash), path, line);
        den = parse_i64(tok.substr(slash + 1), path, line);
        if (den == 0) throw ParseError(path, line, "degree with zero denominator: " + tok);
    }
    Degree d(num, den);
    if (!in_unit_interval(d))
        throw ParseError(path, line, "degree outside [0,1]: " + tok);
    return d;
}

int resolve_name(const Carrier& c, const std::string& name, const std::string& path, int line,
                 const char* what) {
    if (auto i = c.index_of(name)) return *i;
    throw ParseError(path, line, std::string(what) + ": unknown element " + name);
}

struct RawCell {
    int line = 0;
    std::string a;
    std::string b;
    std::vector<std::string> rhs;
};

struct RawDoc {
    // header key -> (value tokens, line)
    std::map<std::string, std::pair<std::vector<std::string>, int>> headers;
    std::vector<RawCell> add, mul, act;
    int add_line = 0, mul_line = 0, act_line = 0;
};

const char* op_for_block(const std::string& block) {
    if (block == "hyperadd") return "#";
    if (block == "mul") return ".";
    return "*";
}

RawDoc parse_raw_structure(const std::string& path, const std::vector<Line>& lines,
                           const std::vector<std::string>& header_keys) {
    RawDoc doc;
    std::string block;
    for (const Line& line : lines) {
        const std::string& first = line.tokens[0];
        if (first == "hyperadd:" || first == "mul:" || first == "action:" || first == "map:" ||
            first == "mu:" || first == "nu:") {
            if (line.tokens.size() != 1)
                throw ParseError(path, line.no, "table label must stand alone: " + first);
            block = first.substr(0, first.size() - 1);
            int* mark = block == "hyperadd" ? &doc.add_line
                        : block == "mul"    ? &doc.mul_line
                                            : &doc.act_line;
            if (block != "hyperadd" && block != "mul" && block != "action")
                throw ParseError(path, line.no, "unexpected block in this file type: " + first);
            if (*mark) throw ParseError(path, line.no, "duplicate block: " + first);
            *mark = line.no;
            continue;
        }
        if (!first.empty() && first.back() == ':') {
            if (!block.empty())
                throw ParseError(path, line.no, "header after a table block: " + first);
            const std::string key = first.substr(0, first.size() - 1);
            bool known = false;
            for (const std::string& k : header_keys) known = known || k == key;
            if (!known) throw ParseError(path, line.no, "unknown header: " + first);
            if (doc.headers.count(key))
                throw ParseError(path, line.no, "duplicate header: " + first);
            if (line.tokens.size() < 2)
                throw ParseError(path, line.no, "header without a value: " + first);
            doc.headers[key] = {std::vector<std::string>(line.tokens.begin() + 1, line.tokens.end()),
                                line.no};
            continue;
        }
        if (block.empty())
            throw ParseError(path, line.no, "expected a header or table label, got: " + first);
        // cell line: a OP b = e...
        if (line.tokens.size() < 4 || line.tokens[3] != "=")
            throw ParseError(path, line.no, "malformed cell line (want: a " +
                                                std::string(op_for_block(block)) + " b = e ...)");
        const std::string& op = line.tokens[1];
        const bool op_ok = (block == "hyperadd" && (op == "#" || op == "+")) ||
                           (block == "mul" && op == ".") || (block == "action" && op == "*");
        if (!op_ok)
            throw ParseError(path, line.no, "operator " + op + " not valid in " + block + " block");
        RawCell cell;
        cell.line = line.no;
        cell.a = line.tokens[0];
        cell.b = line.tokens[2];
        cell.rhs.assign(line.tokens.begin() + 4, line.tokens.end());
        if (cell.rhs.empty())
            throw ParseError(path, line.no,
                             "empty right-hand side: cells must be nonempty sets");
        (block == "hyperadd" ? doc.add : block == "mul" ? doc.mul : doc.act)
            .push_back(std::move(cell));
    }
    return doc;
}

std::string header_value(const RawDoc& doc, const std::string& key) {
    std::string out;
    const auto& toks = doc.headers.at(key).first;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (i) out += " ";
        out += toks[i];
    }
    return out;
}

void require_header(const RawDoc& doc, const std::string& key, const std::string& path) {
    if (!doc.headers.count(key)) throw ParseError(path, 0, "missing header: " + key + ":");
}

void forbid_header(const RawDoc& doc, const std::string& key, const std::string& path,
                   const std::string& kind) {
    if (doc.headers.count(key))
        throw ParseError(path, doc.headers.at(key).second,
                         "header " + key + ": not allowed in a " + kind + " file");
}

HyperOp build_hyperop(const std::string& path, const Carrier& c, const std::vector<RawCell>& cells,
                      int block_line, bool symmetric) {
    const int n = c.size();
    std::vector<ElemSet> table(static_cast<std::size_t>(n) * n, ElemSet(n));
    std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
    for (const RawCell& cell : cells) {
        const int a = resolve_name(c, cell.a, path, cell.line, "hyperadd");
        const int b = resolve_name(c, cell.b, path, cell.line, "hyperadd");
        const std::size_t idx = static_cast<std::size_t>(a) * n + b;
        if (seen[idx])
            throw ParseError(path, cell.line, "duplicate cell " + cell.a + " # " + cell.b);
        seen[idx] = true;
        for (const std::string& name : cell.rhs)
            table[idx].insert(resolve_name(c, name, path, cell.line, "hyperadd"));
    }
    if (symmetric) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const std::size_t ab = static_cast<std::size_t>(a) * n + b;
                const std::size_t ba = static_cast<std::size_t>(b) * n + a;
                if (seen[ab] && !seen[ba]) {
                    table[ba] = table[ab];
                    seen[ba] = true;
                } else if (seen[ab] && seen[ba] && !(table[ab] == table[ba])) {
                    throw ParseError(path, 0,
                                     "symmetric: cells " + c.name(a) + " # " + c.name(b) + " and " +
                                         c.name(b) + " # " + c.name(a) + " differ");
                }
            }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!seen[static_cast<std::size_t>(a) * n + b])
                throw ParseError(path, block_line,
                                 "hyperadd: missing cell " + c.name(a) + " # " + c.name(b));
    return HyperOp(n, std::move(table));
}

BinOp build_binop(const std::string& path, const Carrier& c, const std::vector<RawCell>& cells,
                  int block_line) {
    const int n = c.size();
    std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
    for (const RawCell& cell : cells) {
        const int a = resolve_name(c, cell.a, path, cell.line, "mul");
        const int b = resolve_name(c, cell.b, path, cell.line, "mul");
        if (cell.rhs.size() != 1)
            throw ParseError(path, cell.line, "mul cells are single-valued");
        const std::size_t idx = static_cast<std::size_t>(a) * n + b;
        if (table[idx] >= 0)
            throw ParseError(path, cell.line, "duplicate cell " + cell.a + " . " + cell.b);
        table[idx] = resolve_name(c, cell.rhs[0], path, cell.line, "mul");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table[static_cast<std::size_t>(a) * n + b] < 0)
                throw ParseError(path, block_line,
                                 "mul: missing cell " + c.name(a) + " . " + c.name(b));
    return BinOp(n, std::move(table));
}

ScalarAction build_action(const std::string& path, const Carrier& scalars, const Carrier& vectors,
                          const std::vector<RawCell>& cells, int block_line) {
    const int nf = scalars.size();
    const int nv = vectors.size();
    std::vector<ElemSet> table(static_cast<std::size_t>(nf) * nv, ElemSet(nv));
    std::vector<bool> seen(static_cast<std::size_t>(nf) * nv, false);
    for (const RawCell& cell : cells) {
        const int a = resolve_name(scalars, cell.a, path, cell.line, "action (scalar)");
        const int x = resolve_name(vectors, cell.b, path, cell.line, "action (vector)");
        const std::size_t idx = static_cast<std::size_t>(a) * nv + x;
        if (seen[idx])
            throw ParseError(path, cell.line, "duplicate cell " + cell.a + " * " + cell.b);
        seen[idx] = true;
        for (const std::string& name : cell.rhs)
            table[idx].insert(resolve_name(vectors, name, path, cell.line, "action (vector)"));
    }
    for (int a = 0; a < nf; ++a)
        for (int x = 0; x < nv; ++x)
            if (!seen[static_cast<std::size_t>(a) * nv + x])
                throw ParseError(path, block_line, "action: missing cell " + scalars.name(a) +
                                                       " * " + vectors.name(x));
    return ScalarAction(nf, nv, std::move(table));
}

std::string names_line(const Carrier& c) {
    std::string out;
    for (int i = 0; i < c.size(); ++i) {
        if (i) out += " ";
        out += c.name(i);
    }
    return out;
}

std::string set_line(const Carrier& c, const ElemSet& s) {
    std::string out;
    bool first = true;
    for (int e : s) {
        if (!first) out += " ";
        out += c.name(e);
        first = false;
    }
    return out;
}

std::string hyperadd_block(const Carrier& c, const HyperOp& add) {
    std::string out = "hyperadd:\n";
    for (int a = 0; a < add.size(); ++a)
        for (int b = 0; b < add.size(); ++b)
            out += c.name(a) + " # " + c.name(b) + " = " + set_line(c, add.at(a, b)) + "\n";
    return out;
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileUnreadable(path);
    std::ostringstream os;
    os << in.rdbuf();
    if (in.bad()) throw FileUnreadable(path);
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write file: " + tmp);
        out << content;
        out.flush();
        if (!out) {
            std::remove(tmp.c_str());
            throw std::runtime_error("cannot write file: " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot replace file: " + path);
    }
}

std::string resolve_relative(const std::string& base_file, const std::string& ref) {
    if (!ref.empty() && ref.front() == '/') return ref;
    const std::size_t slash = base_file.rfind('/');
    if (slash == std::string::npos) return ref;
    return base_file.substr(0, slash + 1) + ref;
}

ParsedStructure parse_structure_file(const std::string& path) {
    const auto lines = logical_lines(read_file(path));
    const RawDoc doc =
        parse_raw_structure(path, lines, {"kind", "elements", "zero", "one", "field", "symmetric"});

    require_header(doc, "kind", path);
    const std::string kind_str = header_value(doc, "kind");
    StructureKind kind;
    if (kind_str == "hypergroup") kind = StructureKind::Hypergroup;
    else if (kind_str == "hyperfield") kind = StructureKind::Hyperfield;
    else if (kind_str == "hypervectorspace") kind = StructureKind::HypervectorSpace;
    else throw ParseError(path, doc.headers.at("kind").second, "unknown kind: " + kind_str);

    require_header(doc, "elements", path);
    Carrier carrier;
    try {
        carrier = Carrier(doc.headers.at("elements").first);
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, doc.headers.at("elements").second, e.what());
    }

    bool symmetric = false;
    if (doc.headers.count("symmetric")) {
        const std::string v = header_value(doc, "symmetric");
        if (v == "true") symmetric = true;
        else if (v == "false") symmetric = false;
        else
            throw ParseError(path, doc.headers.at("symmetric").second,
                             "symmetric: expected true or false, got " + v);
    }

    require_header(doc, "zero", path);
    const int declared_zero = resolve_name(carrier, header_value(doc, "zero"), path,
                                           doc.headers.at("zero").second, "zero");

    if (!doc.add_line) throw ParseError(path, 0, "missing hyperadd: block");
    const HyperOp add = build_hyperop(path, carrier, doc.add, doc.add_line, symmetric);

    ParsedStructure out;
    out.kind = kind;
    out.carrier = carrier;
    out.add = add;
    out.declared_zero = declared_zero;
    out.source_path = path;

    if (kind == StructureKind::Hypergroup) {
        forbid_header(doc, "one", path, "hypergroup");
        forbid_header(doc, "field", path, "hypergroup");
        if (doc.mul_line) throw ParseError(path, doc.mul_line, "mul block in a hypergroup file");
        if (doc.act_line) throw ParseError(path, doc.act_line, "action block in a hypergroup file");
        return out;
    }

    if (kind == StructureKind::Hyperfield) {
        forbid_header(doc, "field", path, "hyperfield");
        if (doc.act_line) throw ParseError(path, doc.act_line, "action block in a hyperfield file");
        require_header(doc, "one", path);
        out.declared_one = resolve_name(carrier, header_value(doc, "one"), path,
                                        doc.headers.at("one").second, "one");
        if (!doc.mul_line) throw ParseError(path, 0, "missing mul: block");
        out.mul = build_binop(path, carrier, doc.mul, doc.mul_line);
        return out;
    }

    // Hypervector space.
    forbid_header(doc, "one", path, "hypervectorspace");
    if (doc.mul_line) throw ParseError(path, doc.mul_line, "mul block in a hypervectorspace file");
    require_header(doc, "field", path);
    const int field_line = doc.headers.at("field").second;
    out.field_path_verbatim = header_value(doc, "field");
    const std::string field_path = resolve_relative(path, out.field_path_verbatim);
    ParsedStructure fp;
    try {
        fp = parse_structure_file(field_path);
    } catch (const FileUnreadable&) {
        throw ParseError(path, field_line, "field: cannot read referenced file " + field_path);
    }
    if (fp.kind != StructureKind::Hyperfield)
        throw ParseError(path, field_line, "field: referenced file is not a hyperfield");
    StructureAudit fa = audit_structure(fp);
    if (!fa.field)
        throw ParseError(path, field_line,
                         "field: referenced hyperfield failed validation: " +
                             fa.report.violations().front().str());
    out.field = std::move(fa.field);
    if (!doc.act_line) throw ParseError(path, 0, "missing action: block");
    out.action = build_action(path, out.field->carrier, carrier, doc.act, doc.act_line);
    return out;
}

StructureAudit audit_structure(const ParsedStructure& p, int cap) {
    StructureAudit out;
    out.report = Report(cap);

    auto decl_mismatch = [&](const char* axiom, const Carrier& c, int declared, int derived) {
        Violation v;
        v.axiom = axiom;
        v.witness = {{"declared", declared}, {"derived", derived}};
        v.witness_names = "declared=" + c.name(declared) + ", derived=" + c.name(derived);
        v.lhs_desc = "declared";
        v.lhs = c.name(declared);
        v.rhs_desc = "derived";
        v.rhs = c.name(derived);
        out.report.add(v);
    };

    switch (p.kind) {
        case StructureKind::Hypergroup: {
            HypergroupResult r = check_hypergroup(p.carrier, p.add, cap);
            out.report.merge(r.report);
            if (r.group && r.group->zero != p.declared_zero)
                decl_mismatch("DECL.zero", p.carrier, p.declared_zero, r.group->zero);
            if (out.report.ok()) out.group = r.group;
            break;
        }
        case StructureKind::Hyperfield: {
            HyperfieldResult r = check_hyperfield(p.carrier, p.add, *p.mul, cap);
            out.report.merge(r.report);
            if (r.field && r.field->zero != p.declared_zero)
                decl_mismatch("DECL.zero", p.carrier, p.declared_zero, r.field->zero);
            if (r.field && r.field->one != p.declared_one)
                decl_mismatch("DECL.one", p.carrier, p.declared_one, r.field->one);
            if (out.report.ok()) out.field = r.field;
            break;
        }
        case StructureKind::HypervectorSpace: {
            HvsResult r = check_hypervector_space(*p.field, p.carrier, p.add, *p.action, cap);
            out.report.merge(r.report);
            if (r.space && r.space->theta != p.declared_zero)
                decl_mismatch("DECL.theta", p.carrier, p.declared_zero, r.space->theta);
            if (out.report.ok()) out.space = r.space;
            break;
        }
    }
    out.report.sort();
    return out;
}

std::string serialize_structure(const Hypergroup& g) {
    std::string out = "kind: hypergroup\n";
    out += "elements: " + names_line(g.carrier) + "\n";
    out += "zero: " + g.carrier.name(g.zero) + "\n\n";
    out += hyperadd_block(g.carrier, g.add);
    return out;
}

std::string serialize_structure(const Hyperfield& f) {
    std::string out = "kind: hyperfield\n";
    out += "elements: " + names_line(f.carrier) + "\n";
    out += "zero: " + f.carrier.name(f.zero) + "\n";
    out += "one: " + f.carrier.name(f.one) + "\n\n";
    out += hyperadd_block(f.carrier, f.add);
    out += "\nmul:\n";
    for (int a = 0; a < f.carrier.size(); ++a)
        for (int b = 0; b < f.carrier.size(); ++b)
            out += f.carrier.name(a) + " . " + f.carrier.name(b) + " = " +
                   f.carrier.name(f.mul.at(a, b)) + "\n";
    return out;
}

std::string serialize_structure(const HypervectorSpace& v, const std::string& field_path) {
    std::string out = "kind: hypervectorspace\n";
    out += "elements: " + names_line(v.vcarrier) + "\n";
    out += "zero: " + v.vcarrier.name(v.theta) + "\n";
    out += "field: " + field_path + "\n\n";
    out += hyperadd_block(v.vcarrier, v.vadd);
    out += "\naction:\n";
    for (int a = 0; a < v.field.carrier.size(); ++a)
        for (int x = 0; x < v.vcarrier.size(); ++x)
            out += v.field.carrier.name(a) + " * " + v.vcarrier.name(x) + " = " +
                   set_line(v.vcarrier, v.action.at(a, x)) + "\n";
    return out;
}

OverlayDoc parse_overlay_file(const std::string& path) {
    const auto lines = logical_lines(read_file(path));
    OverlayDoc doc;
    doc.source_path = path;
    std::string block;
    bool saw_kind = false;
    int kind_line = 0;
    for (const Line& line : lines) {
        const std::string& first = line.tokens[0];
        if (first == "mu:" || first == "nu:") {
            if (line.tokens.size() != 1)
                throw ParseError(path, line.no, "table label must stand alone: " + first);
            block = first.substr(0, first.size() - 1);
            continue;
        }
        if (!first.empty() && first.back() == ':') {
            if (!block.empty())
                throw ParseError(path, line.no, "header after a degree block: " + first);
            const std::string key = first.substr(0, first.size() - 1);
            if (key == "kind") {
                if (line.tokens.size() != 2 || line.tokens[1] != "ifs")
                    throw ParseError(path, line.no, "kind: expected ifs");
                saw_kind = true;
                kind_line = line.no;
                continue;
            }
            if (key == "over") {
                if (line.tokens.size() != 2)
                    throw ParseError(path, line.no, "over: expected one path");
                if (!doc.over_verbatim.empty())
                    throw ParseError(path, line.no, "duplicate header: over:");
                doc.over_verbatim = line.tokens[1];
                continue;
            }
            throw ParseError(path, line.no, "unknown header: " + first);
        }
        if (block.empty())
            throw ParseError(path, line.no, "expected a header or degree block, got: " + first);
        if (line.tokens.size() != 3 || line.tokens[1] != "=")
            throw ParseError(path, line.no, "malformed degree line (want: name = p/q)");
        const Degree d = parse_degree(line.tokens[2], path, line.no);
        auto& entries = block == "mu" ? doc.mu_entries : doc.nu_entries;
        auto& entry_lines = block == "mu" ? doc.mu_lines : doc.nu_lines;
        for (const auto& e : entries)
            if (e.first == line.tokens[0])
                throw ParseError(path, line.no,
                                 "duplicate " + block + " entry for element " + line.tokens[0]);
        entries.emplace_back(line.tokens[0], d);
        entry_lines.push_back(line.no);
    }
    if (!saw_kind) throw ParseError(path, 0, "missing header: kind:");
    (void)kind_line;
    if (doc.over_verbatim.empty()) throw ParseError(path, 0, "missing header: over:");
    doc.over_resolved = resolve_relative(path, doc.over_verbatim);
    if (doc.mu_entries.empty()) throw ParseError(path, 0, "missing mu: block");
    if (doc.nu_entries.empty()) throw ParseError(path, 0, "missing nu: block");
    return doc;
}

Ifs bind_overlay(const OverlayDoc& doc, const Carrier& carrier) {
    const std::string& path = doc.source_path;
    const int n = carrier.size();
    std::vector<Degree> mu(static_cast<std::size_t>(n)), nu(static_cast<std::size_t>(n));
    std::vector<int> nu_line(static_cast<std::size_t>(n), 0);
    std::vector<bool> mu_seen(static_cast<std::size_t>(n), false),
        nu_seen(static_cast<std::size_t>(n), false);
    for (std::size_t i = 0; i < doc.mu_entries.size(); ++i) {
        const int e = resolve_name(carrier, doc.mu_entries[i].first, path, doc.mu_lines[i], "mu");
        mu[static_cast<std::size_t>(e)] = doc.mu_entries[i].second;
        mu_seen[static_cast<std::size_t>(e)] = true;
    }
    for (std::size_t i = 0; i < doc.nu_entries.size(); ++i) {
        const int e = resolve_name(carrier, doc.nu_entries[i].first, path, doc.nu_lines[i], "nu");
        nu[static_cast<std::size_t>(e)] = doc.nu_entries[i].second;
        nu_seen[static_cast<std::size_t>(e)] = true;
        nu_line[static_cast<std::size_t>(e)] = doc.nu_lines[i];
    }
    for (int e = 0; e < n; ++e) {
        if (!mu_seen[static_cast<std::size_t>(e)])
            throw ParseError(path, 0, "mu: missing element " + carrier.name(e));
        if (!nu_seen[static_cast<std::size_t>(e)])
            throw ParseError(path, 0, "nu: missing element " + carrier.name(e));
        if (mu[static_cast<std::size_t>(e)] + nu[static_cast<std::size_t>(e)] > Degree::one())
            throw ParseError(path, nu_line[static_cast<std::size_t>(e)],
                             "mu + nu exceeds 1 for element " + carrier.name(e) + " (" +
                                 mu[static_cast<std::size_t>(e)].str() + " + " +
                                 nu[static_cast<std::size_t>(e)].str() + ")");
    }
    return Ifs(std::move(mu), std::move(nu));
}

std::string serialize_overlay(const Ifs& ifs, const Carrier& carrier,
                              const std::string& over_verbatim) {
    std::string out = "kind: ifs\n";
    out += "over: " + over_verbatim + "\n\nmu:\n";
    for (int e = 0; e < carrier.size(); ++e)
        out += carrier.name(e) + " = " + ifs.mu(e).str() + "\n";
    out += "\nnu:\n";
    for (int e = 0; e < carrier.size(); ++e)
        out += carrier.name(e) + " = " + ifs.nu(e).str() + "\n";
    return out;
}

MapDoc parse_map_file(const std::string& path) {
    const auto lines = logical_lines(read_file(path));
    MapDoc doc;
    doc.source_path = path;
    bool saw_kind = false;
    bool in_map = false;
    for (const Line& line : lines) {
        const std::string& first = line.tokens[0];
        if (first == "map:") {
            if (line.tokens.size() != 1)
                throw ParseError(path, line.no, "table label must stand alone: map:");
            if (in_map) throw ParseError(path, line.no, "duplicate block: map:");
            in_map = true;
            continue;
        }
        if (!first.empty() && first.back() == ':') {
            if (in_map) throw ParseError(path, line.no, "header after the map block: " + first);
            const std::string key = first.substr(0, first.size() - 1);
            if (key == "kind") {
                if (line.tokens.size() != 2 || line.tokens[1] != "linearmap")
                    throw ParseError(path, line.no, "kind: expected linearmap");
                saw_kind = true;
                continue;
            }
            if (key == "source" || key == "target") {
                if (line.tokens.size() != 2)
                    throw ParseError(path, line.no, key + ": expected one path");
                std::string& slot = key == "source" ? doc.source_verbatim : doc.target_verbatim;
                if (!slot.empty()) throw ParseError(path, line.no, "duplicate header: " + first);
                slot = line.tokens[1];
                continue;
            }
            throw ParseError(path, line.no, "unknown header: " + first);
        }
        if (!in_map)
            throw ParseError(path, line.no, "expected a header or map block, got: " + first);
        if (line.tokens.size() != 3 || line.tokens[1] != "->")
            throw ParseError(path, line.no, "malformed map line (want: x -> y)");
        doc.entries.emplace_back(line.tokens[0], line.tokens[2]);
        doc.entry_lines.push_back(line.no);
    }
    if (!saw_kind) throw ParseError(path, 0, "missing header: kind:");
    if (doc.source_verbatim.empty()) throw ParseError(path, 0, "missing header: source:");
    if (doc.target_verbatim.empty()) throw ParseError(path, 0, "missing header: target:");
    doc.source_resolved = resolve_relative(path, doc.source_verbatim);
    doc.target_resolved = resolve_relative(path, doc.target_verbatim);
    if (doc.entries.empty()) throw ParseError(path, 0, "missing map: block");
    return doc;
}

std::vector<int> bind_map(const MapDoc& doc, const Carrier& source, const Carrier& target) {
    const std::string& path = doc.source_path;
    std::vector<int> map(static_cast<std::size_t>(source.size()), -1);
    for (std::size_t i = 0; i < doc.entries.size(); ++i) {
        const int x =
            resolve_name(source, doc.entries[i].first, path, doc.entry_lines[i], "map (source)");
        const int y =
            resolve_name(target, doc.entries[i].second, path, doc.entry_lines[i], "map (target)");
        if (map[static_cast<std::size_t>(x)] >= 0)
            throw ParseError(path, doc.entry_lines[i],
                             "duplicate map entry for element " + doc.entries[i].first);
        map[static_cast<std::size_t>(x)] = y;
    }
    for (int x = 0; x < source.size(); ++x)
        if (map[static_cast<std::size_t>(x)] < 0)
            throw ParseError(path, 0, "map: missing element " + source.name(x));
    return map;
}

std::string serialize_map(const Carrier& source, const Carrier& target, const std::vector<int>& map,
                          const std::string& source_verbatim, const std::string& target_verbatim) {
    std::string out = "kind: linearmap\n";
    out += "source: " + source_verbatim + "\n";
    out += "target: " + target_verbatim + "\n\nmap:\n";
    for (int x = 0; x < source.size(); ++x)
        out += source.name(x) + " -> " + target.name(map.at(static_cast<std::size_t>(x))) + "\n";
    return out;
}

}  // namespace hyperfuzz
