#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperfuzz/ifs.hpp"
#include "hyperfuzz/structures.hpp"

namespace hyperfuzz {

// Positioned load/parse failure.  line == 0 means the whole file (e.g. a
// missing table cell discovered after reading everything).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string path, int line, const std::string& msg)
        : std::runtime_error(line > 0 ? path + ":" + std::to_string(line) + ": " + msg
                                      : path + ": " + msg),
          path_(std::move(path)),
          line_(line) {}

    const std::string& path() const { return path_; }
    int line() const { return line_; }

private:
    std::string path_;
    int line_;
};

enum class StructureKind { Hypergroup, Hyperfield, HypervectorSpace };

// Surface form of a structure file after parsing: tables are total and all
// names resolved, but the axioms have not been audited yet.  For a
// hypervector space the referenced scalar field has been loaded and audited
// (an invalid field file is a load error, since no space object can exist
// over it).
struct ParsedStructure {
    StructureKind kind = StructureKind::Hypergroup;
    Carrier carrier;  // the vector carrier for a space
    HyperOp add;
    std::optional<BinOp> mul;            // hyperfield
    std::optional<Hyperfield> field;     // hypervector space scalar field
    std::optional<ScalarAction> action;  // hypervector space
    int declared_zero = -1;
    int declared_one = -1;  // hyperfield only
    std::string field_path_verbatim;
    std::string source_path;
};

ParsedStructure parse_structure_file(const std::string& path);

// Kind-appropriate audit.  Exactly one of group/field/space engages when the
// report is clean.  A mismatch between a declared distinguished element and
// the derived one is reported as DECL.zero / DECL.one / DECL.theta.
struct StructureAudit {
    Report report{100};
    std::optional<Hypergroup> group;
    std::optional<Hyperfield> field;
    std::optional<HypervectorSpace> space;
};

StructureAudit audit_structure(const ParsedStructure& p, int cap = 100);

// Canonical serializations: fixed header order, full row-major tables, one
// cell per line, single spaces, trailing newline.  parse then serialize is
// byte-identity on files in this form.
std::string serialize_structure(const Hypergroup& g);
std::string serialize_structure(const Hyperfield& f);
std::string serialize_structure(const HypervectorSpace& v, const std::string& field_path);

// Overlay files.  Parsing needs no carrier; binding resolves names against a
// concrete carrier and enforces totality and mu+nu <= 1 with positions.
struct OverlayDoc {
    std::string over_verbatim;
    std::string over_resolved;  // joined with the overlay file's directory
    std::vector<std::pair<std::string, Degree>> mu_entries;
    std::vector<std::pair<std::string, Degree>> nu_entries;
    std::vector<int> mu_lines;
    std::vector<int> nu_lines;
    std::string source_path;
};

OverlayDoc parse_overlay_file(const std::string& path);
Ifs bind_overlay(const OverlayDoc& doc, const Carrier& carrier);

std::string serialize_overlay(const Ifs& ifs, const Carrier& carrier,
                              const std::string& over_verbatim);

// Linear map files.
struct MapDoc {
    std::string source_verbatim;
    std::string target_verbatim;
    std::string source_resolved;
    std::string target_resolved;
    std::vector<std::pair<std::string, std::string>> entries;
    std::vector<int> entry_lines;
    std::string source_path;
};

MapDoc parse_map_file(const std::string& path);

// name -> name entries resolved to a total index map; unknown or repeated or
// missing source elements are positioned errors.
std::vector<int> bind_map(const MapDoc& doc, const Carrier& source, const Carrier& target);

std::string serialize_map(const Carrier& source, const Carrier& target,
                          const std::vector<int>& map, const std::string& source_verbatim,
                          const std::string& target_verbatim);

// Path of `ref` relative to the directory containing `base_file`.
std::string resolve_relative(const std::string& base_file, const std::string& ref);

// Whole-file read; absent or unreadable files throw std::system_error-like
// runtime errors distinct from ParseError.
struct FileUnreadable : std::runtime_error {
    explicit FileUnreadable(const std::string& path)
        : std::runtime_error("cannot read file: " + path) {}
};

std::string read_file(const std::string& path);

// Write via a temporary sibling plus rename, so readers never see a partial
// file.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace hyperfuzz
