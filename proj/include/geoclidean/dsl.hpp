// --------------------------------------------------------------------
// The Geoclidean concept language: parsing, validation, canonical
// printing. A program is an ordered sequence of point and object
// declarations; parsing desugars inline point shorthand (`p3(c1, c2)`)
// into an explicit point declaration placed just before the object
// statement that first uses it.
// --------------------------------------------------------------------
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace geoclidean {

enum class ObjectKind { Line, Circle };

// Fresh point with 0-2 constraining object names.
struct PointDecl {
    std::string name;
    std::vector<std::string> constraints;

    bool operator==(const PointDecl&) const = default;
};

// line/circle over two previously declared points. For a line the points
// are the endpoints; for a circle, center then edge point.
struct ObjectDecl {
    std::string name;
    ObjectKind kind = ObjectKind::Line;
    bool visible = true;  // `*` marks an invisible helper
    std::string begin;
    std::string end;

    bool operator==(const ObjectDecl&) const = default;
};

using Statement = std::variant<PointDecl, ObjectDecl>;

struct ConceptProgram {
    std::string name;
    std::vector<Statement> statements;

    bool operator==(const ConceptProgram&) const = default;

    std::size_t object_count() const;
    std::size_t point_count() const;
    std::size_t visible_count() const;
    const PointDecl* find_point(std::string_view name) const;
    const ObjectDecl* find_object(std::string_view name) const;
};

enum class Severity { Error, Warning };

struct Diagnostic {
    int line = 0;
    int column = 0;
    Severity severity = Severity::Error;
    std::string message;
};

struct ParseResult {
    std::optional<ConceptProgram> program;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return program.has_value(); }
    bool has_errors() const;
};

// Parses UTF-8 source: one statement per line or `;`-separated,
// `//` comments, optional leading `concept: <name>` header. On success
// the program is validated and desugared; diagnostics may still carry
// warnings. `default_name` is used when no header names the concept.
ParseResult parse(std::string_view source, std::string_view default_name = "");

ParseResult parse_file(const std::filesystem::path& path);

// Canonical text: inline shorthand at a fresh point's first use, bare
// name for reuse, `concept:` header when the program is named.
// parse(pretty_print(p)) is structurally identical to p.
std::string pretty_print(const ConceptProgram& program);

// Per-point constraint count, e.g. the equilateral triangle program
// maps to {p1:0, p2:0, p3:2}.
std::map<std::string, int> constraint_signature(const ConceptProgram& program);

std::string to_string(ObjectKind kind);
std::string format_diagnostic(const Diagnostic& d);

}  // namespace geoclidean
