// --------------------------------------------------------------------
// Concept language front end. Statements are parsed line by line with
// recovery at statement boundaries so a bad file reports every problem
// in one pass.
// --------------------------------------------------------------------
#include "geoclidean/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace geoclidean {

std::size_t ConceptProgram::object_count() const {
    std::size_t n = 0;
    for (const auto& s : statements) n += std::holds_alternative<ObjectDecl>(s) ? 1 : 0;
    return n;
}

std::size_t ConceptProgram::point_count() const {
    return statements.size() - object_count();
}

std::size_t ConceptProgram::visible_count() const {
    std::size_t n = 0;
    for (const auto& s : statements)
        if (const auto* od = std::get_if<ObjectDecl>(&s)) n += od->visible ? 1 : 0;
    return n;
}

const PointDecl* ConceptProgram::find_point(std::string_view name) const {
    for (const auto& s : statements)
        if (const auto* pd = std::get_if<PointDecl>(&s))
            if (pd->name == name) return pd;
    return nullptr;
}

const ObjectDecl* ConceptProgram::find_object(std::string_view name) const {
    for (const auto& s : statements)
        if (const auto* od = std::get_if<ObjectDecl>(&s))
            if (od->name == name) return od;
    return nullptr;
}

bool ParseResult::has_errors() const {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::string to_string(ObjectKind kind) { return kind == ObjectKind::Line ? "line" : "circle"; }

std::string format_diagnostic(const Diagnostic& d) {
    std::ostringstream os;
    os << d.line << ':' << d.column << ": " << (d.severity == Severity::Error ? "error" : "warning")
       << ": " << d.message;
    return os.str();
}

namespace {

struct Token {
    enum Kind { Ident, Star, Equals, LParen, RParen, Comma, Sep, End } kind = End;
    std::string text;
    int line = 1;
    int col = 1;
};

struct Lexer {
    std::vector<Token> tokens;
    std::vector<Diagnostic>& diags;

    explicit Lexer(std::string_view src, std::vector<Diagnostic>& out) : diags(out) {
        int line = 1, col = 1;
        std::size_t i = 0;
        auto push = [&](Token::Kind k, std::string text, int l, int c) {
            if (k == Token::Sep && !tokens.empty() && tokens.back().kind == Token::Sep) return;
            tokens.push_back({k, std::move(text), l, c});
        };
        while (i < src.size()) {
            const char ch = src[i];
            if (ch == '\n') {
                push(Token::Sep, "\n", line, col);
                ++line;
                col = 1;
                ++i;
                continue;
            }
            if (ch == ';') {
                push(Token::Sep, ";", line, col);
                ++col, ++i;
                continue;
            }
            if (ch == ' ' || ch == '\t' || ch == '\r') {
                ++col, ++i;
                continue;
            }
            if (ch == '/' && i + 1 < src.size() && src[i + 1] == '/') {
                while (i < src.size() && src[i] != '\n') ++i, ++col;
                continue;
            }
            if (ch >= 'a' && ch <= 'z') {
                const int start_col = col;
                std::string text;
                while (i < src.size() &&
                       ((src[i] >= 'a' && src[i] <= 'z') || (src[i] >= '0' && src[i] <= '9') || src[i] == '_')) {
                    text.push_back(src[i]);
                    ++i, ++col;
                }
                push(Token::Ident, std::move(text), line, start_col);
                continue;
            }
            switch (ch) {
                case '*': push(Token::Star, "*", line, col); break;
                case '=': push(Token::Equals, "=", line, col); break;
                case '(': push(Token::LParen, "(", line, col); break;
                case ')': push(Token::RParen, ")", line, col); break;
                case ',': push(Token::Comma, ",", line, col); break;
                default:
                    diags.push_back({line, col, Severity::Error,
                                     std::string("unexpected character '") + ch + "'"});
                    break;
            }
            ++col, ++i;
        }
        tokens.push_back({Token::End, "", line, col});
    }
};

// Sugared point reference as written in the source.
struct RawRef {
    std::string name;
    bool has_parens = false;
    std::vector<std::string> constraints;
    std::vector<std::pair<int, int>> constraint_pos;
    int line = 0, col = 0;
};

struct RawStatement {
    bool is_point = false;
    std::string name;
    bool star = false;
    ObjectKind kind = ObjectKind::Line;
    std::vector<RawRef> refs;                       // object statements: the two parameters
    std::vector<std::string> constraints;           // standalone point statements
    std::vector<std::pair<int, int>> constraint_pos;
    int line = 0, col = 0;
};

class Parser {
public:
    Parser(std::string_view src, std::string_view default_name) {
        std::string body = extract_header(src);
        if (name_.empty()) name_ = std::string(default_name);
        Lexer lexer(body, diags_);
        tokens_ = std::move(lexer.tokens);
    }

    ParseResult run() {
        std::vector<RawStatement> raw;
        while (!at_end()) {
            if (peek().kind == Token::Sep) {
                ++pos_;
                continue;
            }
            RawStatement st;
            if (parse_statement(st)) {
                raw.push_back(std::move(st));
                if (peek().kind != Token::Sep && peek().kind != Token::End) {
                    error(peek(), "expected end of statement");
                    recover();
                }
            } else {
                recover();
            }
        }
        ConceptProgram program = validate(raw);
        ParseResult result;
        result.diagnostics = std::move(diags_);
        const bool errors = std::any_of(result.diagnostics.begin(), result.diagnostics.end(),
                                        [](const Diagnostic& d) { return d.severity == Severity::Error; });
        if (!errors) result.program = std::move(program);
        return result;
    }

private:
    std::string name_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<Diagnostic> diags_;

    // Pull an optional `concept: <name>` first line, preserving line
    // numbering for everything after it.
    std::string extract_header(std::string_view src) {
        std::string body(src);
        std::size_t line_start = 0;
        int line_no = 1;
        while (line_start < body.size()) {
            std::size_t line_end = body.find('\n', line_start);
            if (line_end == std::string::npos) line_end = body.size();
            std::string_view line(body.data() + line_start, line_end - line_start);
            std::size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string_view::npos || line.substr(first, 2) == "//") {
                line_start = line_end + 1;
                ++line_no;
                continue;
            }
            constexpr std::string_view kHeader = "concept:";
            if (line.substr(first).starts_with(kHeader)) {
                std::string rest(line.substr(first + kHeader.size()));
                const auto a = rest.find_first_not_of(" \t\r");
                const auto b = rest.find_last_not_of(" \t\r");
                name_ = (a == std::string::npos) ? "" : rest.substr(a, b - a + 1);
                // Blank out the header so token positions stay truthful.
                for (std::size_t i = line_start; i < line_end; ++i) body[i] = ' ';
            }
            break;
        }
        (void)line_no;
        return body;
    }

    const Token& peek() const { return tokens_[pos_]; }
    bool at_end() const { return peek().kind == Token::End; }

    void error(const Token& t, std::string msg) {
        diags_.push_back({t.line, t.col, Severity::Error, std::move(msg)});
    }

    void recover() {
        while (peek().kind != Token::Sep && peek().kind != Token::End) ++pos_;
    }

    bool expect(Token::Kind k, const char* what) {
        if (peek().kind != k) {
            error(peek(), std::string("expected ") + what);
            return false;
        }
        ++pos_;
        return true;
    }

    bool parse_statement(RawStatement& st) {
        if (peek().kind != Token::Ident) {
            error(peek(), "expected a statement");
            return false;
        }
        st.name = peek().text;
        st.line = peek().line;
        st.col = peek().col;
        ++pos_;
        if (peek().kind == Token::Star) {
            st.star = true;
            ++pos_;
        }
        if (!expect(Token::Equals, "'='")) return false;
        if (peek().kind != Token::Ident) {
            error(peek(), "expected 'line', 'circle' or 'point'");
            return false;
        }
        const Token kw = peek();
        ++pos_;
        if (kw.text == "point") {
            st.is_point = true;
            return parse_constraint_list(st.constraints, st.constraint_pos, st.name);
        }
        if (kw.text == "line")
            st.kind = ObjectKind::Line;
        else if (kw.text == "circle")
            st.kind = ObjectKind::Circle;
        else {
            error(kw, "unknown object kind '" + kw.text + "'");
            return false;
        }
        if (!expect(Token::LParen, "'('")) return false;
        while (peek().kind != Token::RParen) {
            RawRef ref;
            if (!parse_ref(ref)) return false;
            st.refs.push_back(std::move(ref));
            if (peek().kind == Token::Comma) {
                ++pos_;
                continue;
            }
            break;
        }
        if (!expect(Token::RParen, "')'")) return false;
        if (st.refs.size() != 2) {
            error({Token::Ident, "", st.line, st.col},
                  kw.text + " '" + st.name + "' takes exactly 2 point parameters, got " +
                      std::to_string(st.refs.size()));
            return false;
        }
        return true;
    }

    bool parse_constraint_list(std::vector<std::string>& out, std::vector<std::pair<int, int>>& pos_out,
                               const std::string& owner) {
        if (!expect(Token::LParen, "'('")) return false;
        while (peek().kind == Token::Ident) {
            out.push_back(peek().text);
            pos_out.emplace_back(peek().line, peek().col);
            ++pos_;
            if (peek().kind == Token::Comma) {
                ++pos_;
                continue;
            }
            break;
        }
        if (!expect(Token::RParen, "')'")) return false;
        if (out.size() > 2) {
            diags_.push_back({pos_out[2].first, pos_out[2].second, Severity::Error,
                              "point '" + owner + "' carries more than 2 constraints"});
            return false;
        }
        return true;
    }

    bool parse_ref(RawRef& ref) {
        if (peek().kind != Token::Ident) {
            error(peek(), "expected a point reference");
            return false;
        }
        ref.name = peek().text;
        ref.line = peek().line;
        ref.col = peek().col;
        ++pos_;
        if (peek().kind == Token::LParen) {
            ref.has_parens = true;
            return parse_constraint_list(ref.constraints, ref.constraint_pos, ref.name);
        }
        return true;
    }

    // ---- semantic validation + desugaring -------------------------------

    struct EnvEntry {
        bool is_object = false;
        std::vector<std::string> constraints;  // fresh-point constraints, sorted
    };

    ConceptProgram validate(const std::vector<RawStatement>& raw) {
        ConceptProgram program;
        program.name = name_;
        std::map<std::string, EnvEntry> env;
        std::set<std::string> used_points;
        std::vector<std::pair<std::string, std::pair<int, int>>> standalone;

        auto sorted = [](std::vector<std::string> v) {
            std::sort(v.begin(), v.end());
            return v;
        };

        auto check_constraints = [&](const std::string& owner, const std::vector<std::string>& cs,
                                     const std::vector<std::pair<int, int>>& pos) {
            bool ok = true;
            for (std::size_t i = 0; i < cs.size(); ++i) {
                const auto it = env.find(cs[i]);
                if (it == env.end()) {
                    diags_.push_back({pos[i].first, pos[i].second, Severity::Error,
                                      "use of undefined name '" + cs[i] + "'"});
                    ok = false;
                } else if (!it->second.is_object) {
                    diags_.push_back({pos[i].first, pos[i].second, Severity::Error,
                                      "constraint '" + cs[i] + "' names a point; constraints must name objects"});
                    ok = false;
                }
                for (std::size_t j = 0; j < i; ++j) {
                    if (cs[j] == cs[i]) {
                        diags_.push_back({pos[i].first, pos[i].second, Severity::Error,
                                          "point '" + owner + "' constrained twice by object '" + cs[i] + "'"});
                        ok = false;
                    }
                }
            }
            return ok;
        };

        // Resolves one sugared reference, appending a PointDecl when it
        // introduces a fresh point. Returns false on error.
        auto resolve_ref = [&](const RawRef& ref) {
            const auto it = env.find(ref.name);
            if (it != env.end()) {
                if (it->second.is_object) {
                    diags_.push_back({ref.line, ref.col, Severity::Error,
                                      "'" + ref.name + "' names an object; expected a point"});
                    return false;
                }
                if (ref.has_parens && !ref.constraints.empty() &&
                    sorted(ref.constraints) != it->second.constraints) {
                    diags_.push_back({ref.line, ref.col, Severity::Error,
                                      "duplicate definition: point '" + ref.name +
                                          "' redefined with different constraints"});
                    return false;
                }
                used_points.insert(ref.name);
                return true;
            }
            if (!ref.has_parens) {
                diags_.push_back({ref.line, ref.col, Severity::Error,
                                  "use of undefined name '" + ref.name + "'"});
                return false;
            }
            if (!check_constraints(ref.name, ref.constraints, ref.constraint_pos)) return false;
            env[ref.name] = {false, sorted(ref.constraints)};
            used_points.insert(ref.name);
            program.statements.push_back(PointDecl{ref.name, ref.constraints});
            return true;
        };

        for (const auto& st : raw) {
            if (env.count(st.name)) {
                diags_.push_back({st.line, st.col, Severity::Error,
                                  "duplicate definition of '" + st.name + "'"});
                continue;
            }
            if (st.is_point) {
                if (st.star) {
                    diags_.push_back({st.line, st.col, Severity::Error,
                                      "visibility marker '*' is not allowed on a point"});
                    continue;
                }
                if (!check_constraints(st.name, st.constraints, st.constraint_pos)) continue;
                env[st.name] = {false, sorted(st.constraints)};
                standalone.push_back({st.name, {st.line, st.col}});
                program.statements.push_back(PointDecl{st.name, st.constraints});
                continue;
            }
            const std::size_t mark = program.statements.size();
            bool ok = resolve_ref(st.refs[0]);
            ok = resolve_ref(st.refs[1]) && ok;
            if (!ok) {
                program.statements.resize(mark);  // drop partial desugaring
                continue;
            }
            if (st.refs[0].name == st.refs[1].name) {
                diags_.push_back({st.line, st.col, Severity::Warning,
                                  "object '" + st.name + "' uses point '" + st.refs[0].name +
                                      "' for both parameters"});
            }
            env[st.name] = {true, {}};
            program.statements.push_back(
                ObjectDecl{st.name, st.kind, !st.star, st.refs[0].name, st.refs[1].name});
        }

        if (program.statements.empty()) {
            diags_.push_back({1, 1, Severity::Error, "empty program"});
        } else if (program.visible_count() == 0 && !std::any_of(diags_.begin(), diags_.end(), [](const Diagnostic& d) {
                       return d.severity == Severity::Error;
                   })) {
            diags_.push_back({1, 1, Severity::Error, "program has no visible objects"});
        }
        for (const auto& [pname, ppos] : standalone) {
            if (!used_points.count(pname)) {
                diags_.push_back({ppos.first, ppos.second, Severity::Warning,
                                  "standalone point '" + pname + "' is never used"});
            }
        }
        return program;
    }
};

}  // namespace

ParseResult parse(std::string_view source, std::string_view default_name) {
    return Parser(source, default_name).run();
}

ParseResult parse_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ParseResult r;
        r.diagnostics.push_back({0, 0, Severity::Error, "cannot open file: " + path.string()});
        return r;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path.stem().string());
}

std::string pretty_print(const ConceptProgram& program) {
    std::ostringstream out;
    if (!program.name.empty()) out << "concept: " << program.name << '\n';

    std::set<std::string> introduced;
    std::vector<PointDecl> buffer;

    auto print_point = [](std::ostream& os, const PointDecl& pd) {
        os << pd.name << '(';
        for (std::size_t i = 0; i < pd.constraints.size(); ++i)
            os << (i ? ", " : "") << pd.constraints[i];
        os << ')';
    };

    for (const auto& stmt : program.statements) {
        if (const auto* pd = std::get_if<PointDecl>(&stmt)) {
            buffer.push_back(*pd);
            continue;
        }
        const auto& od = std::get<ObjectDecl>(stmt);
        // Inline the pending declarations that sit at the buffer tail, end
        // slot first so reparsing reproduces the original order.
        std::optional<PointDecl> inline_end, inline_begin;
        const bool end_is_reuse = introduced.count(od.end) || od.end == od.begin;
        if (!end_is_reuse && !buffer.empty() && buffer.back().name == od.end) {
            inline_end = buffer.back();
            buffer.pop_back();
        }
        if (!introduced.count(od.begin) && !buffer.empty() && buffer.back().name == od.begin) {
            inline_begin = buffer.back();
            buffer.pop_back();
        }
        for (const auto& pd : buffer) {
            out << pd.name << " = point(";
            for (std::size_t i = 0; i < pd.constraints.size(); ++i)
                out << (i ? ", " : "") << pd.constraints[i];
            out << ")\n";
            introduced.insert(pd.name);
        }
        buffer.clear();

        out << od.name << (od.visible ? "" : "*") << " = " << to_string(od.kind) << '(';
        if (inline_begin)
            print_point(out, *inline_begin);
        else
            out << od.begin;
        out << ", ";
        if (inline_end)
            print_point(out, *inline_end);
        else
            out << od.end;
        out << ")\n";
        introduced.insert(od.begin);
        introduced.insert(od.end);
    }
    for (const auto& pd : buffer) {
        out << pd.name << " = point(";
        for (std::size_t i = 0; i < pd.constraints.size(); ++i)
            out << (i ? ", " : "") << pd.constraints[i];
        out << ")\n";
    }
    return out.str();
}

std::map<std::string, int> constraint_signature(const ConceptProgram& program) {
    std::map<std::string, int> sig;
    for (const auto& stmt : program.statements)
        if (const auto* pd = std::get_if<PointDecl>(&stmt))
            sig[pd->name] = static_cast<int>(pd->constraints.size());
    return sig;
}

}  // namespace geoclidean
