#pragma once

// Parser and canonical serializer for `.mcarch` architecture descriptions.
//
//   architecture "<name>"                                  (optional, once)
//   jurisdiction <id> [";" | { name: "<text>" }]
//   provider <id> { region: <jurisdiction-id> [, iam: "<text>"] [, name: "<text>"] }
//   node <id> { tier: web|app|db|storage, provider: <id>, subnet: public|private
//               [, virtualized: true|false] [, orchestrated: true|false] }
//   link <id> { from: <node-id>, to: <node-id>, kind: api|vpn|storage_io|user_session
//               [, encryption: "<label>"|none] }
//   automation { enabled: true|false }
//
// `#` starts a comment that runs to end of line. Identifiers match
// [A-Za-z_][A-Za-z0-9_.-]*. Any declaration may be followed by ";". Fields
// are comma separated; a trailing comma is accepted.
//
// Defaults: virtualized=true, orchestrated=false, encryption=none,
// iam=<provider id>, name=<id>.

#include "mcrisk/model.hpp"
#include "mcrisk/text.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mcrisk::dsl {

struct SourceSpan {
    std::size_t line = 1;    // 1-based
    std::size_t column = 1;  // 1-based, in code points
    std::size_t length = 0;  // in code points
    std::size_t offset = 0;  // byte offset of the first character

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class ErrorKind { Lexical, Syntactic, Semantic };

inline std::string_view to_string(ErrorKind k) noexcept {
    switch (k) {
        case ErrorKind::Lexical: return "lexical";
        case ErrorKind::Syntactic: return "syntactic";
        case ErrorKind::Semantic: return "semantic";
    }
    return "syntactic";
}

struct ParseError {
    SourceSpan span;
    ErrorKind kind = ErrorKind::Syntactic;
    std::string message;
    std::optional<std::string> hint;

    /// "<origin>:<line>:<col>: <kind> error: <message>"
    std::string format(std::string_view origin = "<input>") const {
        std::string out = std::string(origin) + ":" + std::to_string(span.line) + ":" +
                          std::to_string(span.column) + ": " + std::string(to_string(kind)) +
                          " error: " + message;
        if (hint) out += " (hint: " + *hint + ")";
        return out;
    }
};

struct ParseResult {
    std::optional<ArchitectureModel> model;
    std::vector<ParseError> errors;

    bool ok() const noexcept { return model.has_value(); }
};

inline bool is_identifier(std::string_view s) noexcept {
    if (s.empty()) return false;
    auto head = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
    auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9') || c == '.' || c == '-'; };
    if (!head(s.front())) return false;
    for (char c : s.substr(1)) {
        if (!tail(c)) return false;
    }
    return true;
}

namespace detail {

enum class Tok { Ident, String, LBrace, RBrace, Colon, Comma, Semicolon, End, Invalid };

inline std::string_view describe(Tok t) noexcept {
    switch (t) {
        case Tok::Ident: return "identifier";
        case Tok::String: return "string";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::Colon: return "':'";
        case Tok::Comma: return "','";
        case Tok::Semicolon: return "';'";
        case Tok::End: return "end of input";
        case Tok::Invalid: return "invalid token";
    }
    return "token";
}

struct Token {
    Tok kind = Tok::End;
    std::string text;  // identifier text or decoded string value
    SourceSpan span;
    bool first_on_line = false;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run(std::vector<ParseError>& errors) {
        std::vector<Token> out;
        bool line_start = true;
        while (true) {
            line_start = skip_trivia() || line_start;
            Token t = next(errors);
            t.first_on_line = line_start;
            line_start = false;
            const bool done = t.kind == Tok::End;
            out.push_back(std::move(t));
            if (done) break;
        }
        return out;
    }

private:
    bool at_end() const noexcept { return pos_ >= src_.size(); }
    char peek(std::size_t ahead = 0) const noexcept {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    static bool is_continuation(char c) noexcept {
        return (static_cast<unsigned char>(c) & 0xC0U) == 0x80U;
    }

    // Advances one byte, maintaining line/column. CR, LF and CRLF each end a line.
    void advance() {
        const char c = src_[pos_++];
        if (c == '\n' || (c == '\r' && peek() != '\n')) {
            ++line_;
            column_ = 1;
        } else if (c != '\r' && !is_continuation(c)) {
            ++column_;
        }
    }

    SourceSpan mark() const noexcept { return {line_, column_, 0, pos_}; }

    void close(SourceSpan& span) const noexcept {
        std::size_t chars = 0;
        for (std::size_t i = span.offset; i < pos_; ++i) {
            if (!is_continuation(src_[i])) ++chars;
        }
        span.length = chars;
    }

    /// Skips whitespace and comments; returns true if a line break was crossed.
    bool skip_trivia() {
        bool newline = false;
        while (!at_end()) {
            const char c = peek();
            if (c == '\n' || c == '\r') {
                newline = true;
                advance();
            } else if (c == ' ' || c == '\t' || c == '\f' || c == '\v') {
                advance();
            } else if (c == '#') {
                while (!at_end() && peek() != '\n' && peek() != '\r') advance();
            } else {
                break;
            }
        }
        return newline;
    }

    Token next(std::vector<ParseError>& errors) {
        Token t;
        t.span = mark();
        if (at_end()) {
            t.kind = Tok::End;
            return t;
        }
        const char c = peek();
        auto single = [&](Tok kind) {
            advance();
            t.kind = kind;
            close(t.span);
            return t;
        };
        switch (c) {
            case '{': return single(Tok::LBrace);
            case '}': return single(Tok::RBrace);
            case ':': return single(Tok::Colon);
            case ',': return single(Tok::Comma);
            case ';': return single(Tok::Semicolon);
            case '"': return string_literal(t, errors);
            default: break;
        }
        if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_') {
            const std::size_t start = pos_;
            while (!at_end()) {
                const char d = peek();
                const bool ok = (d >= 'A' && d <= 'Z') || (d >= 'a' && d <= 'z') ||
                                (d >= '0' && d <= '9') || d == '_' || d == '.' || d == '-';
                if (!ok) break;
                advance();
            }
            t.kind = Tok::Ident;
            t.text = std::string(src_.substr(start, pos_ - start));
            close(t.span);
            return t;
        }
        // Unexpected character: consume one code point.
        advance();
        while (!at_end() && is_continuation(peek())) advance();
        t.kind = Tok::Invalid;
        close(t.span);
        const unsigned char byte = static_cast<unsigned char>(c);
        std::string shown = (byte >= 0x20 && byte < 0x7F) ? std::string("'") + c + "'"
                                                            : "byte 0x" + hex(byte);
        errors.push_back({t.span, ErrorKind::Lexical, "unexpected character " + shown, std::nullopt});
        return t;
    }

    static std::string hex(unsigned char b) {
        static constexpr char digits[] = "0123456789abcdef";
        return {digits[b >> 4], digits[b & 0x0F]};
    }

    Token string_literal(Token& t, std::vector<ParseError>& errors) {
        advance();  // opening quote
        t.kind = Tok::String;
        bool terminated = false;
        while (!at_end()) {
            const char c = peek();
            if (c == '"') {
                advance();
                terminated = true;
                break;
            }
            if (c == '\n' || c == '\r') break;
            if (c == '\\') {
                SourceSpan esc = mark();
                advance();
                const char e = peek();
                switch (e) {
                    case '"': t.text += '"'; break;
                    case '\\': t.text += '\\'; break;
                    case 'n': t.text += '\n'; break;
                    case 't': t.text += '\t'; break;
                    case 'r': t.text += '\r'; break;
                    default: {
                        if (!at_end() && e != '\n' && e != '\r') advance();
                        close(esc);
                        errors.push_back({esc, ErrorKind::Lexical, "invalid escape sequence",
                                          std::string("supported escapes are \\\" \\\\ \\n \\t \\r")});
                        continue;
                    }
                }
                advance();
                continue;
            }
            t.text += c;
            advance();
        }
        close(t.span);
        if (!terminated) {
            errors.push_back({t.span, ErrorKind::Lexical, "unterminated string literal",
                              std::string("strings must close on the same line")});
        }
        return t;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

struct Field {
    std::string key;
    SourceSpan key_span;
    Token value;
};

struct Block {
    std::vector<Field> fields;
};

// Spans per declared element, used to place structural errors.
struct ElementSpans {
    SourceSpan id;
    std::map<std::string, SourceSpan> fields;
};

inline bool is_keyword(std::string_view s) noexcept {
    return s == "architecture" || s == "jurisdiction" || s == "provider" || s == "node" ||
           s == "link" || s == "automation";
}

class Parser {
public:
    Parser(std::vector<Token> tokens, std::vector<ParseError> lexical)
        : tokens_(std::move(tokens)), errors_(std::move(lexical)) {}

    ParseResult run() {
        while (peek().kind != Tok::End) {
            const std::size_t before = pos_;
            if (!declaration()) synchronize();
            if (pos_ == before) ++pos_;  // always make progress
        }
        const bool structural_ok = std::none_of(errors_.begin(), errors_.end(), [](const ParseError& e) {
            return e.kind != ErrorKind::Semantic;
        });
        ParseResult result;
        if (structural_ok) {
            if (parts_.nodes.empty()) {
                SourceSpan at_end = peek().span;
                errors_.push_back({at_end, ErrorKind::Semantic, "architecture declares no nodes",
                                   std::string("declare at least one `node`")});
            } else {
                try {
                    ArchitectureModel model = build_architecture(parts_);
                    if (errors_.empty()) result.model = std::move(model);
                } catch (const ModelError& e) {
                    for (const auto& s : e.errors()) errors_.push_back(structural(s));
                }
            }
        }
        std::stable_sort(errors_.begin(), errors_.end(), [](const ParseError& a, const ParseError& b) {
            return a.span.offset < b.span.offset;
        });
        result.errors = std::move(errors_);
        if (!result.errors.empty()) result.model.reset();
        return result;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        const std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
        return tokens_[i];
    }
    const Token& take() {
        const Token& t = tokens_[std::min(pos_, tokens_.size() - 1)];
        if (pos_ < tokens_.size() - 1) ++pos_;
        return t;
    }

    void syntax(const Token& at, std::string message, std::optional<std::string> hint = std::nullopt) {
        if (at.kind == Tok::Invalid) return;  // the lexer already reported it
        errors_.push_back({at.span, ErrorKind::Syntactic, std::move(message), std::move(hint)});
    }

    void semantic(const SourceSpan& at, std::string message,
                  std::optional<std::string> hint = std::nullopt) {
        errors_.push_back({at, ErrorKind::Semantic, std::move(message), std::move(hint)});
    }

    bool expect(Tok kind, std::string_view what) {
        if (peek().kind == kind) {
            take();
            return true;
        }
        syntax(peek(), "expected " + std::string(what) + ", found " + found(peek()));
        return false;
    }

    static std::string found(const Token& t) {
        if (t.kind == Tok::Ident) return "'" + t.text + "'";
        return std::string(describe(t.kind));
    }

    // Skip to a plausible declaration boundary after a syntax error.
    void synchronize() {
        int depth = depth_;
        while (peek().kind != Tok::End) {
            const Token& t = peek();
            if (t.kind == Tok::Ident && t.first_on_line && is_keyword(t.text)) break;
            if (t.kind == Tok::LBrace) ++depth;
            if (t.kind == Tok::RBrace) {
                take();
                if (--depth <= 0) break;
                continue;
            }
            if (t.kind == Tok::Semicolon && depth <= 0) {
                take();
                break;
            }
            if (depth <= 0 && t.kind == Tok::Ident && is_keyword(t.text)) break;
            take();
        }
        if (peek().kind == Tok::Semicolon) take();
        depth_ = 0;
    }

    bool declaration() {
        const Token& kw = peek();
        if (kw.kind != Tok::Ident || !is_keyword(kw.text)) {
            syntax(kw, "expected a declaration, found " + found(kw),
                   std::string("declarations start with architecture, jurisdiction, provider, "
                               "node, link or automation"));
            return false;
        }
        const std::string keyword = take().text;
        bool ok = false;
        if (keyword == "architecture") ok = architecture_decl(kw);
        else if (keyword == "jurisdiction") ok = jurisdiction_decl();
        else if (keyword == "provider") ok = provider_decl();
        else if (keyword == "node") ok = node_decl();
        else if (keyword == "link") ok = link_decl();
        else ok = automation_decl(kw);
        if (ok && peek().kind == Tok::Semicolon) take();
        return ok;
    }

    std::optional<Token> identifier(std::string_view what) {
        if (peek().kind == Tok::Ident) return take();
        syntax(peek(), "expected " + std::string(what) + ", found " + found(peek()));
        return std::nullopt;
    }

    std::optional<Block> block() {
        if (!expect(Tok::LBrace, "'{'")) return std::nullopt;
        ++depth_;
        Block b;
        while (peek().kind != Tok::RBrace) {
            auto key = identifier("field name");
            if (!key) return std::nullopt;
            if (!expect(Tok::Colon, "':'")) return std::nullopt;
            const Token& v = peek();
            if (v.kind != Tok::Ident && v.kind != Tok::String) {
                syntax(v, "expected a value for '" + key->text + "', found " + found(v));
                return std::nullopt;
            }
            b.fields.push_back({key->text, key->span, take()});
            if (peek().kind == Tok::Comma) {
                take();
                continue;
            }
            if (peek().kind != Tok::RBrace) {
                syntax(peek(), "expected ',' or '}', found " + found(peek()));
                return std::nullopt;
            }
        }
        take();
        --depth_;
        return b;
    }

    // Validates keys against the allowed set; reports unknown, duplicate and missing keys.
    std::map<std::string, const Field*> fields_of(const Block& b, const Token& decl_id,
                                                  std::string_view kind,
                                                  std::initializer_list<std::string_view> required,
                                                  std::initializer_list<std::string_view> optional) {
        std::map<std::string, const Field*> out;
        for (const auto& f : b.fields) {
            const bool known = std::find(required.begin(), required.end(), f.key) != required.end() ||
                               std::find(optional.begin(), optional.end(), f.key) != optional.end();
            if (!known) {
                std::string allowed;
                for (auto k : required) allowed += (allowed.empty() ? "" : ", ") + std::string(k);
                for (auto k : optional) allowed += (allowed.empty() ? "" : ", ") + std::string(k);
                semantic(f.key_span, "unknown field '" + f.key + "' in " + std::string(kind),
                         "allowed fields: " + allowed);
                continue;
            }
            if (!out.emplace(f.key, &f).second) {
                semantic(f.key_span, "field '" + f.key + "' given more than once");
            }
        }
        for (auto k : required) {
            if (!out.count(std::string(k))) {
                semantic(decl_id.span, std::string(kind) + " '" + decl_id.text +
                                           "' is missing required field '" + std::string(k) + "'");
            }
        }
        return out;
    }

    std::optional<std::string> ident_value(const Field& f) {
        if (f.value.kind == Tok::Ident) return f.value.text;
        semantic(f.value.span, "field '" + f.key + "' expects an identifier, found a string");
        return std::nullopt;
    }

    std::optional<std::string> string_value(const Field& f) {
        if (f.value.kind == Tok::String) return f.value.text;
        semantic(f.value.span, "field '" + f.key + "' expects a quoted string",
                 "write " + f.key + ": \"" + f.value.text + "\"");
        return std::nullopt;
    }

    template <typename E, typename ParseFn>
    std::optional<E> enum_value(const Field& f, std::string_view what, ParseFn parse_fn,
                                std::string_view allowed) {
        auto v = ident_value(f);
        if (!v) return std::nullopt;
        auto parsed = parse_fn(*v);
        if (!parsed) {
            semantic(f.value.span, "unknown " + std::string(what) + " '" + *v + "'",
                     "expected one of " + std::string(allowed));
        }
        return parsed;
    }

    std::optional<bool> bool_value(const Field& f) {
        return enum_value<bool>(
            f, "boolean",
            [](std::string_view s) -> std::optional<bool> {
                if (s == "true") return true;
                if (s == "false") return false;
                return std::nullopt;
            },
            "true, false");
    }

    static std::map<std::string, SourceSpan> value_spans(const std::map<std::string, const Field*>& fs) {
        std::map<std::string, SourceSpan> out;
        for (const auto& [k, f] : fs) out[k] = f->value.span;
        return out;
    }

    bool architecture_decl(const Token& kw) {
        const Token& v = peek();
        if (v.kind != Tok::String && v.kind != Tok::Ident) {
            syntax(v, "expected architecture name, found " + found(v));
            return false;
        }
        const Token name = take();
        if (seen_architecture_) {
            semantic(kw.span, "architecture name declared more than once");
        }
        seen_architecture_ = true;
        parts_.name = name.text;
        return true;
    }

    bool jurisdiction_decl() {
        auto id = identifier("jurisdiction code");
        if (!id) return false;
        Jurisdiction j{id->text, id->text};
        ElementSpans spans{id->span, {}};
        if (peek().kind == Tok::LBrace) {
            auto b = block();
            if (!b) return false;
            auto fs = fields_of(*b, *id, "jurisdiction", {}, {"name"});
            if (auto it = fs.find("name"); it != fs.end()) {
                if (auto v = string_value(*it->second)) j.display_name = *v;
            }
            spans.fields = value_spans(fs);
        }
        parts_.jurisdictions.push_back(std::move(j));
        jurisdiction_spans_.push_back(std::move(spans));
        return true;
    }

    bool provider_decl() {
        auto id = identifier("provider id");
        if (!id) return false;
        auto b = block();
        if (!b) return false;
        auto fs = fields_of(*b, *id, "provider", {"region"}, {"iam", "name"});
        Provider p{id->text, id->text, "", id->text};
        if (auto it = fs.find("region"); it != fs.end()) {
            if (auto v = ident_value(*it->second)) p.jurisdiction = *v;
        }
        if (auto it = fs.find("iam"); it != fs.end()) {
            if (auto v = string_value(*it->second)) p.iam_domain = *v;
        }
        if (auto it = fs.find("name"); it != fs.end()) {
            if (auto v = string_value(*it->second)) p.display_name = *v;
        }
        parts_.providers.push_back(std::move(p));
        provider_spans_.push_back({id->span, value_spans(fs)});
        return true;
    }

    bool node_decl() {
        auto id = identifier("node id");
        if (!id) return false;
        auto b = block();
        if (!b) return false;
        auto fs = fields_of(*b, *id, "node", {"tier", "provider", "subnet"},
                            {"virtualized", "orchestrated"});
        Node n;
        n.id = id->text;
        if (auto it = fs.find("tier"); it != fs.end()) {
            if (auto v = enum_value<Tier>(*it->second, "tier", parse_tier, "web, app, db, storage")) n.tier = *v;
        }
        if (auto it = fs.find("provider"); it != fs.end()) {
            if (auto v = ident_value(*it->second)) n.provider = *v;
        }
        if (auto it = fs.find("subnet"); it != fs.end()) {
            if (auto v = enum_value<Subnet>(*it->second, "subnet", parse_subnet, "public, private")) n.subnet = *v;
        }
        if (auto it = fs.find("virtualized"); it != fs.end()) {
            if (auto v = bool_value(*it->second)) n.virtualized = *v;
        }
        if (auto it = fs.find("orchestrated"); it != fs.end()) {
            if (auto v = bool_value(*it->second)) n.orchestrated = *v;
        }
        parts_.nodes.push_back(std::move(n));
        node_spans_.push_back({id->span, value_spans(fs)});
        return true;
    }

    bool link_decl() {
        auto id = identifier("link id");
        if (!id) return false;
        auto b = block();
        if (!b) return false;
        auto fs = fields_of(*b, *id, "link", {"from", "to", "kind"}, {"encryption"});
        LinkSpec l;
        l.id = id->text;
        if (auto it = fs.find("from"); it != fs.end()) {
            if (auto v = ident_value(*it->second)) l.from = *v;
        }
        if (auto it = fs.find("to"); it != fs.end()) {
            if (auto v = ident_value(*it->second)) l.to = *v;
        }
        if (auto it = fs.find("kind"); it != fs.end()) {
            if (auto v = enum_value<LinkKind>(*it->second, "link kind", parse_link_kind,
                                              "api, vpn, storage_io, user_session")) {
                l.kind = *v;
            }
        }
        if (auto it = fs.find("encryption"); it != fs.end()) {
            const Field& f = *it->second;
            if (f.value.kind == Tok::Ident) {
                if (f.value.text != "none") {
                    semantic(f.value.span, "encryption expects a quoted label or none",
                             "write encryption: \"" + f.value.text + "\"");
                }
            } else if (f.value.text.empty()) {
                semantic(f.value.span, "encryption label must not be empty",
                         std::string("use `none` for an unencrypted link"));
            } else {
                l.encryption = f.value.text;
            }
        }
        parts_.links.push_back(std::move(l));
        link_spans_.push_back({id->span, value_spans(fs)});
        return true;
    }

    bool automation_decl(const Token& kw) {
        auto b = block();
        if (!b) return false;
        Token pseudo = kw;
        pseudo.text = "automation";
        auto fs = fields_of(*b, pseudo, "automation block", {"enabled"}, {});
        if (seen_automation_) semantic(kw.span, "automation declared more than once");
        seen_automation_ = true;
        if (auto it = fs.find("enabled"); it != fs.end()) {
            if (auto v = bool_value(*it->second)) parts_.automation_enabled = *v;
        }
        return true;
    }

    ParseError structural(const StructuralError& s) const {
        const std::vector<ElementSpans>* table = nullptr;
        switch (s.kind) {
            case ElementKind::Jurisdiction: table = &jurisdiction_spans_; break;
            case ElementKind::Provider: table = &provider_spans_; break;
            case ElementKind::Node: table = &node_spans_; break;
            case ElementKind::Link: table = &link_spans_; break;
            case ElementKind::Model: break;
        }
        SourceSpan span = peek().span;
        if (table && s.index < table->size()) {
            const ElementSpans& es = (*table)[s.index];
            span = es.id;
            if (s.code == StructuralError::Code::DanglingRef) {
                if (auto it = es.fields.find(s.field); it != es.fields.end()) span = it->second;
            }
        }
        std::optional<std::string> hint;
        if (s.code == StructuralError::Code::DanglingRef) {
            hint = "declare " + std::string(s.field == "region" ? "jurisdiction" :
                                            s.field == "provider" ? "provider" : "node") +
                   " '" + s.reference + "' or fix the reference";
        }
        return {span, ErrorKind::Semantic, s.message, hint};
    }

    std::vector<Token> tokens_;
    std::vector<ParseError> errors_;
    std::size_t pos_ = 0;
    int depth_ = 0;
    bool seen_architecture_ = false;
    bool seen_automation_ = false;
    ArchitectureParts parts_;
    std::vector<ElementSpans> jurisdiction_spans_;
    std::vector<ElementSpans> provider_spans_;
    std::vector<ElementSpans> node_spans_;
    std::vector<ElementSpans> link_spans_;
};

}  // namespace detail

/// Parses an architecture description. Never throws on malformed input;
/// all recoverable errors are collected, each with a span into `source`.
inline ParseResult parse(std::string_view source) {
    std::vector<ParseError> lexical;
    auto tokens = detail::Lexer(source).run(lexical);
    return detail::Parser(std::move(tokens), std::move(lexical)).run();
}

/// Canonical text for a model. parse(serialize(m)) reproduces m.
/// Throws ContractViolation if an id cannot be written as an identifier.
inline std::string serialize(const ArchitectureModel& model) {
    auto ident = [](const std::string& id) -> const std::string& {
        if (!is_identifier(id)) throw ContractViolation("'" + id + "' is not a valid identifier");
        return id;
    };
    auto flag = [](bool b) { return b ? "true" : "false"; };
    std::string out;
    if (!model.name().empty()) out += "architecture " + text::quote(model.name()) + ";\n\n";

    for (const auto& j : model.jurisdictions()) {
        out += "jurisdiction " + ident(j.code);
        if (j.display_name != j.code) {
            out += " {\n  name: " + text::quote(j.display_name) + "\n}\n";
        } else {
            out += ";\n";
        }
    }
    if (!model.jurisdictions().empty()) out += '\n';

    for (const auto& p : model.providers()) {
        out += "provider " + ident(p.id) + " {\n";
        out += "  region: " + ident(p.jurisdiction) + ",\n";
        out += "  iam: " + text::quote(p.iam_domain);
        if (p.display_name != p.id) out += ",\n  name: " + text::quote(p.display_name);
        out += "\n}\n\n";
    }
    for (const auto& n : model.nodes()) {
        out += "node " + ident(n.id) + " {\n";
        out += "  tier: " + std::string(to_string(n.tier)) + ",\n";
        out += "  provider: " + ident(n.provider) + ",\n";
        out += "  subnet: " + std::string(to_string(n.subnet)) + ",\n";
        out += "  virtualized: " + std::string(flag(n.virtualized)) + ",\n";
        out += "  orchestrated: " + std::string(flag(n.orchestrated)) + "\n}\n\n";
    }
    for (const auto& l : model.links()) {
        out += "link " + ident(l.id) + " {\n";
        out += "  from: " + ident(l.from) + ",\n";
        out += "  to: " + ident(l.to) + ",\n";
        out += "  kind: " + std::string(to_string(l.kind)) + ",\n";
        out += "  encryption: " + (l.encryption ? text::quote(*l.encryption) : std::string("none"));
        out += "\n}\n\n";
    }
    out += "automation {\n  enabled: " + std::string(flag(model.automation_enabled())) + "\n}\n";
    return out;
}

}  // namespace mcrisk::dsl
