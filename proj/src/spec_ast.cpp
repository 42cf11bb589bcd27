#include "psiforge/spec_ast.hpp"

#include <array>
#include <cctype>
#include <cstring>
#include <limits>
#include <string>
#include <utility>

#include "psiforge/errors.hpp"
#include "psiforge/families.hpp"

namespace psiforge {

namespace {

using Kind = GroupSpec::Kind;

struct LeafInfo {
    Kind kind;
    const char* name;
    std::size_t min_args;
    std::size_t max_args;
};

// Ordered longest-first so prefix matching is maximal munch: "Schmidt" wins
// over "S", "PSL" over "P", "SL" over "S".
constexpr std::array<LeafInfo, 14> kLeaves = {{
    {Kind::FrobSum, "FrobSum", 3, 3},
    {Kind::Schmidt, "Schmidt", 2, 3},
    {Kind::Heis, "Heis", 1, 1},
    {Kind::File, "File", 0, 0},
    {Kind::PSL, "PSL", 2, 2},
    {Kind::M3, "M3", 1, 1},
    {Kind::SL, "SL", 2, 2},
    {Kind::A, "A", 1, 1},
    {Kind::C, "C", 1, 1},
    {Kind::D, "D", 1, 1},
    {Kind::E, "E", 2, 2},
    {Kind::P, "P", 2, 3},
    {Kind::Q, "Q", 1, 1},
    {Kind::S, "S", 1, 1},
}};

const LeafInfo& leaf_info(Kind k) {
    for (const auto& info : kLeaves) {
        if (info.kind == k) return info;
    }
    fail(Errc::internal_error, "leaf_info: product node has no leaf entry");
}

struct Token {
    enum Kind { kName, kInt, kString, kLParen, kRParen, kComma, kTimes, kEnd };

    Kind kind = kEnd;
    std::size_t pos = 0;          // byte offset of the first character
    const LeafInfo* leaf = nullptr;
    std::uint64_t value = 0;
    std::string text;
};

[[noreturn]] void parse_fail(std::size_t pos, const std::string& msg) {
    fail(Errc::parse_error, "parse error at offset " + std::to_string(pos) + ": " + msg);
}

class Lexer {
  public:
    explicit Lexer(const std::string& text) : s_(text) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (at_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[at_]))) ++at_;
        cur_ = Token{};
        cur_.pos = at_;
        if (at_ >= s_.size()) {
            cur_.kind = Token::kEnd;
            return;
        }
        char c = s_[at_];
        switch (c) {
            case '(': cur_.kind = Token::kLParen; ++at_; return;
            case ')': cur_.kind = Token::kRParen; ++at_; return;
            case ',': cur_.kind = Token::kComma; ++at_; return;
            case 'x': cur_.kind = Token::kTimes; ++at_; return;
            case '"': lex_string(); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            lex_int();
            return;
        }
        for (const auto& info : kLeaves) {
            std::size_t len = std::strlen(info.name);
            if (s_.compare(at_, len, info.name) == 0) {
                cur_.kind = Token::kName;
                cur_.leaf = &info;
                at_ += len;
                return;
            }
        }
        // Report the whole unrecognized word, not just its first character.
        std::size_t end = at_;
        while (end < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_'))
            ++end;
        if (end == at_) end = at_ + 1;
        parse_fail(at_, "unknown name '" + s_.substr(at_, end - at_) +
                            "' (expected one of C E D Q S A Heis M3 P Schmidt "
                            "FrobSum SL PSL File, an integer, '(', or 'x')");
    }

    void lex_int() {
        cur_.kind = Token::kInt;
        std::uint64_t v = 0;
        std::size_t start = at_;
        while (at_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[at_]))) {
            std::uint64_t d = static_cast<std::uint64_t>(s_[at_] - '0');
            if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
                parse_fail(start, "integer literal too large");
            v = v * 10 + d;
            ++at_;
        }
        cur_.value = v;
    }

    void lex_string() {
        cur_.kind = Token::kString;
        std::size_t start = at_;
        ++at_;  // opening quote
        std::string out;
        while (at_ < s_.size() && s_[at_] != '"') out.push_back(s_[at_++]);
        if (at_ >= s_.size()) parse_fail(start, "unterminated string literal");
        ++at_;  // closing quote
        cur_.text = std::move(out);
    }

    const std::string& s_;
    std::size_t at_ = 0;
    Token cur_;
};

const char* token_name(Token::Kind k) {
    switch (k) {
        case Token::kName: return "a name";
        case Token::kInt: return "an integer";
        case Token::kString: return "a string";
        case Token::kLParen: return "'('";
        case Token::kRParen: return "')'";
        case Token::kComma: return "','";
        case Token::kTimes: return "'x'";
        case Token::kEnd: return "end of input";
    }
    return "?";
}

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) {}

    GroupSpec parse() {
        GroupSpec ast = parse_product();
        if (lex_.peek().kind != Token::kEnd)
            parse_fail(lex_.peek().pos,
                       std::string("expected 'x' or end of input, got ") +
                           token_name(lex_.peek().kind));
        return ast;
    }

  private:
    Token expect(Token::Kind k, const char* what) {
        if (lex_.peek().kind != k)
            parse_fail(lex_.peek().pos, std::string("expected ") + what + ", got " +
                                            token_name(lex_.peek().kind));
        return lex_.take();
    }

    GroupSpec parse_product() {
        GroupSpec left = parse_term();
        while (lex_.peek().kind == Token::kTimes) {
            lex_.take();
            GroupSpec right = parse_term();
            GroupSpec node;
            node.kind = Kind::Product;
            node.factors.push_back(std::move(left));
            node.factors.push_back(std::move(right));
            left = std::move(node);
        }
        return left;
    }

    GroupSpec parse_term() {
        const Token& t = lex_.peek();
        if (t.kind == Token::kLParen) {
            lex_.take();
            GroupSpec inner = parse_product();
            expect(Token::kRParen, "')'");
            return inner;
        }
        if (t.kind != Token::kName)
            parse_fail(t.pos, std::string("expected a name or '(', got ") +
                                  token_name(t.kind));
        Token name = lex_.take();
        const LeafInfo& info = *name.leaf;
        GroupSpec node;
        node.kind = info.kind;

        if (info.kind == Kind::File) {
            expect(Token::kLParen, "'(' after File");
            node.path = expect(Token::kString, "a quoted path").text;
            expect(Token::kRParen, "')'");
            return node;
        }

        if (lex_.peek().kind == Token::kLParen) {
            lex_.take();
            node.args.push_back(expect(Token::kInt, "an integer").value);
            while (lex_.peek().kind == Token::kComma) {
                lex_.take();
                node.args.push_back(expect(Token::kInt, "an integer").value);
            }
            expect(Token::kRParen, "')' or ','");
        } else if (lex_.peek().kind == Token::kInt) {
            node.args.push_back(lex_.take().value);
        } else {
            parse_fail(lex_.peek().pos,
                       std::string("expected '(' or an integer after ") + info.name +
                           ", got " + token_name(lex_.peek().kind));
        }

        if (node.args.size() < info.min_args || node.args.size() > info.max_args) {
            std::string want = info.min_args == info.max_args
                                   ? std::to_string(info.min_args)
                                   : std::to_string(info.min_args) + " to " +
                                         std::to_string(info.max_args);
            fail(Errc::argument_error, std::string(info.name) + " takes " + want +
                                           " argument(s), got " +
                                           std::to_string(node.args.size()));
        }
        // Normalize so equal groups share one spelling: a trailing beta of 1
        // is the default and is dropped.
        if (node.kind == Kind::Schmidt && node.args.size() == 3 && node.args[2] == 1)
            node.args.pop_back();
        return node;
    }

    Lexer lex_;
};

std::uint32_t arg32(const GroupSpec& ast, std::size_t i, const char* what) {
    std::uint64_t v = ast.args.at(i);
    if (v > std::numeric_limits<std::uint32_t>::max())
        fail(Errc::argument_error,
             std::string(what) + " " + std::to_string(v) + " is out of range");
    return static_cast<std::uint32_t>(v);
}

} // namespace

GroupSpec parse_spec(const std::string& text) { return Parser(text).parse(); }

std::string print_spec(const GroupSpec& ast) {
    if (ast.kind == Kind::Product) {
        require_internal(ast.factors.size() == 2, "print_spec: product arity");
        const GroupSpec& l = ast.factors[0];
        const GroupSpec& r = ast.factors[1];
        std::string right = print_spec(r);
        if (r.kind == Kind::Product) right = "(" + right + ")";
        return print_spec(l) + " x " + right;
    }
    if (ast.kind == Kind::File) return "File(\"" + ast.path + "\")";
    const LeafInfo& info = leaf_info(ast.kind);
    require_internal(ast.args.size() >= info.min_args && ast.args.size() <= info.max_args,
                     "print_spec: leaf arity");
    bool drop_beta =
        ast.kind == Kind::Schmidt && ast.args.size() == 3 && ast.args[2] == 1;
    std::size_t nargs = drop_beta ? 2 : ast.args.size();
    if (nargs == 1 && ast.kind != Kind::M3)
        return std::string(info.name) + std::to_string(ast.args[0]);
    std::string out = std::string(info.name) + "(";
    for (std::size_t i = 0; i < nargs; ++i) {
        if (i) out += ",";
        out += std::to_string(ast.args[i]);
    }
    return out + ")";
}

GroupPtr build_group(const GroupSpec& ast) {
    switch (ast.kind) {
        case Kind::C: {
            std::uint64_t n = ast.args[0];
            if (n == 0) fail(Errc::argument_error, "C0 is not a group");
            return cyclic(n);
        }
        case Kind::E:
            return elementary_abelian(ast.args[0], arg32(ast, 1, "rank"));
        case Kind::D:
            return dihedral(ast.args[0]);
        case Kind::Q:
            return quaternion(ast.args[0]);
        case Kind::S:
            return symmetric(arg32(ast, 0, "degree"));
        case Kind::A:
            return alternating(arg32(ast, 0, "degree"));
        case Kind::Heis:
            return heisenberg(ast.args[0]);
        case Kind::M3:
            return modular_p3(ast.args[0]);
        case Kind::P:
            if (ast.args.size() == 2)
                return p_group_P(arg32(ast, 0, "rank"), ast.args[1]);
            return p_group_P(arg32(ast, 0, "rank"), ast.args[1], ast.args[2]);
        case Kind::Schmidt: {
            std::uint32_t beta =
                ast.args.size() == 3 ? arg32(ast, 2, "exponent") : 1;
            return schmidt_abelian(ast.args[0], ast.args[1], beta);
        }
        case Kind::FrobSum:
            return frobenius_sum(ast.args[0], ast.args[1], arg32(ast, 2, "copies"));
        case Kind::SL:
        case Kind::PSL: {
            if (ast.args[0] != 2)
                fail(Errc::argument_error,
                     "only 2x2 matrix groups are supported; the first argument "
                     "must be 2");
            std::uint32_t q = arg32(ast, 1, "field size");
            return ast.kind == Kind::SL ? sl2(q) : psl2(q);
        }
        case Kind::File:
            return from_file(ast.path);
        case Kind::Product:
            require_internal(ast.factors.size() == 2, "build_group: product arity");
            return direct_product(build_group(ast.factors[0]),
                                  build_group(ast.factors[1]));
    }
    fail(Errc::internal_error, "build_group: unhandled node kind");
}

std::string canonical_spec(const std::string& text) {
    return print_spec(parse_spec(text));
}

GroupPtr build_spec(const std::string& text) { return build_group(parse_spec(text)); }

} // namespace psiforge
