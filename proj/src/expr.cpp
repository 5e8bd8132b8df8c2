#include "sympcheck/expr.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace sympcheck {

ExprPtr Expr::make_atom(std::string name, std::size_t pos)
{
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Atom;
    e->atom = std::move(name);
    e->position = pos;
    return e;
}

ExprPtr Expr::make_binary(Kind kind, ExprPtr l, ExprPtr r, std::size_t pos)
{
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->left = std::move(l);
    e->right = std::move(r);
    e->position = pos;
    return e;
}

ExprPtr Expr::make_unary(Kind kind, ExprPtr operand, int count, std::size_t pos)
{
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->left = std::move(operand);
    e->count = count;
    e->position = pos;
    return e;
}

bool same_tree(const Expr& a, const Expr& b)
{
    if (a.kind != b.kind || a.atom != b.atom || a.count != b.count)
        return false;
    if (static_cast<bool>(a.left) != static_cast<bool>(b.left) || static_cast<bool>(a.right) != static_cast<bool>(b.right))
        return false;
    if (a.left && !same_tree(*a.left, *b.left))
        return false;
    return !a.right || same_tree(*a.right, *b.right);
}

namespace {

struct Token {
    enum Type { Atom, Spin, CS, Int, Cross, Hash, Caret, LParen, RParen, Comma, End } type;
    std::string text;
    long value = 0;
    std::size_t position = 0;
};

std::string_view describe(Token::Type t)
{
    switch (t) {
    case Token::Atom: return "atom";
    case Token::Spin: return "'spin'";
    case Token::CS: return "'CS'";
    case Token::Int: return "integer";
    case Token::Cross: return "'x'";
    case Token::Hash: return "'#'";
    case Token::Caret: return "'^'";
    case Token::LParen: return "'('";
    case Token::RParen: return "')'";
    case Token::Comma: return "','";
    case Token::End: return "end of input";
    }
    return "token";
}

std::vector<Token> tokenize(std::string_view s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    auto digits_at = [&](std::size_t j) { return j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])); };
    auto read_digits = [&](std::size_t j) {
        std::size_t k = j;
        while (digits_at(k))
            ++k;
        return k;
    };
    while (i < s.size()) {
        const char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        auto single = [&](Token::Type t) {
            out.push_back({t, std::string(1, ch), 0, start});
            ++i;
        };
        switch (ch) {
        case '#': single(Token::Hash); continue;
        case '^': single(Token::Caret); continue;
        case '(': single(Token::LParen); continue;
        case ')': single(Token::RParen); continue;
        case ',': single(Token::Comma); continue;
        case 'x': single(Token::Cross); continue;
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(ch)) || (ch == '-' && digits_at(i + 1))) {
            std::size_t end = read_digits(ch == '-' ? i + 1 : i);
            std::string text(s.substr(i, end - i));
            long value = 0;
            try {
                value = std::stol(text);
            } catch (const std::out_of_range&) {
                throw ParseError(ErrorCode::SyntaxError, start, "integer out of range: " + text);
            }
            out.push_back({Token::Int, text, value, start});
            i = end;
            continue;
        }
        auto rest = s.substr(i);
        if (rest.starts_with("spin")) {
            out.push_back({Token::Spin, "spin", 0, start});
            i += 4;
            continue;
        }
        if (rest.starts_with("Wu") || rest.starts_with("pt")) {
            out.push_back({Token::Atom, std::string(rest.substr(0, 2)), 0, start});
            i += 2;
            continue;
        }
        if (rest.starts_with("CS")) {
            out.push_back({Token::CS, "CS", 0, start});
            i += 2;
            continue;
        }
        std::size_t prefix = rest.starts_with("CP") ? 2 : (ch == 'S' || ch == 'T') ? 1 : 0;
        if (prefix > 0) {
            std::size_t end = read_digits(i + prefix);
            if (end == i + prefix)
                throw ParseError(ErrorCode::SyntaxError, i + prefix,
                                 "expected a dimension after '" + std::string(rest.substr(0, prefix)) + "'");
            out.push_back({Token::Atom, std::string(s.substr(i, end - i)), 0, start});
            i = end;
            continue;
        }
        throw ParseError(ErrorCode::SyntaxError, start, std::string("unexpected character '") + ch + "'");
    }
    out.push_back({Token::End, "", 0, s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ExprPtr parse_all()
    {
        ExprPtr e = parse_sum();
        expect(Token::End);
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    const Token& expect(Token::Type t)
    {
        const Token& tok = peek();
        if (tok.type != t)
            throw ParseError(ErrorCode::SyntaxError, tok.position,
                             "expected " + std::string(describe(t)) + ", found " + std::string(describe(tok.type)));
        ++pos_;
        return tok;
    }

    int positive_count(const Token& tok, std::string_view what)
    {
        if (tok.value < 1)
            throw ParseError(ErrorCode::NonPositiveExponent, tok.position,
                             std::string(what) + " must be >= 1, got " + tok.text);
        if (tok.value > std::numeric_limits<int>::max())
            throw ParseError(ErrorCode::SyntaxError, tok.position, std::string(what) + " too large");
        return static_cast<int>(tok.value);
    }

    ExprPtr parse_sum()
    {
        ExprPtr e = parse_product();
        while (peek().type == Token::Hash) {
            std::size_t at = peek().position;
            ++pos_;
            e = Expr::make_binary(Expr::Kind::ConnSum, e, parse_product(), at);
        }
        return e;
    }

    ExprPtr parse_product()
    {
        ExprPtr e = parse_postfix();
        while (peek().type == Token::Cross) {
            std::size_t at = peek().position;
            ++pos_;
            e = Expr::make_binary(Expr::Kind::Product, e, parse_postfix(), at);
        }
        return e;
    }

    ExprPtr parse_postfix()
    {
        ExprPtr e = parse_primary();
        while (peek().type == Token::Caret) {
            std::size_t at = peek().position;
            ++pos_;
            int k = positive_count(expect(Token::Int), "exponent");
            e = Expr::make_unary(Expr::Kind::Power, e, k, at);
        }
        return e;
    }

    ExprPtr parse_primary()
    {
        const Token& tok = peek();
        switch (tok.type) {
        case Token::Atom:
            ++pos_;
            return Expr::make_atom(tok.text, tok.position);
        case Token::Spin: {
            ++pos_;
            expect(Token::LParen);
            ExprPtr inner = parse_sum();
            expect(Token::RParen);
            return Expr::make_unary(Expr::Kind::Spin, inner, 0, tok.position);
        }
        case Token::CS: {
            ++pos_;
            expect(Token::LParen);
            int j = positive_count(expect(Token::Int), "connected-sum count");
            expect(Token::Comma);
            ExprPtr inner = parse_sum();
            expect(Token::RParen);
            return Expr::make_unary(Expr::Kind::IterSum, inner, j, tok.position);
        }
        case Token::LParen: {
            ++pos_;
            ExprPtr inner = parse_sum();
            expect(Token::RParen);
            return inner;
        }
        default:
            throw ParseError(ErrorCode::SyntaxError, tok.position,
                             "expected a manifold, found " + std::string(describe(tok.type)));
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

enum Precedence { kSum = 1, kProduct = 2, kPostfix = 3 };

std::string print_at(const Expr& e, int context)
{
    auto wrap = [&](int own, std::string s) { return context > own ? "(" + s + ")" : s; };
    switch (e.kind) {
    case Expr::Kind::Atom: return e.atom;
    case Expr::Kind::Spin: return "spin(" + print_at(*e.left, kSum) + ")";
    case Expr::Kind::IterSum: return "CS(" + std::to_string(e.count) + ", " + print_at(*e.left, kSum) + ")";
    case Expr::Kind::ConnSum:
        return wrap(kSum, print_at(*e.left, kSum) + " # " + print_at(*e.right, kSum + 1));
    case Expr::Kind::Product:
        return wrap(kProduct, print_at(*e.left, kProduct) + " x " + print_at(*e.right, kProduct + 1));
    case Expr::Kind::Power: return wrap(kPostfix, print_at(*e.left, kPostfix) + "^" + std::to_string(e.count));
    }
    return {};
}

}  // namespace

ExprPtr parse(std::string_view text)
{
    return Parser(tokenize(text)).parse_all();
}

std::string print(const Expr& e)
{
    return print_at(e, 0);
}

ManifoldDescriptor evaluate(const Expr& e)
{
    auto at_node = [&](auto&& op) -> ManifoldDescriptor {
        try {
            return op();
        } catch (const Error& err) {
            throw Error(err.code(), "in '" + print(e) + "': " + err.detail());
        }
    };
    switch (e.kind) {
    case Expr::Kind::Atom: return at_node([&] { return atom_descriptor(e.atom); });
    case Expr::Kind::Spin: {
        auto inner = evaluate(*e.left);
        return at_node([&] { return spin(inner); });
    }
    case Expr::Kind::IterSum: {
        auto inner = evaluate(*e.left);
        return at_node([&] { return iterated_connect_sum_desc(inner, e.count); });
    }
    case Expr::Kind::Power: {
        auto inner = evaluate(*e.left);
        return at_node([&] { return power_desc(inner, e.count); });
    }
    case Expr::Kind::ConnSum: {
        auto l = evaluate(*e.left);
        auto r = evaluate(*e.right);
        return at_node([&] { return connect_sum_desc(l, r); });
    }
    case Expr::Kind::Product: {
        auto l = evaluate(*e.left);
        auto r = evaluate(*e.right);
        return at_node([&] { return product_desc(l, r); });
    }
    }
    throw Error(ErrorCode::InvalidArgument, "malformed expression");
}

}  // namespace sympcheck
