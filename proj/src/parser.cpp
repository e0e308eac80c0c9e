#include "klr/parser.hpp"

#include <cctype>

namespace klr {

namespace {

struct Token {
    enum Kind { Int, Ident, Plus, Minus, Star, LParen, RParen, Comma, End } kind;
    std::string text;
    int col;  // 1-based
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    size_t k = 0;
    while (k < src.size()) {
        char c = src[k];
        if (std::isspace(static_cast<unsigned char>(c))) { ++k; continue; }
        int col = static_cast<int>(k) + 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = k;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Token::Int, src.substr(k, j - k), col});
            k = j;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = k;
            while (j < src.size() && std::isalpha(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Token::Ident, src.substr(k, j - k), col});
            k = j;
        } else {
            Token::Kind kind;
            switch (c) {
                case '+': kind = Token::Plus; break;
                case '-': kind = Token::Minus; break;
                case '*': kind = Token::Star; break;
                case '(': kind = Token::LParen; break;
                case ')': kind = Token::RParen; break;
                case ',': kind = Token::Comma; break;
                default: throw ParseError("unexpected character '" + std::string(1, c) + "'", col);
            }
            out.push_back({kind, std::string(1, c), col});
            ++k;
        }
    }
    out.push_back({Token::End, "", static_cast<int>(src.size()) + 1});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& src) : toks_(lex(src)) {}

    ExprPtr run() {
        ExprPtr e = expr();
        if (cur().kind != Token::End) fail("trailing input");
        return e;
    }

private:
    std::vector<Token> toks_;
    size_t pos_ = 0;
    std::vector<int> open_cols_;

    const Token& cur() const { return toks_[pos_]; }
    void advance() { ++pos_; }

    [[noreturn]] void fail(const std::string& msg) const {
        // unexpected end inside parentheses points at the unclosed paren
        if (cur().kind == Token::End && !open_cols_.empty())
            throw ParseError("syntax error (" + msg + ")", open_cols_.back());
        throw ParseError("syntax error (" + msg + ")", cur().col);
    }

    int expect_int() {
        if (cur().kind != Token::Int) fail("expected integer");
        int v = std::stoi(cur().text);
        advance();
        return v;
    }

    ExprPtr expr() {
        auto node = std::make_shared<ExprNode>();
        node->kind = ExprNode::Add;
        node->children.push_back(term());
        node->signs.push_back(1);
        while (cur().kind == Token::Plus || cur().kind == Token::Minus) {
            int sign = cur().kind == Token::Plus ? 1 : -1;
            advance();
            node->children.push_back(term());
            node->signs.push_back(sign);
        }
        if (node->children.size() == 1 && node->signs[0] == 1) return node->children[0];
        return node;
    }

    ExprPtr term() {
        auto node = std::make_shared<ExprNode>();
        node->kind = ExprNode::Mul;
        node->children.push_back(factor());
        while (cur().kind == Token::Star) {
            advance();
            node->children.push_back(factor());
        }
        if (node->children.size() == 1) return node->children[0];
        return node;
    }

    void expect(Token::Kind k, const std::string& what) {
        if (cur().kind != k) fail("expected " + what);
        if (k == Token::LParen) open_cols_.push_back(cur().col);
        if (k == Token::RParen && !open_cols_.empty()) open_cols_.pop_back();
        advance();
    }

    ExprPtr factor() {
        if (cur().kind == Token::Int) {
            auto node = std::make_shared<ExprNode>();
            node->kind = ExprNode::Num;
            node->num = Int(cur().text);
            advance();
            return node;
        }
        if (cur().kind == Token::LParen) {
            expect(Token::LParen, "'('");
            ExprPtr inner = expr();
            expect(Token::RParen, "')'");
            return inner;
        }
        if (cur().kind != Token::Ident) fail("expected factor");
        std::string id = cur().text;
        if (id == "tau") {
            advance();
            expect(Token::LParen, "'('");
            auto node = std::make_shared<ExprNode>();
            node->kind = ExprNode::Tau;
            node->children.push_back(expr());
            expect(Token::RParen, "')'");
            return node;
        }
        if (id == "e") {
            advance();
            expect(Token::LParen, "'('");
            Word w;
            w.push_back(expect_int());
            while (cur().kind == Token::Comma) {
                advance();
                w.push_back(expect_int());
            }
            expect(Token::RParen, "')'");
            auto node = std::make_shared<ExprNode>();
            node->kind = ExprNode::Atom;
            node->atom = Gen::idem(std::move(w));
            return node;
        }
        if (id == "y" || id == "s") {
            advance();
            int r = expect_int();
            auto node = std::make_shared<ExprNode>();
            node->kind = ExprNode::Atom;
            node->atom = id == "y" ? Gen::dot(r) : Gen::cross(r);
            return node;
        }
        fail("unknown identifier '" + id + "'");
    }
};

}  // namespace

ExprPtr parse(const std::string& src) { return Parser(src).run(); }

Element eval(const ExprPtr& ast, const Context& ctx) {
    switch (ast->kind) {
        case ExprNode::Num:
            return ctx.one().scaled(ast->num);
        case ExprNode::Atom: {
            const Gen& g = ast->atom;
            if (g.kind == Gen::Dot && (g.r < 1 || g.r > ctx.d()))
                throw EvalError("dot index y" + std::to_string(g.r) + " out of range 1.." +
                                std::to_string(ctx.d()));
            if (g.kind == Gen::Cross && (g.r < 1 || g.r >= ctx.d()))
                throw EvalError("crossing index s" + std::to_string(g.r) + " out of range 1.." +
                                std::to_string(ctx.d() - 1));
            if (g.kind == Gen::Idem && !(RootVector::from_word(g.word) == ctx.alpha()))
                throw EvalError("idempotent word content does not match alpha");
            return ctx.gen_element(g);
        }
        case ExprNode::Mul: {
            Element acc = eval(ast->children[0], ctx);
            for (size_t k = 1; k < ast->children.size(); ++k)
                acc = mul(acc, eval(ast->children[k], ctx));
            return acc;
        }
        case ExprNode::Add: {
            Element acc = ctx.zero();
            for (size_t k = 0; k < ast->children.size(); ++k)
                acc.add(eval(ast->children[k], ctx), ast->signs[k]);
            return acc;
        }
        case ExprNode::Tau:
            return tau(eval(ast->children[0], ctx));
    }
    return ctx.zero();
}

}  // namespace klr
