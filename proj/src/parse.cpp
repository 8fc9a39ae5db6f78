#include "sqtop/parse.hpp"

#include <cctype>
#include <memory>
#include <vector>

namespace sqtop {
namespace {

struct Node {
    enum Kind { Sum, Mul, Pow, Ident, Lit } kind;
    std::vector<std::unique_ptr<Node>> kids;
    std::vector<bool> negated;  // Sum only, one flag per kid
    std::string name;           // Ident
    uint64_t lit = 0;           // Lit
    uint32_t exp = 0;           // Pow
    std::size_t pos = 0;
};

using NodePtr = std::unique_ptr<Node>;

class Parser {
  public:
    Parser(const std::string& text, bool allow_minus)
        : text_(text), allow_minus_(allow_minus) {}

    NodePtr run() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw SyntaxError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return e;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool minus() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '-') {
            if (!allow_minus_)
                throw SyntaxError("'-' is only available with integer coefficients", pos_);
            ++pos_;
            return true;
        }
        return false;
    }

    uint64_t number() {
        skip_ws();
        std::size_t start = pos_;
        uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            uint64_t d = static_cast<uint64_t>(text_[pos_] - '0');
            if (v > (UINT64_MAX - d) / 10) throw SyntaxError("integer literal too large", start);
            v = v * 10 + d;
            ++pos_;
        }
        if (pos_ == start) throw SyntaxError("expected a number", pos_);
        return v;
    }

    NodePtr expr() {
        auto sum = std::make_unique<Node>();
        sum->kind = Node::Sum;
        sum->pos = pos_;
        bool neg = minus();
        sum->kids.push_back(term());
        sum->negated.push_back(neg);
        for (;;) {
            if (eat('+')) {
                sum->kids.push_back(term());
                sum->negated.push_back(false);
            } else if (peek() == '-') {
                minus();
                sum->kids.push_back(term());
                sum->negated.push_back(true);
            } else {
                break;
            }
        }
        return sum;
    }

    NodePtr term() {
        auto mul = std::make_unique<Node>();
        mul->kind = Node::Mul;
        mul->pos = pos_;
        mul->kids.push_back(factor());
        while (eat('*')) mul->kids.push_back(factor());
        return mul;
    }

    NodePtr factor() {
        NodePtr base = atom();
        skip_ws();
        if (!eat('^')) return base;
        skip_ws();
        std::size_t at = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-')
            throw NegativeExponent("negative exponent at offset " + std::to_string(at));
        uint64_t e = number();
        if (e > 1000000) throw SyntaxError("exponent too large", at);
        auto p = std::make_unique<Node>();
        p->kind = Node::Pow;
        p->pos = at;
        p->exp = static_cast<uint32_t>(e);
        p->kids.push_back(std::move(base));
        return p;
    }

    NodePtr atom() {
        skip_ws();
        std::size_t at = pos_;
        if (pos_ >= text_.size()) throw SyntaxError("unexpected end of expression", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            if (!eat(')')) throw SyntaxError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = std::make_unique<Node>();
            n->kind = Node::Lit;
            n->pos = at;
            n->lit = number();
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            auto n = std::make_unique<Node>();
            n->kind = Node::Ident;
            n->pos = at;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                n->name += text_[pos_++];
            return n;
        }
        throw SyntaxError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    const std::string& text_;
    bool allow_minus_;
    std::size_t pos_ = 0;
};

// Exponentiation guard: expanding a many-term base to a huge power is a
// resource hazard, not a use case.
template <class P>
P checked_pow(const P& base, uint32_t e, std::size_t pos) {
    if (base.term_count() > 1 && e > 64)
        throw SyntaxError("exponent too large for a multi-term base", pos);
    return pow(base, e);
}

Gf2Poly eval_gf2(const Node& n, const GeneratorTable& gens, const ParamTable& params) {
    switch (n.kind) {
        case Node::Sum: {
            Gf2Poly acc(gens.size());
            for (const auto& k : n.kids) acc += eval_gf2(*k, gens, params);
            return acc;
        }
        case Node::Mul: {
            Gf2Poly acc = Gf2Poly::unit(gens.size());
            for (const auto& k : n.kids) acc = acc * eval_gf2(*k, gens, params);
            return acc;
        }
        case Node::Pow:
            return checked_pow(eval_gf2(*n.kids[0], gens, params), n.exp, n.pos);
        case Node::Ident: {
            if (auto g = gens.find(n.name))
                return Gf2Poly::monomial(Monomial::generator(gens, *g));
            if (auto p = params.find(n.name)) {
                Gf2Poly out(gens.size());
                out.add_term(Monomial::one(gens.size()), ParamPoly::param(*p));
                return out;
            }
            throw UnknownIdentifier("unknown identifier '" + n.name + "' at offset " +
                                    std::to_string(n.pos));
        }
        case Node::Lit: {
            Gf2Poly out(gens.size());
            if (n.lit % 2 == 1) out.add_term(Monomial::one(gens.size()), ParamPoly::one());
            return out;
        }
    }
    throw Error("unreachable");
}

IntPoly eval_int(const Node& n, const GeneratorTable& gens) {
    switch (n.kind) {
        case Node::Sum: {
            IntPoly acc(gens.size());
            for (std::size_t i = 0; i < n.kids.size(); ++i) {
                IntPoly t = eval_int(*n.kids[i], gens);
                acc += n.negated[i] ? t * BigInt(-1) : t;
            }
            return acc;
        }
        case Node::Mul: {
            IntPoly acc = IntPoly::unit(gens.size());
            for (const auto& k : n.kids) acc = acc * eval_int(*k, gens);
            return acc;
        }
        case Node::Pow:
            return checked_pow(eval_int(*n.kids[0], gens), n.exp, n.pos);
        case Node::Ident: {
            if (auto g = gens.find(n.name))
                return IntPoly::monomial(Monomial::generator(gens, *g));
            throw UnknownIdentifier("unknown identifier '" + n.name + "' at offset " +
                                    std::to_string(n.pos));
        }
        case Node::Lit: {
            IntPoly out(gens.size());
            out.add_term(Monomial::one(gens.size()), BigInt(n.lit));
            return out;
        }
    }
    throw Error("unreachable");
}

}  // namespace

Gf2Poly parse_class(const std::string& text, const GeneratorTable& gens,
                    const ParamTable& params) {
    Parser p(text, /*allow_minus=*/false);
    NodePtr ast = p.run();
    return eval_gf2(*ast, gens, params);
}

IntPoly parse_int_class(const std::string& text, const GeneratorTable& gens) {
    Parser p(text, /*allow_minus=*/true);
    NodePtr ast = p.run();
    return eval_int(*ast, gens);
}

}  // namespace sqtop
