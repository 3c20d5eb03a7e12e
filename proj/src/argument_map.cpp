#include "qseries/argument_map.hpp"

#include <algorithm>
#include <cctype>
#include <variant>

namespace qseries {

namespace {

using Poly = std::vector<Integer>;

constexpr unsigned long kMaxExponent = 4096;

void trim(Poly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Poly constant(const Integer& c) { return {c}; }

Poly add(const Poly& a, const Poly& b, int sign) {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += sign * b[i];
    trim(out);
    return out;
}

Poly mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

bool is_constant(const Poly& p) { return p.size() == 1; }

}  // namespace

struct ArgumentMap::Node {
    enum class Op { literal, variable, add, sub, mul, pow, neg };
    Op op;
    Integer value;
    std::string name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const ArgumentMap::Node>;
using Op = ArgumentMap::Node::Op;

NodePtr make(Op op, NodePtr lhs, NodePtr rhs = nullptr) {
    auto n = std::make_shared<ArgumentMap::Node>();
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    NodePtr parse() {
        NodePtr e = sum();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ArgumentParseError("cannot parse expression '" + text_ + "' at offset " + std::to_string(pos_) +
                                 ": " + what);
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr sum() {
        NodePtr e = product();
        for (;;) {
            if (accept('+')) {
                e = make(Op::add, e, product());
            } else if (accept('-')) {
                e = make(Op::sub, e, product());
            } else {
                return e;
            }
        }
    }

    NodePtr product() {
        NodePtr e = unary();
        while (accept('*')) e = make(Op::mul, e, unary());
        return e;
    }

    NodePtr unary() {
        if (accept('-')) return make(Op::neg, unary());
        if (accept('+')) return unary();
        return power();
    }

    NodePtr power() {
        NodePtr base = atom();
        if (accept('^')) return make(Op::pow, base, unary());
        return base;
    }

    NodePtr atom() {
        skip();
        if (accept('(')) {
            NodePtr e = sum();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            auto n = std::make_shared<ArgumentMap::Node>();
            n->op = Op::literal;
            n->value = Integer(text_.substr(start, pos_ - start));
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            auto n = std::make_shared<ArgumentMap::Node>();
            n->op = Op::variable;
            n->name = text_.substr(start, pos_ - start);
            return n;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

void collect(const NodePtr& node, std::set<std::string>& out) {
    if (!node) return;
    if (node->op == Op::variable && node->name != "n") out.insert(node->name);
    collect(node->lhs, out);
    collect(node->rhs, out);
}

Poly eval(const NodePtr& node, const Assignment& params, const std::string& text) {
    switch (node->op) {
        case Op::literal:
            return constant(node->value);
        case Op::variable: {
            if (node->name == "n") return {0, 1};
            auto it = params.find(node->name);
            if (it == params.end()) {
                throw std::invalid_argument("expression '" + text + "' needs a value for '" + node->name + "'");
            }
            return constant(it->second);
        }
        case Op::add:
            return add(eval(node->lhs, params, text), eval(node->rhs, params, text), 1);
        case Op::sub:
            return add(eval(node->lhs, params, text), eval(node->rhs, params, text), -1);
        case Op::neg:
            return add(constant(0), eval(node->lhs, params, text), -1);
        case Op::mul:
            return mul(eval(node->lhs, params, text), eval(node->rhs, params, text));
        case Op::pow: {
            const Poly base = eval(node->lhs, params, text);
            const Poly e = eval(node->rhs, params, text);
            if (!is_constant(e)) throw ArgumentParseError("exponent depends on n in '" + text + "'");
            if (e[0] < 0 || e[0] > kMaxExponent) {
                throw std::domain_error("exponent " + e[0].get_str() + " out of range in '" + text + "'");
            }
            Poly out = constant(1);
            for (unsigned long i = 0; i < e[0].get_ui(); ++i) out = mul(out, base);
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

std::string AffineMap::to_string() const {
    std::string s = U.get_str() + "n";
    if (V != 0) s += "+" + V.get_str();
    return s;
}

ArgumentMap ArgumentMap::parse(const std::string& text) {
    ArgumentMap m;
    m.text_ = text;
    m.root_ = Parser(text).parse();
    return m;
}

std::set<std::string> ArgumentMap::parameters() const {
    std::set<std::string> out;
    collect(root_, out);
    return out;
}

std::vector<Integer> ArgumentMap::polynomial(const Assignment& params) const {
    if (!root_) throw std::logic_error("empty argument map");
    return eval(root_, params, text_);
}

Integer ArgumentMap::evaluate(const Assignment& params, const Integer& n) const {
    const Poly p = polynomial(params);
    Integer acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * n + *it;
    return acc;
}

AffineMap ArgumentMap::affine(const Assignment& params) const {
    const Poly p = polynomial(params);
    if (p.size() > 2) {
        throw NonAffineArgument("argument '" + text_ + "' has degree " + std::to_string(p.size() - 1) + " in n");
    }
    AffineMap m{p.size() == 2 ? p[1] : Integer(0), p[0]};
    if (m.U < 1 || m.V < 0) {
        throw std::domain_error("argument '" + text_ + "' evaluates to " + m.to_string() +
                                ", need U >= 1 and V >= 0");
    }
    return m;
}

long evaluate_expression(const std::string& text, const Assignment& params) {
    const ArgumentMap m = ArgumentMap::parse(text);
    const Poly p = m.polynomial(params);
    if (p.size() != 1) throw ArgumentParseError("expression '" + text + "' must not depend on n");
    if (!p[0].fits_slong_p()) throw std::overflow_error("expression '" + text + "' does not fit in a long");
    return p[0].get_si();
}

}  // namespace qseries
