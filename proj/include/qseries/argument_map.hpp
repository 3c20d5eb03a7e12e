#pragma once

// Integer expressions over n and named parameters, e.g.
// "5^(2*alpha+1)*7^(2*beta)*(16*(5*n+j)+14)". An argument map is such an
// expression that is affine in n once the parameters are fixed.

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

class ArgumentParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonAffineArgument : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

using Assignment = std::map<std::string, long>;

// n -> U*n + V
struct AffineMap {
    Integer U;
    Integer V;

    Integer operator()(const Integer& n) const { return U * n + V; }
    std::string to_string() const;
};

class ArgumentMap {
public:
    struct Node;

    // Grammar: + - * ^ (right associative, constant non-negative exponent),
    // parentheses, unary minus, decimal literals, identifiers.
    static ArgumentMap parse(const std::string& text);

    const std::string& text() const noexcept { return text_; }
    // Identifiers other than n.
    std::set<std::string> parameters() const;

    // Coefficients of the expression as a polynomial in n.
    std::vector<Integer> polynomial(const Assignment& params) const;
    Integer evaluate(const Assignment& params, const Integer& n) const;

    // Throws NonAffineArgument when the degree in n exceeds 1, and
    // std::domain_error when U < 1 or V < 0.
    AffineMap affine(const Assignment& params) const;

private:
    std::string text_;
    std::shared_ptr<const Node> root_;
};

// Evaluates an expression with no free n (e.g. a parameter bound "p-1").
long evaluate_expression(const std::string& text, const Assignment& params);

}  // namespace qseries
