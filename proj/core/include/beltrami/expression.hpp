#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "beltrami/errors.hpp"

namespace beltrami::expr {

/// One-variable expression tree over the variable y.
/// Grammar: reals, y, + - * / ^ (right associative), unary -, parentheses,
/// functions sin cos tan exp log sqrt abs asin.
class Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr parse(std::string_view text); // throws ParseError with position

double eval(const NodePtr& node, double y);

/// Symbolic derivative of the tree (with light constant folding).
NodePtr derivative(const NodePtr& node);

std::string to_string(const NodePtr& node);

// convenience constructors, used by tests
NodePtr constant(double v);
NodePtr variable();

} // namespace beltrami::expr
