#include <cctype>
#include <memory>

#include "hyp/cli.hpp"

namespace hyp {

namespace {

struct Token {
  enum Kind { Num, SymX, SymDx, SymF, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  Int value;
  std::size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace((unsigned char)c)) {
      ++i;
      continue;
    }
    std::size_t pos = i;
    if (std::isdigit((unsigned char)c)) {
      std::string digits;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) digits += s[i++];
      out.push_back({Token::Num, Int(digits), pos});
      continue;
    }
    if (std::isalpha((unsigned char)c)) {
      std::string word;
      while (i < s.size() && std::isalnum((unsigned char)s[i])) word += s[i++];
      if (word == "x") out.push_back({Token::SymX, Int(0), pos});
      else if (word == "Dx") out.push_back({Token::SymDx, Int(0), pos});
      else if (word == "f") out.push_back({Token::SymF, Int(0), pos});
      else throw ParseError("unknown symbol '" + word + "' at position " + std::to_string(pos), pos);
      continue;
    }
    ++i;
    switch (c) {
      case '+': out.push_back({Token::Plus, Int(0), pos}); break;
      case '-': out.push_back({Token::Minus, Int(0), pos}); break;
      case '*': out.push_back({Token::Star, Int(0), pos}); break;
      case '/': out.push_back({Token::Slash, Int(0), pos}); break;
      case '^': out.push_back({Token::Caret, Int(0), pos}); break;
      case '(': out.push_back({Token::LParen, Int(0), pos}); break;
      case ')': out.push_back({Token::RParen, Int(0), pos}); break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "' at position " +
                             std::to_string(pos),
                         pos);
    }
  }
  out.push_back({Token::End, Int(0), s.size()});
  return out;
}

struct Node {
  enum Kind { Num, SymX, SymDx, SymF, Add, Sub, Mul, Div, Pow, Neg };
  Kind kind;
  Int value;
  unsigned long expo = 0;
  std::size_t pos = 0;
  std::unique_ptr<Node> lhs, rhs;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make_node(Node::Kind k, std::size_t pos) {
  auto n = std::make_unique<Node>();
  n->kind = k;
  n->pos = pos;
  return n;
}

struct Parser {
  const std::vector<Token>& toks;
  std::size_t idx = 0;

  const Token& peek() const { return toks[idx]; }
  Token next() { return toks[idx++]; }

  [[noreturn]] void fail(const std::string& what, std::size_t pos) {
    throw ParseError(what + " at position " + std::to_string(pos), pos);
  }

  NodePtr parse_expr() {
    bool neg = false;
    std::size_t sign_pos = peek().pos;
    if (peek().kind == Token::Plus) next();
    else if (peek().kind == Token::Minus) {
      next();
      neg = true;
    }
    NodePtr lhs = parse_term();
    if (neg) {
      NodePtr n = make_node(Node::Neg, sign_pos);
      n->lhs = std::move(lhs);
      lhs = std::move(n);
    }
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      Token op = next();
      NodePtr rhs = parse_term();
      NodePtr n = make_node(op.kind == Token::Plus ? Node::Add : Node::Sub, op.pos);
      n->lhs = std::move(lhs);
      n->rhs = std::move(rhs);
      lhs = std::move(n);
    }
    return lhs;
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    while (peek().kind == Token::Star || peek().kind == Token::Slash) {
      Token op = next();
      NodePtr rhs = parse_factor();
      NodePtr n = make_node(op.kind == Token::Star ? Node::Mul : Node::Div, op.pos);
      n->lhs = std::move(lhs);
      n->rhs = std::move(rhs);
      lhs = std::move(n);
    }
    return lhs;
  }

  NodePtr parse_factor() {
    NodePtr base = parse_base();
    if (peek().kind == Token::Caret) {
      Token op = next();
      if (peek().kind != Token::Num) fail("expected integer exponent", peek().pos);
      Token e = next();
      if (!e.value.fits_ulong_p()) fail("exponent too large", e.pos);
      NodePtr n = make_node(Node::Pow, op.pos);
      n->expo = e.value.get_ui();
      n->lhs = std::move(base);
      base = std::move(n);
    }
    return base;
  }

  NodePtr parse_base() {
    Token t = peek();
    switch (t.kind) {
      case Token::Num: {
        next();
        NodePtr n = make_node(Node::Num, t.pos);
        n->value = t.value;
        return n;
      }
      case Token::SymX: next(); return make_node(Node::SymX, t.pos);
      case Token::SymDx: next(); return make_node(Node::SymDx, t.pos);
      case Token::SymF: next(); return make_node(Node::SymF, t.pos);
      case Token::LParen: {
        next();
        NodePtr inner = parse_expr();
        if (peek().kind != Token::RParen) fail("expected ')'", peek().pos);
        next();
        return inner;
      }
      default: fail("expected 'x', 'Dx', a number, or '('", t.pos);
    }
  }
};

NodePtr parse_tree(const std::string& text) {
  auto toks = tokenize(text);
  Parser p{toks};
  NodePtr root = p.parse_expr();
  if (p.peek().kind != Token::End) p.fail("unexpected trailing input", p.peek().pos);
  return root;
}

DiffOpQ eval_op(const Node* n) {
  switch (n->kind) {
    case Node::Num: return DiffOpQ::from_fun(RatFunQ(Rat(n->value)));
    case Node::SymX: return DiffOpQ::from_fun(RatFunQ::x());
    case Node::SymDx: return DiffOpQ::dx(RatFunQ(Rat(1)));
    case Node::SymF:
      throw ParseError("symbol 'f' not allowed in an operator expression at position " +
                           std::to_string(n->pos),
                       n->pos);
    case Node::Add: return eval_op(n->lhs.get()) + eval_op(n->rhs.get());
    case Node::Sub: return eval_op(n->lhs.get()) - eval_op(n->rhs.get());
    case Node::Mul: return eval_op(n->lhs.get()) * eval_op(n->rhs.get());
    case Node::Div: {
      DiffOpQ a = eval_op(n->lhs.get());
      DiffOpQ b = eval_op(n->rhs.get());
      if (b.order() > 0)
        throw ParseError("Dx in a denominator at position " + std::to_string(n->pos), n->pos);
      if (b.zero())
        throw ParseError("division by zero at position " + std::to_string(n->pos), n->pos);
      return kinv(b.c[0]) * a;
    }
    case Node::Pow: {
      DiffOpQ a = eval_op(n->lhs.get());
      DiffOpQ r = DiffOpQ::from_fun(RatFunQ(Rat(1)));
      for (unsigned long i = 0; i < n->expo; ++i) r = r * a;
      return r;
    }
    case Node::Neg: return -eval_op(n->lhs.get());
  }
  assert(false);
  return DiffOpQ();
}

}  // namespace

DiffOpQ parse_operator(const std::string& text) {
  NodePtr root = parse_tree(text);
  DiffOpQ l = eval_op(root.get());
  if (l.order() > 2)
    throw ParseError("operator order exceeds 2 (got " + std::to_string(l.order()) + ")",
                     text.size());
  return l;
}

RatFunQ parse_ratfun(const std::string& text) {
  NodePtr root = parse_tree(text);
  DiffOpQ l = eval_op(root.get());
  if (l.order() > 0) throw ParseError("Dx not allowed in a rational function", 0);
  return l.zero() ? RatFunQ() : l.c[0];
}

namespace {

QuadFun eval_quadfun(const Node* n, const QuadFun& fval, const RatFunQ& d) {
  auto from_ratfun = [&](const RatFunQ& g) { return QuadFun::from_ratfun(g, d); };
  switch (n->kind) {
    case Node::Num: return from_ratfun(RatFunQ(Rat(n->value)));
    case Node::SymX: return from_ratfun(RatFunQ::x());
    case Node::SymF: return fval;
    case Node::SymDx:
      throw ParseError("Dx not allowed here at position " + std::to_string(n->pos), n->pos);
    case Node::Add: return eval_quadfun(n->lhs.get(), fval, d) + eval_quadfun(n->rhs.get(), fval, d);
    case Node::Sub: return eval_quadfun(n->lhs.get(), fval, d) - eval_quadfun(n->rhs.get(), fval, d);
    case Node::Mul: return eval_quadfun(n->lhs.get(), fval, d) * eval_quadfun(n->rhs.get(), fval, d);
    case Node::Div: {
      QuadFun b = eval_quadfun(n->rhs.get(), fval, d);
      if (b.zero())
        throw ParseError("division by zero at position " + std::to_string(n->pos), n->pos);
      return eval_quadfun(n->lhs.get(), fval, d) / b;
    }
    case Node::Pow: {
      QuadFun a = eval_quadfun(n->lhs.get(), fval, d);
      QuadFun r = from_ratfun(RatFunQ(Rat(1)));
      for (unsigned long i = 0; i < n->expo; ++i) r = r * a;
      return r;
    }
    case Node::Neg: return -eval_quadfun(n->lhs.get(), fval, d);
  }
  assert(false);
  return QuadFun();
}

}  // namespace

QuadFun parse_quadfun_in_f(const std::string& text, const std::array<UPoly<Rat>, 3>& mp) {
  RatFunQ a0(mp[0]), a1(mp[1]), a2(mp[2]);
  assert(!a2.zero());
  RatFunQ d = a1 * a1 - RatFunQ(Rat(4)) * a2 * a0;
  RatFunQ inv2a2 = kinv(RatFunQ(Rat(2)) * a2);
  QuadFun fval(-(a1 * inv2a2), inv2a2, d);
  NodePtr root = parse_tree(text);
  return eval_quadfun(root.get(), fval, d);
}

}  // namespace hyp
