#include "mmpair/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace mmpair::dsl {

DslError::DslError(Kind kind, std::size_t column, std::string message, std::vector<std::string> expected)
    : ParseError((kind == Kind::syntax ? "syntax error" : "sort error") + std::string(" at column ") +
                 std::to_string(column) + ": " + message),
      kind_(kind), column_(column), expected_(std::move(expected)) {}

std::string variable_name(int v) {
  static const char* names[] = {"x", "y", "z", "w"};
  return names[v];
}

namespace {

struct Token {
  enum class Type { ident, number, symbol, end };
  Type type;
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t col = i + 1;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Type::ident, std::string(s.substr(i, j - i)), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j + 1 < s.size() && s[j] == '/' && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      out.push_back({Token::Type::number, std::string(s.substr(i, j - i)), col});
      i = j;
    } else if (std::string_view("[](),;+-*=").find(c) != std::string_view::npos) {
      out.push_back({Token::Type::symbol, std::string(1, c), col});
      ++i;
    } else {
      throw DslError(DslError::Kind::syntax, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Type::end, "", s.size() + 1});
  return out;
}

const char* sort_name(Sort s) {
  switch (s) {
  case Sort::M: return "M";
  case Sort::L: return "L";
  case Sort::zero: return "0";
  }
  return "?";
}

class Parser {
public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Identity identity() {
    Identity id;
    id.sides.push_back(side());
    while (accept("=")) id.sides.push_back(side());
    if (id.sides.size() < 2) error({"=", "+", "-"});
    if (peek().type != Token::Type::end) error({"=", "+", "-", "end of input"});
    id.free_variables.assign(vars_.begin(), vars_.end());
    return id;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  bool at(std::string_view sym) const { return peek().type == Token::Type::symbol && peek().text == sym; }
  bool accept(std::string_view sym) {
    if (!at(sym)) return false;
    ++pos_;
    return true;
  }
  void expect(std::string_view sym) {
    if (!accept(sym)) error({std::string(sym)});
  }

  [[noreturn]] void error(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? ", '" : "'") + expected[i] + "'";
    msg += t.type == Token::Type::end ? " before end of input" : " but found '" + t.text + "'";
    throw DslError(DslError::Kind::syntax, t.column, msg, std::move(expected));
  }

  [[noreturn]] static void sort_error(std::size_t column, const std::string& msg) {
    throw DslError(DslError::Kind::sort, column, msg);
  }

  static NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

  NodePtr side() {
    NodePtr e = expr();
    if (e->sort == Sort::M) sort_error(e->column, "identity sides must be L-valued, found an M-expression");
    return e;
  }

  static NodePtr negate(NodePtr e) {
    if (e->sort == Sort::zero) return e;
    return make(Node{Node::Kind::scale, e->sort, e->column, -1, MapRole::S, Rational(-1), {e}});
  }

  NodePtr expr() {
    const std::size_t col = peek().column;
    std::vector<NodePtr> terms;
    bool neg = false;
    if (accept("-"))
      neg = true;
    else
      accept("+");
    NodePtr t = term();
    terms.push_back(neg ? negate(t) : t);
    while (at("+") || at("-")) {
      neg = take().text == "-";
      t = term();
      terms.push_back(neg ? negate(t) : t);
    }
    Sort sort = Sort::zero;
    for (const auto& tm : terms) {
      if (tm->sort == Sort::zero) continue;
      if (sort == Sort::zero)
        sort = tm->sort;
      else if (tm->sort != sort)
        sort_error(tm->column, std::string("cannot add an ") + sort_name(tm->sort) + "-expression to an " +
                                   sort_name(sort) + "-expression");
    }
    if (terms.size() == 1) return terms.front();
    return make(Node{Node::Kind::sum, sort, col, -1, MapRole::S, Rational(1), std::move(terms)});
  }

  NodePtr term() {
    if (peek().type == Token::Type::number) {
      const Token num = take();
      const Rational c = parse_rational(num.text);
      if (!accept("*")) {
        if (sgn(c) == 0) return make(Node{Node::Kind::zero, Sort::zero, num.column, -1, MapRole::S, Rational(0), {}});
        error({"*"});
      }
      bool neg = accept("-");
      NodePtr inner = term();
      if (inner->sort == Sort::zero || sgn(c) == 0) return make(Node{Node::Kind::zero, Sort::zero, num.column, -1, MapRole::S, Rational(0), {}});
      return make(Node{Node::Kind::scale, inner->sort, num.column, -1, MapRole::S, neg ? Rational(-c) : c, {inner}});
    }
    return primary();
  }

  NodePtr m_argument() {
    NodePtr a = expr();
    if (a->sort == Sort::L) sort_error(a->column, "expected an M-expression, found an L-expression");
    return a;
  }

  NodePtr primary() {
    const Token& t = peek();
    const std::size_t col = t.column;
    if (accept("(")) {
      NodePtr e = expr();
      expect(")");
      return e;
    }
    if (accept("[")) {
      NodePtr a = expr();
      expect(",");
      NodePtr b = expr();
      expect("]");
      Sort s = a->sort == Sort::zero ? b->sort : a->sort;
      if (a->sort != Sort::zero && b->sort != Sort::zero && a->sort != b->sort)
        sort_error(b->column, std::string("bracket mixes an ") + sort_name(a->sort) + "-expression with an " +
                                  sort_name(b->sort) + "-expression");
      if (s == Sort::zero) return make(Node{Node::Kind::zero, Sort::zero, col, -1, MapRole::S, Rational(0), {}});
      return make(Node{Node::Kind::bracket, s, col, -1, MapRole::S, Rational(1), {a, b}});
    }
    if (t.type == Token::Type::ident) {
      const std::string name = take().text;
      if (name == "x" || name == "y" || name == "z" || name == "w") {
        const int v = name == "x" ? 0 : name == "y" ? 1 : name == "z" ? 2 : 3;
        vars_.insert(v);
        return make(Node{Node::Kind::variable, Sort::M, col, v, MapRole::S, Rational(1), {}});
      }
      static const std::pair<const char*, MapRole> maps[] = {{"S", MapRole::S},   {"T", MapRole::T},
                                                              {"P", MapRole::P},   {"Sp", MapRole::Sp},
                                                              {"Tp", MapRole::Tp}, {"Pp", MapRole::Pp}};
      for (const auto& [label, role] : maps)
        if (name == label) {
          expect("(");
          NodePtr a = m_argument();
          expect(")");
          return make(Node{Node::Kind::map, Sort::L, col, -1, role, Rational(1), {a}});
        }
      if (name == "Y") {
        expect("(");
        NodePtr a = m_argument();
        expect(";");
        NodePtr b = m_argument();
        expect(")");
        return make(Node{Node::Kind::yamagutian, Sort::L, col, -1, MapRole::S, Rational(1), {a, b}});
      }
      if (name == "J") {
        expect("(");
        NodePtr a = m_argument();
        expect(",");
        NodePtr b = m_argument();
        expect(",");
        NodePtr c = m_argument();
        expect(")");
        return make(Node{Node::Kind::jacobian, Sort::M, col, -1, MapRole::S, Rational(1), {a, b, c}});
      }
      --pos_;
      throw DslError(DslError::Kind::syntax, col, "unknown name '" + name + "'",
                     {"x", "y", "z", "w", "S", "T", "P", "Sp", "Tp", "Pp", "Y", "J"});
    }
    error({"variable", "S", "T", "P", "Sp", "Tp", "Pp", "Y", "J", "[", "(", "rational"});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::set<int> vars_;
};

Vector& accumulate(Vector& acc, const Rational& c, const Vector& v) {
  if (v.empty()) return acc;
  if (acc.empty()) {
    acc = c * v;
    return acc;
  }
  return add_scaled(acc, c, v);
}

} // namespace

Identity parse_identity(std::string_view text) {
  Identity id = Parser(text).identity();
  id.text = std::string(text);
  return id;
}

std::vector<Identity> parse_identity_lines(std::istream& in) {
  std::vector<Identity> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
    out.push_back(parse_identity(line));
  }
  return out;
}

Vector evaluate(const Node& n, const TripleContext& ctx, std::span<const Vector> assignment) {
  using K = Node::Kind;
  switch (n.kind) {
  case K::zero: return {};
  case K::variable: return assignment[n.variable];
  case K::map: {
    Vector m = evaluate(*n.children[0], ctx, assignment);
    if (m.empty()) return {};
    return ctx.apply(n.role, m);
  }
  case K::yamagutian: {
    Vector a = evaluate(*n.children[0], ctx, assignment);
    Vector b = evaluate(*n.children[1], ctx, assignment);
    if (a.empty() || b.empty()) return {};
    return ctx.yamagutian(a, b);
  }
  case K::jacobian: {
    Vector a = evaluate(*n.children[0], ctx, assignment);
    Vector b = evaluate(*n.children[1], ctx, assignment);
    Vector c = evaluate(*n.children[2], ctx, assignment);
    if (a.empty() || b.empty() || c.empty()) return {};
    return jacobian(ctx.M(), a, b, c);
  }
  case K::bracket: {
    Vector a = evaluate(*n.children[0], ctx, assignment);
    Vector b = evaluate(*n.children[1], ctx, assignment);
    if (a.empty() || b.empty()) return {};
    return n.sort == Sort::M ? ctx.M().bracket(a, b) : ctx.lbracket(a, b);
  }
  case K::scale: {
    Vector v = evaluate(*n.children[0], ctx, assignment);
    if (v.empty()) return {};
    return n.coefficient * v;
  }
  case K::sum: {
    Vector acc;
    for (const auto& c : n.children) accumulate(acc, 1, evaluate(*c, ctx, assignment));
    return acc;
  }
  }
  return {};
}

std::optional<Witness> evaluate_at(const Identity& id, const TripleContext& ctx, std::span<const Vector> assignment) {
  std::vector<Vector> values;
  values.reserve(id.sides.size());
  for (const auto& s : id.sides) {
    Vector v = evaluate(*s, ctx, assignment);
    if (v.empty()) v = zero_vector(ctx.L().dim());
    values.push_back(std::move(v));
  }
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    if (Vector r = values[i] - values[i + 1]; !is_zero(r))
      return Witness{"link " + std::to_string(i + 1), {}, std::move(r)};
  return std::nullopt;
}

Verdict eval_identity(const Identity& id, const TripleContext& ctx, const SweepOptions& opts) {
  const std::size_t arity = id.free_variables.size();
  return sweep(arity, ctx.dim_m(), [&](std::span<const std::size_t> t) -> std::optional<Witness> {
    std::vector<Vector> assignment(4);
    for (std::size_t i = 0; i < arity; ++i) assignment[id.free_variables[i]] = ctx.M().element(t[i]);
    return evaluate_at(id, ctx, assignment);
  }, opts);
}

} // namespace mmpair::dsl
