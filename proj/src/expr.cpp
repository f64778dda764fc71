#include "chiro/expr.hpp"

#include <cctype>
#include <functional>
#include <map>

#include "chiro/compose.hpp"
#include "chiro/formats.hpp"
#include "chiro/polycalc.hpp"

namespace chiro {

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.name != b.name || a.ints != b.ints || a.path != b.path || a.root != b.root ||
      a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!(*a.children[i] == *b.children[i])) return false;
  return true;
}

namespace {

struct Token {
  enum class Type { Ident, Int, String, LParen, RParen, Comma, Join, Meet, End };
  Type type;
  std::string text;
  int line;
  int col;
};

const char* describe(Token::Type t) {
  switch (t) {
    case Token::Type::Ident: return "identifier";
    case Token::Type::Int: return "integer";
    case Token::Type::String: return "string";
    case Token::Type::LParen: return "'('";
    case Token::Type::RParen: return "')'";
    case Token::Type::Comma: return "','";
    case Token::Type::Join: return "'v'";
    case Token::Type::Meet: return "'^'";
    case Token::Type::End: return "end of input";
  }
  return "?";
}

[[noreturn]] void fail_at(Errc code, int line, int col, const std::string& msg) {
  fail(code, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  const auto advance = [&](std::size_t k) {
    for (; k > 0; --k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line, cl = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      std::string word(src.substr(i, j - i));
      out.push_back({word == "v" ? Token::Type::Join : Token::Type::Ident, word, l, cl});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c)) || (c == '-' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      std::size_t j = i + 1;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j - i > 9) fail_at(Errc::ParseError, l, cl, "integer literal too long");
      out.push_back({Token::Type::Int, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
    } else if (c == '"') {
      std::size_t j = i + 1;
      std::string s;
      while (j < src.size() && src[j] != '"') {
        if (src[j] == '\\' && j + 1 < src.size()) ++j;
        if (src[j] == '\n') fail_at(Errc::ParseError, l, cl, "unterminated string");
        s += src[j++];
      }
      if (j == src.size()) fail_at(Errc::ParseError, l, cl, "unterminated string");
      out.push_back({Token::Type::String, s, l, cl});
      advance(j + 1 - i);
    } else {
      Token::Type t;
      switch (c) {
        case '(': t = Token::Type::LParen; break;
        case ')': t = Token::Type::RParen; break;
        case ',': t = Token::Type::Comma; break;
        case '^': t = Token::Type::Meet; break;
        default: fail_at(Errc::ParseError, l, cl, std::string("unexpected character '") + c + "'");
      }
      out.push_back({t, std::string(1, c), l, cl});
      advance(1);
    }
  }
  out.push_back({Token::Type::End, "", line, col});
  return out;
}

// Integer-argument generators and their arity.
const std::map<std::string, std::size_t, std::less<>> kGenerators = {
    {"triangle", 0}, {"chi1", 0}, {"convex", 1}, {"chik", 1}, {"koch", 1}, {"dc", 1}};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (peek().type != Token::Type::End)
      fail_at(Errc::ParseError, peek().line, peek().col, std::string("unexpected ") + describe(peek().type));
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  const Token& expect(Token::Type t) {
    if (peek().type != t)
      fail_at(Errc::ParseError, peek().line, peek().col,
              std::string("expected ") + describe(t) + ", found " + describe(peek().type));
    return take();
  }

  ExprPtr expr() {
    ExprPtr lhs = primary();
    std::optional<Token::Type> op;
    while (peek().type == Token::Type::Join || peek().type == Token::Type::Meet) {
      const Token& t = take();
      if (op && *op != t.type)
        fail_at(Errc::ParseError, t.line, t.col, "mixing 'v' and '^' needs parentheses");
      op = t.type;
      ExprPtr rhs = primary();
      auto node = std::make_shared<Expr>();
      node->kind = t.type == Token::Type::Join ? Expr::Kind::Join : Expr::Kind::Meet;
      node->children = {lhs, rhs};
      lhs = node;
    }
    return lhs;
  }

  ExprPtr primary() {
    if (peek().type == Token::Type::LParen) {
      take();
      ExprPtr e = expr();
      expect(Token::Type::RParen);
      return e;
    }
    const Token& id = expect(Token::Type::Ident);
    const std::string& name = id.text;

    if (name == "join" || name == "meet" || name == "twist" || name == "flip") {
      const std::size_t arity = (name == "join" || name == "meet") ? 2 : 1;
      auto node = std::make_shared<Expr>();
      node->kind = name == "join"   ? Expr::Kind::Join
                   : name == "meet" ? Expr::Kind::Meet
                   : name == "twist" ? Expr::Kind::Twist
                                     : Expr::Kind::Flip;
      expect(Token::Type::LParen);
      node->children.push_back(expr());
      while (peek().type == Token::Type::Comma) {
        take();
        node->children.push_back(expr());
      }
      expect(Token::Type::RParen);
      if (node->children.size() != arity)
        fail_at(Errc::BadArity, id.line, id.col,
                name + " takes " + std::to_string(arity) + " argument" + (arity == 1 ? "" : "s") + ", got " +
                    std::to_string(node->children.size()));
      return node;
    }

    if (name == "load") {
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Load;
      expect(Token::Type::LParen);
      if (peek().type != Token::Type::String)
        fail_at(Errc::BadArity, id.line, id.col, "load takes a path string and an optional root");
      node->path = take().text;
      if (peek().type == Token::Type::Comma) {
        take();
        node->root = std::stol(expect(Token::Type::Int).text);
      }
      if (peek().type != Token::Type::RParen)
        fail_at(Errc::BadArity, id.line, id.col, "load takes a path string and an optional root");
      take();
      return node;
    }

    const auto g = kGenerators.find(name);
    if (g == kGenerators.end()) fail_at(Errc::UnknownIdentifier, id.line, id.col, "unknown identifier '" + name + "'");
    auto node = std::make_shared<Expr>();
    node->kind = Expr::Kind::Generator;
    node->name = name;
    if (peek().type == Token::Type::LParen) {
      take();
      if (peek().type != Token::Type::RParen) {
        node->ints.push_back(std::stol(expect(Token::Type::Int).text));
        while (peek().type == Token::Type::Comma) {
          take();
          node->ints.push_back(std::stol(expect(Token::Type::Int).text));
        }
      }
      expect(Token::Type::RParen);
    }
    if (node->ints.size() != g->second)
      fail_at(Errc::BadArity, id.line, id.col,
              name + " takes " + std::to_string(g->second) + " integer argument" + (g->second == 1 ? "" : "s"));
    return node;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

ExprPtr parse_expr(std::string_view src) { return Parser(lex(src)).parse(); }

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Join: return "join(" + print_expr(*e.children[0]) + ", " + print_expr(*e.children[1]) + ")";
    case Expr::Kind::Meet: return "meet(" + print_expr(*e.children[0]) + ", " + print_expr(*e.children[1]) + ")";
    case Expr::Kind::Twist: return "twist(" + print_expr(*e.children[0]) + ")";
    case Expr::Kind::Flip: return "flip(" + print_expr(*e.children[0]) + ")";
    case Expr::Kind::Load: return "load(" + quote(e.path) + (e.root ? ", " + std::to_string(*e.root) : "") + ")";
    case Expr::Kind::Generator: {
      if (e.ints.empty()) return e.name;
      std::string out = e.name + "(";
      for (std::size_t i = 0; i < e.ints.size(); ++i) out += (i ? ", " : "") + std::to_string(e.ints[i]);
      return out + ")";
    }
  }
  return {};
}

namespace {

int int_arg(const Expr& e) {
  const long v = e.ints.at(0);
  if (v < -1'000'000 || v > 1'000'000) fail(Errc::OutOfRange, e.name + " argument out of range");
  return static_cast<int>(v);
}

RootedChirotope leaf(const Expr& e) {
  if (e.kind == Expr::Kind::Load) {
    ChiFile f = load_chirotope_file(e.path);
    std::optional<Label> root = e.root ? std::optional<Label>(static_cast<Label>(*e.root)) : f.root;
    if (!root) fail(Errc::NotARootedChirotope, "'" + e.path + "' gives no root; use load(\"path\", root)");
    return RootedChirotope(std::move(f.chi), *root);
  }
  if (e.name == "triangle") return triangle();
  if (e.name == "chi1") return chi_k(1);
  if (e.name == "convex") return convex(int_arg(e));
  if (e.name == "chik") return chi_k(int_arg(e));
  if (e.name == "koch") return koch(int_arg(e));
  if (e.name == "dc") return double_circle(int_arg(e));
  fail(Errc::UnknownIdentifier, "unknown generator '" + e.name + "'");
}

// Element count of a generator, known before building it.
std::optional<long> generator_size(const Expr& e) {
  if (e.name == "triangle") return 3;
  if (e.name == "chi1") return 4;
  if (e.name == "convex") return e.ints[0];
  if (e.name == "chik") return 2 * e.ints[0] + 2;
  if (e.name == "koch" && e.ints[0] >= 0 && e.ints[0] < 30) return (1L << e.ints[0]) + 2;
  if (e.name == "dc") return 2 * e.ints[0];
  return std::nullopt;
}

void check_cap(long n, const EvalOptions& opt) {
  if (n > opt.enumeration.oracle_cap)
    fail(Errc::TooLarge, "result has " + std::to_string(n) + " elements, above the cap of " +
                             std::to_string(opt.enumeration.oracle_cap) + "; evaluate with --method poly");
}

}  // namespace

RootedChirotope eval_materialize(const Expr& e, const EvalOptions& opt) {
  switch (e.kind) {
    case Expr::Kind::Join:
    case Expr::Kind::Meet: {
      const RootedChirotope a = eval_materialize(*e.children[0], opt);
      const RootedChirotope b = eval_materialize(*e.children[1], opt);
      check_cap(a.size() + b.size() - 2, opt);
      return e.kind == Expr::Kind::Join ? join(a, b).result : meet(a, b).result;
    }
    case Expr::Kind::Twist: return twist(eval_materialize(*e.children[0], opt));
    case Expr::Kind::Flip: return flip(eval_materialize(*e.children[0], opt));
    case Expr::Kind::Generator:
      if (const auto n = generator_size(e)) check_cap(*n, opt);
      return leaf(e);
    case Expr::Kind::Load: {
      RootedChirotope rc = leaf(e);
      check_cap(rc.size(), opt);
      return rc;
    }
  }
  fail(Errc::InternalInvariantViolation, "bad expression node");
}

namespace {

BivarPoly chi_k_P(int k) {
  if (k < 1) fail(Errc::OutOfRange, "chi_k needs k >= 1");
  const BivarPoly tri = BivarPoly::monomial(2, 2);
  const BivarPoly chi1 = meet_P(tri, tri);
  BivarPoly cur = chi1;
  for (int i = 1; i < k; ++i) cur = join_P(cur, chi1);
  return cur;
}

}  // namespace

BivarPoly eval_polynomial(const Expr& e, const EvalOptions& opt) {
  switch (e.kind) {
    case Expr::Kind::Join: return join_P(eval_polynomial(*e.children[0], opt), eval_polynomial(*e.children[1], opt));
    case Expr::Kind::Meet: return meet_P(eval_polynomial(*e.children[0], opt), eval_polynomial(*e.children[1], opt));
    case Expr::Kind::Twist: return swap_vars(eval_polynomial(*e.children[0], opt));
    // Negating every orientation keeps the same non-crossing families.
    case Expr::Kind::Flip: return eval_polynomial(*e.children[0], opt);
    case Expr::Kind::Generator:
      if (e.name == "triangle") return BivarPoly::monomial(2, 2);
      if (e.name == "koch") return koch_P(int_arg(e));
      if (e.name == "chi1") return chi_k_P(1);
      if (e.name == "chik") return chi_k_P(int_arg(e));
      break;
    case Expr::Kind::Load: break;
  }
  return brute_P(eval_materialize(e, opt), opt.enumeration);
}

mpz_class eval_weak_count(const Expr& e, const EvalOptions& opt) {
  if (e.kind == Expr::Kind::Join || e.kind == Expr::Kind::Meet)
    return count_weak_join(eval_polynomial(*e.children[0], opt), eval_polynomial(*e.children[1], opt),
                           e.kind == Expr::Kind::Join ? CompositionKind::Join : CompositionKind::Meet);
  if (e.kind == Expr::Kind::Generator && e.name == "koch" && int_arg(e) >= 1) {
    const int level = int_arg(e);
    const BivarPoly prev = koch_P(level - 1);
    return count_weak_join(prev, prev, level % 2 == 1 ? CompositionKind::Join : CompositionKind::Meet);
  }
  if (e.kind == Expr::Kind::Twist || e.kind == Expr::Kind::Flip) return eval_weak_count(*e.children[0], opt);
  return eval_polynomial(e, opt).at_one();
}

}  // namespace chiro
