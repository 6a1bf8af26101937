#include "dwsynth/formula_text.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "dwsynth/errors.hpp"

namespace dwsynth {

namespace {

enum class Tok {
  Ident,
  Number,
  LParen,
  RParen,
  Dot,
  Amp,
  Pipe,
  Bang,
  Eq,
  Lt,
  Tilde,
  Plus,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      if (pos_ >= src_.size()) break;
      const std::size_t line = line_, col = col_;
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string word;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_')) {
          word.push_back(src_[pos_]);
          advance();
        }
        out.push_back({Tok::Ident, std::move(word), line, col});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          num.push_back(src_[pos_]);
          advance();
        }
        out.push_back({Tok::Number, std::move(num), line, col});
        continue;
      }
      Tok kind;
      switch (c) {
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '.': kind = Tok::Dot; break;
        case '&': kind = Tok::Amp; break;
        case '|': kind = Tok::Pipe; break;
        case '!': kind = Tok::Bang; break;
        case '=': kind = Tok::Eq; break;
        case '<': kind = Tok::Lt; break;
        case '~': kind = Tok::Tilde; break;
        case '+': kind = Tok::Plus; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'",
                           line, col);
      }
      out.push_back({kind, std::string(1, c), line, col});
      advance();
    }
    out.push_back({Tok::End, "", line_, col_});
    return out;
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Signature& sig)
      : toks_(std::move(tokens)), sig_(sig) {}

  Formula parse() {
    Formula f = parse_or();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = idx_ + ahead;
    return toks_[i < toks_.size() ? i : toks_.size() - 1];
  }
  Token take() { return toks_[idx_ < toks_.size() - 1 ? idx_++ : idx_]; }

  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw ParseError(msg, at.line, at.col);
  }

  Token expect(Tok kind, const std::string& what) {
    if (peek().kind != kind)
      fail("expected " + what +
               (peek().kind == Tok::End ? " but input ended"
                                        : " before '" + peek().text + "'"),
           peek());
    return take();
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (peek().kind == Tok::Pipe) {
      take();
      f = Formula::disj(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (peek().kind == Tok::Amp) {
      take();
      f = Formula::conj(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    if (peek().kind == Tok::Bang) {
      take();
      return Formula::negation(parse_unary());
    }
    if (peek().kind == Tok::Ident &&
        (peek().text == "E" || peek().text == "A")) {
      const bool is_exists = peek().text == "E";
      take();
      Token var = expect(Tok::Ident, "a variable name");
      check_variable(var);
      expect(Tok::Dot, "'.'");
      Formula body = parse_or();  // quantifier scope extends maximally right
      return is_exists ? Formula::exists(var.text, std::move(body))
                       : Formula::forall(var.text, std::move(body));
    }
    return parse_primary();
  }

  Formula parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::LParen: {
        take();
        Formula f = parse_or();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Ident:
        if (t.text == "true") {
          take();
          return Formula::truth();
        }
        if (t.text == "false") {
          take();
          return Formula::falsity();
        }
        return parse_atom();
      default:
        fail("expected a formula" + (t.kind == Tok::End
                                         ? std::string(" but input ended")
                                         : " before '" + t.text + "'"),
             t);
    }
  }

  Formula parse_atom() {
    Token head = take();  // Ident
    if (peek().kind == Tok::LParen) {
      take();
      Token arg = expect(Tok::Ident, "a variable name");
      check_variable(arg);
      expect(Tok::RParen, "')'");
      if (head.text == "ProcS") return Formula::proc(ProcClass::Sys, arg.text);
      if (head.text == "ProcE") return Formula::proc(ProcClass::Env, arg.text);
      if (head.text == "ProcM")
        return Formula::proc(ProcClass::Mixed, arg.text);
      if (head.text.rfind("Proc", 0) == 0)
        fail("unknown predicate '" + head.text + "'", head);
      if (!sig_.contains(head.text))
        fail("unknown action name '" + head.text + "'", head);
      return Formula::action(head.text, arg.text);
    }
    check_variable(head);
    const Token op = take();
    switch (op.kind) {
      case Tok::Eq: {
        Token rhs = expect(Tok::Ident, "a variable name");
        check_variable(rhs);
        if (peek().kind == Tok::Plus) {
          take();
          Token one = expect(Tok::Number, "'1'");
          if (one.text != "1") fail("only successor '+1' is supported", one);
          return Formula::succ(head.text, rhs.text);
        }
        return Formula::eq(head.text, rhs.text);
      }
      case Tok::Lt: {
        Token rhs = expect(Tok::Ident, "a variable name");
        check_variable(rhs);
        return Formula::lt(head.text, rhs.text);
      }
      case Tok::Tilde: {
        Token rhs = expect(Tok::Ident, "a variable name");
        check_variable(rhs);
        return Formula::sim(head.text, rhs.text);
      }
      default:
        fail("expected '(', '=', '<' or '~'" +
                 (op.kind == Tok::End ? std::string(" but input ended")
                                      : " before '" + op.text + "'"),
             op);
    }
  }

  void check_variable(const Token& t) const {
    if (Signature::is_reserved_word(t.text))
      fail("'" + t.text + "' is reserved and cannot name a variable", t);
  }

  std::vector<Token> toks_;
  const Signature& sig_;
  std::size_t idx_ = 0;
};

// Printer precedence: quantifier 0, | 1, & 2, ! 3, atoms 4.
int formula_prec(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      return 0;
    case FormulaKind::Or:
      return 1;
    case FormulaKind::And:
      return 2;
    case FormulaKind::Not:
      return 3;
    default:
      return 4;
  }
}

void render_rec(const Formula& f, int min_prec, std::string& out) {
  const int prec = formula_prec(f);
  const bool wrap = prec < min_prec;
  if (wrap) out.push_back('(');
  switch (f.kind()) {
    case FormulaKind::Action:
      out += f.action_name();
      out.push_back('(');
      out += f.var1();
      out.push_back(')');
      break;
    case FormulaKind::Proc:
      out += f.proc_class() == ProcClass::Sys   ? "ProcS"
             : f.proc_class() == ProcClass::Env ? "ProcE"
                                                : "ProcM";
      out.push_back('(');
      out += f.var1();
      out.push_back(')');
      break;
    case FormulaKind::Eq:
      out += f.var1() + " = " + f.var2();
      break;
    case FormulaKind::Lt:
      out += f.var1() + " < " + f.var2();
      break;
    case FormulaKind::Succ:
      out += f.var1() + " = " + f.var2() + "+1";
      break;
    case FormulaKind::Sim:
      out += f.var1() + " ~ " + f.var2();
      break;
    case FormulaKind::True:
      out += "true";
      break;
    case FormulaKind::False:
      out += "false";
      break;
    case FormulaKind::Not:
      out.push_back('!');
      render_rec(f.child(), 3, out);
      break;
    case FormulaKind::And:
      render_rec(f.left(), 2, out);
      out += " & ";
      render_rec(f.right(), 3, out);
      break;
    case FormulaKind::Or:
      render_rec(f.left(), 1, out);
      out += " | ";
      render_rec(f.right(), 2, out);
      break;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      out += f.kind() == FormulaKind::Exists ? "E " : "A ";
      out += f.binder();
      out += ". ";
      render_rec(f.child(), 0, out);
      break;
  }
  if (wrap) out.push_back(')');
}

std::vector<std::string> parse_brace_list(std::string_view text,
                                          std::size_t& pos,
                                          const std::string& what) {
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '{')
    throw InputError("expected '{' in " + what);
  ++pos;
  std::vector<std::string> names;
  while (true) {
    skip_ws();
    if (pos < text.size() && text[pos] == '}') {
      ++pos;
      break;
    }
    std::string name;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_')) {
      name.push_back(text[pos]);
      ++pos;
    }
    if (name.empty())
      throw InputError("expected a name in " + what);
    names.push_back(std::move(name));
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    skip_ws();
    if (pos >= text.size() || text[pos] != '}')
      throw InputError("expected ',' or '}' in " + what);
    ++pos;
    break;
  }
  return names;
}

}  // namespace

Formula parse_formula(std::string_view text, const Signature& sig) {
  Lexer lexer(text);
  Parser parser(lexer.run(), sig);
  return parser.parse();
}

std::string render_formula(const Formula& f) {
  std::string out;
  render_rec(f, 0, out);
  return out;
}

Signature parse_signature_spec(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  std::vector<std::string> sys, env;
  bool saw_sys = false, saw_env = false;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    const char side = text[pos];
    if (side != 'S' && side != 'E')
      throw InputError("signature spec: expected 'S' or 'E'");
    ++pos;
    skip_ws();
    if (pos >= text.size() || text[pos] != '=')
      throw InputError("signature spec: expected '='");
    ++pos;
    auto names = parse_brace_list(text, pos, "signature spec");
    if (side == 'S') {
      if (saw_sys) throw InputError("signature spec: duplicate S part");
      saw_sys = true;
      sys = std::move(names);
    } else {
      if (saw_env) throw InputError("signature spec: duplicate E part");
      saw_env = true;
      env = std::move(names);
    }
  }
  if (!saw_sys && !saw_env)
    throw InputError("signature spec: expected S={..} and/or E={..}");
  return Signature(std::move(sys), std::move(env));
}

std::string render_signature_spec(const Signature& sig) {
  std::string out = "S={";
  for (std::size_t i = 0; i < sig.sys_actions().size(); ++i) {
    if (i) out.push_back(',');
    out += sig.sys_actions()[i];
  }
  out += "} E={";
  for (std::size_t i = 0; i < sig.env_actions().size(); ++i) {
    if (i) out.push_back(',');
    out += sig.env_actions()[i];
  }
  out += "}";
  return out;
}

FormulaFileContents parse_formula_file_text(
    std::string_view text, const std::optional<Signature>& fallback) {
  // Find the first non-comment, non-blank line; a `sig ` prefix makes it
  // the signature header, the rest of the file is the formula.
  std::size_t pos = 0;
  std::optional<Signature> sig;
  bool from_file = false;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string_view::npos || line[start] == '#') {
      pos = eol + (eol < text.size() ? 1 : 0);
      continue;
    }
    if (line.substr(start, 4) == "sig " || line.substr(start) == "sig") {
      sig = parse_signature_spec(line.substr(start + 3));
      from_file = true;
      pos = eol + (eol < text.size() ? 1 : 0);
    }
    break;
  }
  if (!sig) sig = fallback;
  if (!sig)
    throw InputError(
        "no signature: add a `sig S={..} E={..}` header line or pass one "
        "explicitly");
  FormulaFileContents out{parse_formula(text.substr(pos), *sig), *sig,
                          from_file};
  return out;
}

FormulaFileContents load_formula_file(const std::string& path,
                                      const std::optional<Signature>& fallback) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open formula file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_formula_file_text(buf.str(), fallback);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string render_formula_file(const Formula& f, const Signature& sig) {
  return "sig " + render_signature_spec(sig) + "\n" + render_formula(f) + "\n";
}

}  // namespace dwsynth
