#include <cctype>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hf/literal.hpp"
#include "hf/syntax.hpp"

namespace hf {
namespace {

enum class Tok { end, ident, number, hash, zero_e, sym, lbrace };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t start = 0;
  std::size_t end = 0;
};

struct FunctionInfo {
  TermKind kind;
  int arity;  // 0 marks a separation term
  bool arith;
  bool set;
};

const std::unordered_map<std::string, FunctionInfo>& functions() {
  static const std::unordered_map<std::string, FunctionInfo> table = {
      {"S", {TermKind::succ, 1, true, false}},       {"exp", {TermKind::exp, 2, true, false}},
      {"pow", {TermKind::pow, 1, true, false}},      {"sumset", {TermKind::sumset, 1, true, false}},
      {"pairc", {TermKind::pairc, 2, true, false}},  {"rankc", {TermKind::rankc, 1, true, false}},
      {"sepc", {TermKind::sepc, 0, true, false}},    {"pair", {TermKind::pair, 2, false, true}},
      {"P", {TermKind::power, 1, false, true}},      {"U", {TermKind::union_, 1, false, true}},
      {"R", {TermKind::rank, 1, false, true}},       {"sep", {TermKind::sep, 0, false, true}},
      {"Sa", {TermKind::succ_a, 1, true, true}},     {"add_a", {TermKind::add_a, 2, true, true}},
      {"mul_a", {TermKind::mul_a, 2, true, true}},   {"exp_a", {TermKind::exp_a, 2, true, true}},
      {"csucc", {TermKind::csucc, 1, false, true}},  {"cadd", {TermKind::cadd, 2, false, true}},
      {"cprod", {TermKind::cprod, 2, false, true}},  {"cexp", {TermKind::cexp, 2, false, true}},
      {"osucc", {TermKind::osucc, 1, false, true}},  {"oadd", {TermKind::oadd, 2, false, true}},
      {"omul", {TermKind::omul, 2, false, true}},    {"oexp", {TermKind::oexp, 2, false, true}},
  };
  return table;
}

bool is_keyword(const std::string& s) {
  return s == "forall" || s == "exists" || s == "in" || s == "Ord" || s == "Dom";
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(std::string_view src, Language lang) : s_(src), lang_(lang) {}

  FormulaPtr whole_formula() {
    FormulaPtr f = formula();
    expect_end();
    return f;
  }

  TermPtr whole_term() {
    TermPtr t = term();
    expect_end();
    return t;
  }

 private:
  std::string_view s_;
  Language lang_;
  std::size_t pos_ = 0;

  static constexpr std::pair<std::string_view, std::string_view> kAliases[] = {
      {"\xC2\xAC", "!"},           // ¬
      {"\xE2\x88\xA7", "&"},       // ∧
      {"\xE2\x88\xA8", "|"},       // ∨
      {"\xE2\x86\x92", "->"},      // →
      {"\xE2\x89\x83_c", "~_c"},   // ≃_c
      {"\xE2\x88\x80", "forall"},  // ∀
      {"\xE2\x88\x83", "exists"},  // ∃
      {"\xE2\x88\x88", "in"},      // ∈
  };

  Token lex() const {
    std::size_t p = pos_;
    while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
    Token t;
    t.start = p;
    if (p >= s_.size()) {
      t.end = p;
      return t;
    }
    const char c = s_[p];
    if (c == '0' && p + 1 < s_.size() && s_[p + 1] == 'e' && (p + 2 >= s_.size() || !ident_char(s_[p + 2]))) {
      t.kind = Tok::zero_e;
      t.text = "0e";
      t.end = p + 2;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t q = p;
      while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) ++q;
      t.kind = Tok::number;
      t.text = std::string(s_.substr(p, q - p));
      t.end = q;
      return t;
    }
    if (c == '#') {
      std::size_t q = p + 1;
      while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) ++q;
      if (q == p + 1) throw SyntaxError("expected digits after '#'", p + 1);
      t.kind = Tok::hash;
      t.text = std::string(s_.substr(p + 1, q - p - 1));
      t.end = q;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t q = p;
      while (q < s_.size() && ident_char(s_[q])) ++q;
      t.kind = Tok::ident;
      t.text = std::string(s_.substr(p, q - p));
      t.end = q;
      return t;
    }
    if (c == '{') {
      t.kind = Tok::lbrace;
      t.text = "{";
      t.end = p + 1;
      return t;
    }
    for (auto [from, to] : kAliases) {
      if (s_.substr(p, from.size()) == from) {
        t.kind = (to == "forall" || to == "exists" || to == "in") ? Tok::ident : Tok::sym;
        t.text = std::string(to);
        t.end = p + from.size();
        return t;
      }
    }
    static constexpr std::string_view kSymbols[] = {"<=_c", "<_a", "<_c", "~_c", "->", "(", ")", ",",
                                                     ".",    "+",   "*",   "=",   "<",  "!", "&", "|"};
    for (auto sym : kSymbols) {
      if (s_.substr(p, sym.size()) == sym) {
        t.kind = Tok::sym;
        t.text = std::string(sym);
        t.end = p + sym.size();
        return t;
      }
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", p);
  }

  Token peek() const { return lex(); }
  Token next() {
    Token t = lex();
    pos_ = t.end;
    return t;
  }

  bool peek_sym(std::string_view sym) const {
    Token t = peek();
    return t.kind == Tok::sym && t.text == sym;
  }
  bool peek_ident(std::string_view id) const {
    Token t = peek();
    return t.kind == Tok::ident && t.text == id;
  }
  bool accept_sym(std::string_view sym) {
    if (!peek_sym(sym)) return false;
    next();
    return true;
  }
  void expect_sym(std::string_view sym) {
    Token t = peek();
    if (t.kind != Tok::sym || t.text != sym) throw SyntaxError("expected '" + std::string(sym) + "'", t.start);
    next();
  }
  void expect_ident(std::string_view id) {
    Token t = peek();
    if (t.kind != Tok::ident || t.text != id) throw SyntaxError("expected '" + std::string(id) + "'", t.start);
    next();
  }
  void expect_end() {
    Token t = peek();
    if (t.kind != Tok::end) throw SyntaxError("unexpected trailing input", t.start);
  }
  std::string variable() {
    Token t = peek();
    if (t.kind != Tok::ident || is_keyword(t.text) || functions().contains(t.text))
      throw SyntaxError("expected a variable name", t.start);
    next();
    return t.text;
  }

  FormulaPtr formula() {
    FormulaPtr a = disjunction();
    if (accept_sym("->")) return Formula::binary(FormulaKind::implies, a, formula());
    return a;
  }

  FormulaPtr disjunction() {
    FormulaPtr a = conjunction();
    while (accept_sym("|")) a = Formula::binary(FormulaKind::or_, a, conjunction());
    return a;
  }

  FormulaPtr conjunction() {
    FormulaPtr a = unary();
    while (accept_sym("&")) a = Formula::binary(FormulaKind::and_, a, unary());
    return a;
  }

  FormulaPtr unary() {
    if (accept_sym("!")) return Formula::negation(unary());
    if (peek_ident("forall") || peek_ident("exists")) return quantifier();
    if (peek_sym("(")) {
      const std::size_t saved = pos_;
      try {
        next();
        FormulaPtr f = formula();
        expect_sym(")");
        return f;
      } catch (const SyntaxError& as_formula) {
        pos_ = saved;
        try {
          return atom();
        } catch (const SyntaxError& as_atom) {
          if (as_formula.position() > as_atom.position()) throw as_formula;
          throw;
        }
      }
    }
    return atom();
  }

  FormulaPtr quantifier() {
    const FormulaKind kind = next().text == "forall" ? FormulaKind::forall : FormulaKind::exists;
    std::string v = variable();
    BoundKind bk = BoundKind::none;
    TermPtr bound;
    if (accept_sym("<_a")) {
      bk = BoundKind::lt_a;
    } else if (lang_ == Language::arith && accept_sym("<")) {
      bk = BoundKind::lt;
    } else if (lang_ == Language::set && peek_ident("in")) {
      next();
      bk = BoundKind::in;
    }
    if (bk != BoundKind::none) bound = term();
    expect_sym(".");
    return Formula::quantifier(kind, std::move(v), bk, std::move(bound), formula());
  }

  FormulaPtr atom() {
    if (peek_ident("Dom")) {
      next();
      expect_sym("(");
      std::string v = variable();
      expect_sym(")");
      return Formula::dom(std::move(v));
    }
    TermPtr a = term();
    Token rel = peek();
    if (rel.kind == Tok::sym) {
      FormulaKind k;
      if (rel.text == "=") {
        k = FormulaKind::eq;
      } else if (rel.text == "<_a") {
        k = FormulaKind::less_a;
      } else if (rel.text == "<" && lang_ == Language::arith) {
        k = FormulaKind::lt;
      } else if (rel.text == "<_c" && lang_ == Language::set) {
        k = FormulaKind::card_lt;
      } else if (rel.text == "<=_c" && lang_ == Language::set) {
        k = FormulaKind::card_le;
      } else if (rel.text == "~_c" && lang_ == Language::set) {
        k = FormulaKind::card_eq;
      } else {
        throw SyntaxError("expected a relation symbol", rel.start);
      }
      next();
      return Formula::atom(k, a, term());
    }
    if (rel.kind == Tok::ident && rel.text == "in" && lang_ == Language::set) {
      next();
      if (peek_ident("Ord")) {
        next();
        return Formula::in_ordinals(a);
      }
      return Formula::atom(FormulaKind::mem, a, term());
    }
    throw SyntaxError("expected a relation symbol", rel.start);
  }

  TermPtr term() {
    if (lang_ == Language::set) return primary();
    TermPtr a = product();
    while (accept_sym("+")) a = Term::app(TermKind::add, {a, product()});
    return a;
  }

  TermPtr product() {
    TermPtr a = primary();
    while (accept_sym("*")) a = Term::app(TermKind::mul, {a, primary()});
    return a;
  }

  TermPtr primary() {
    Token t = peek();
    switch (t.kind) {
      case Tok::number:
        if (lang_ != Language::arith) throw SyntaxError("numerals belong to the arithmetic language; use #n", t.start);
        next();
        if (t.text.find_first_not_of('0') == std::string::npos) return Term::zero();
        return Term::natural(Code::from_decimal(t.text));
      case Tok::zero_e:
        if (lang_ != Language::set) throw SyntaxError("0e belongs to the set language", t.start);
        next();
        return Term::zero();
      case Tok::hash:
        if (lang_ != Language::set) throw SyntaxError("#n belongs to the set language", t.start);
        next();
        return Term::literal(decode(Code::from_decimal(t.text)));
      case Tok::lbrace: {
        if (lang_ != Language::set) throw SyntaxError("set literals belong to the set language", t.start);
        std::size_t p = t.start;
        HFSet s = parse_set_literal_at(s_, p);
        pos_ = p;
        return Term::literal(s);
      }
      case Tok::sym:
        if (t.text == "(") {
          next();
          TermPtr inner = term();
          expect_sym(")");
          return inner;
        }
        throw SyntaxError("expected a term", t.start);
      case Tok::ident:
        return application_or_var();
      case Tok::end:
        break;
    }
    throw SyntaxError("expected a term", t.start);
  }

  TermPtr application_or_var() {
    Token t = peek();
    auto it = functions().find(t.text);
    if (it == functions().end()) return Term::var(variable());
    const FunctionInfo& info = it->second;
    if (!(lang_ == Language::arith ? info.arith : info.set))
      throw SyntaxError("'" + t.text + "' is not a " + language_name(lang_) + " function symbol", t.start);
    next();
    expect_sym("(");
    if (info.arity == 0) {
      std::string v = variable();
      expect_ident("in");
      TermPtr bound = term();
      expect_sym(",");
      const std::size_t body_start = peek().start;
      FormulaPtr body = formula();
      if (!is_bounded(body)) throw SyntaxError("separation formula must be bounded", body_start);
      expect_sym(")");
      return Term::separation(info.kind, std::move(v), std::move(bound), std::move(body));
    }
    std::vector<TermPtr> args;
    args.push_back(term());
    for (int i = 1; i < info.arity; ++i) {
      expect_sym(",");
      args.push_back(term());
    }
    expect_sym(")");
    return Term::app(info.kind, std::move(args));
  }
};

}  // namespace

FormulaPtr parse_formula(std::string_view src, Language lang) { return Parser(src, lang).whole_formula(); }
TermPtr parse_term(std::string_view src, Language lang) { return Parser(src, lang).whole_term(); }
ArithFormula parse_arith(std::string_view src) { return {parse_formula(src, Language::arith)}; }
SetFormula parse_set(std::string_view src) { return {parse_formula(src, Language::set)}; }

}  // namespace hf
