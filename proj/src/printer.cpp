#include "hf/literal.hpp"
#include "hf/syntax.hpp"

namespace hf {
namespace {

const char* function_name(TermKind k) {
  switch (k) {
    case TermKind::succ: return "S";
    case TermKind::exp: return "exp";
    case TermKind::pow: return "pow";
    case TermKind::sumset: return "sumset";
    case TermKind::pairc: return "pairc";
    case TermKind::rankc: return "rankc";
    case TermKind::sepc: return "sepc";
    case TermKind::pair: return "pair";
    case TermKind::power: return "P";
    case TermKind::union_: return "U";
    case TermKind::rank: return "R";
    case TermKind::sep: return "sep";
    case TermKind::succ_a: return "Sa";
    case TermKind::add_a: return "add_a";
    case TermKind::mul_a: return "mul_a";
    case TermKind::exp_a: return "exp_a";
    case TermKind::csucc: return "csucc";
    case TermKind::cadd: return "cadd";
    case TermKind::cprod: return "cprod";
    case TermKind::cexp: return "cexp";
    case TermKind::osucc: return "osucc";
    case TermKind::oadd: return "oadd";
    case TermKind::omul: return "omul";
    case TermKind::oexp: return "oexp";
    default: return "?";
  }
}

constexpr std::size_t kMaxHashLiteralBits = 4096;

class Printer {
 public:
  explicit Printer(Language lang) : lang_(lang) {}

  // Precedence: 1 sum, 2 product, 3 primary.
  void term(const TermPtr& t, int ctx, std::string& out) const {
    switch (t->kind) {
      case TermKind::var:
        out += t->name;
        return;
      case TermKind::zero:
        out += lang_ == Language::arith ? "0" : "0e";
        return;
      case TermKind::nat:
        out += t->nat.to_decimal();
        return;
      case TermKind::set_literal:
        if (const Code* c = t->set.code(); c && c->bit_length() <= kMaxHashLiteralBits) {
          out += '#';
          out += c->to_decimal();
        } else {
          out += print_set_literal(t->set);
        }
        return;
      case TermKind::add:
      case TermKind::mul: {
        const int prec = t->kind == TermKind::add ? 1 : 2;
        if (ctx > prec) out += '(';
        term(t->args[0], prec, out);
        out += t->kind == TermKind::add ? " + " : " * ";
        term(t->args[1], prec + 1, out);
        if (ctx > prec) out += ')';
        return;
      }
      case TermKind::sep:
      case TermKind::sepc:
        out += function_name(t->kind);
        out += '(';
        out += t->name;
        out += " in ";
        term(t->args[0], 0, out);
        out += ", ";
        formula(t->body, 0, out);
        out += ')';
        return;
      default:
        out += function_name(t->kind);
        out += '(';
        for (std::size_t i = 0; i < t->args.size(); ++i) {
          if (i) out += ", ";
          term(t->args[i], 0, out);
        }
        out += ')';
        return;
    }
  }

  // Precedence: 0 quantifier, 1 ->, 2 |, 3 &, 4 ! and atoms.
  void formula(const FormulaPtr& f, int ctx, std::string& out) const {
    switch (f->kind) {
      case FormulaKind::dom:
        out += "Dom(" + f->var + ")";
        return;
      case FormulaKind::in_ord:
        term(f->terms[0], 0, out);
        out += " in Ord";
        return;
      case FormulaKind::not_: {
        out += '!';
        const FormulaPtr& g = f->subs[0];
        const bool wrap = g->is_atom() || g->is_quantifier() || g->kind != FormulaKind::not_;
        if (wrap) out += '(';
        formula(g, wrap ? 0 : 4, out);
        if (wrap) out += ')';
        return;
      }
      case FormulaKind::and_:
      case FormulaKind::or_:
      case FormulaKind::implies: {
        const int prec = f->kind == FormulaKind::implies ? 1 : f->kind == FormulaKind::or_ ? 2 : 3;
        const char* op = f->kind == FormulaKind::implies ? " -> " : f->kind == FormulaKind::or_ ? " | " : " & ";
        if (ctx > prec) out += '(';
        // -> associates to the right; & and | to the left.
        formula(f->subs[0], f->kind == FormulaKind::implies ? prec + 1 : prec, out);
        out += op;
        formula(f->subs[1], f->kind == FormulaKind::implies ? prec : prec + 1, out);
        if (ctx > prec) out += ')';
        return;
      }
      case FormulaKind::forall:
      case FormulaKind::exists:
        if (ctx > 0) out += '(';
        out += f->kind == FormulaKind::forall ? "forall " : "exists ";
        out += f->var;
        switch (f->bound_kind) {
          case BoundKind::none: break;
          case BoundKind::lt: out += " < "; break;
          case BoundKind::lt_a: out += " <_a "; break;
          case BoundKind::in: out += " in "; break;
        }
        if (f->bound) term(f->bound, 0, out);
        out += ". ";
        formula(f->subs[0], 0, out);
        if (ctx > 0) out += ')';
        return;
      default: {
        term(f->terms[0], 0, out);
        switch (f->kind) {
          case FormulaKind::eq: out += " = "; break;
          case FormulaKind::lt: out += " < "; break;
          case FormulaKind::less_a: out += " <_a "; break;
          case FormulaKind::mem: out += " in "; break;
          case FormulaKind::card_eq: out += " \xE2\x89\x83_c "; break;
          case FormulaKind::card_lt: out += " <_c "; break;
          case FormulaKind::card_le: out += " <=_c "; break;
          default: break;
        }
        term(f->terms[1], 0, out);
        return;
      }
    }
  }

 private:
  Language lang_;
};

}  // namespace

std::string print(const FormulaPtr& f, Language lang) {
  std::string out;
  Printer(lang).formula(f, 0, out);
  return out;
}

std::string print(const TermPtr& t, Language lang) {
  std::string out;
  Printer(lang).term(t, 0, out);
  return out;
}

}  // namespace hf
