#include "hf/eval.hpp"

#include <array>
#include <optional>
#include <string>

#include "hf/cardinal.hpp"
#include "hf/interp.hpp"
#include "hf/order.hpp"

namespace hf {
namespace {

using Mask = std::uint64_t;
constexpr Mask kAllSlots = ~Mask{0};

Mask slot_bit(int s) { return s < 64 ? Mask{1} << s : kAllSlots; }

template <typename V>
struct Frame {
  std::vector<V> slots;
  const EvalContext* ctx = nullptr;
  bool at_cutoff = false;
};

template <typename V>
struct TermNode {
  Mask deps = 0;
  virtual ~TermNode() = default;
  virtual V eval(Frame<V>& fr) const = 0;
};

template <typename V>
struct FormNode {
  virtual ~FormNode() = default;
  virtual bool eval(Frame<V>& fr) const = 0;
};

template <typename V>
using TermP = std::unique_ptr<TermNode<V>>;
template <typename V>
using FormP = std::unique_ptr<FormNode<V>>;

// ---- the _a operations, shared by both models ----

bool literal_feasible(TermKind k, HFSet x, HFSet y, const EvalContext& ctx) {
  if (ctx.arith_mode != ArithMode::Kind::literal) return false;
  const Code* cx = x.code();
  const Code* cy = y.code();
  if (!cx || !cy) return false;
  const auto a = cx->to_u64();
  const auto b = cy->to_u64();
  if (!a || !b || *a > ctx.literal_cutoff || *b > ctx.literal_cutoff) return false;
  const std::uint64_t cap = ctx.literal_walk_budget;
  switch (k) {
    case TermKind::add_a: return *a + *b <= cap;
    case TermKind::mul_a: return *a == 0 || *b <= cap / *a;
    case TermKind::exp_a: {
      std::uint64_t r = 1;
      for (std::uint64_t i = 0; i < *b && r != 0; ++i) {
        if (*a != 0 && r > cap / *a) return false;
        r *= *a;
      }
      return true;
    }
    default: return false;
  }
}

HFSet apply_a(TermKind k, HFSet x, HFSet y, const EvalContext& ctx) {
  const Limits lim = ctx.limits();
  if (k == TermKind::succ_a) {
    if (ctx.corrupt_successor && x == empty()) return decode(2);
    return successor_a(x, lim);
  }
  const bool literal = literal_feasible(k, x, y, ctx);
  (literal ? ctx.stats->literal_ops : ctx.stats->fast_ops).fetch_add(1, std::memory_order_relaxed);
  const ArithMode mode = literal ? ArithMode::literal(ctx.literal_cutoff) : ArithMode::fast();
  switch (k) {
    case TermKind::add_a: return add_a(x, y, mode, lim);
    case TermKind::mul_a: return mul_a(x, y, mode, lim);
    default: return exp_a(x, y, mode, lim);
  }
}

[[noreturn]] void wrong_language(const char* what, Language lang) {
  throw LanguageMismatch(std::string(what) + " is not part of the " + language_name(lang) + " language");
}

void check_enumeration(const Code& bound, const EvalContext& ctx) {
  if (bound > Code{ctx.enumeration_budget})
    throw BudgetExceeded("quantifier bound " + (bound.bit_length() <= 64 ? bound.to_decimal() : std::string("2^") +
                                                    std::to_string(bound.bit_length() - 1) + "+") +
                         " exceeds the enumeration budget");
}

// Visits every set strictly below `target` in Ack order; visit returns true to stop.
template <typename F>
void for_each_ack_below(HFSet target, const EvalContext& ctx, F&& visit) {
  if (const Code* c = target.code()) check_enumeration(*c, ctx);
  AckCursor cur;
  std::uint64_t steps = 0;
  while (!(cur.current() == target)) {
    if (++steps > ctx.enumeration_budget) throw BudgetExceeded("Ack-order bound exceeds the enumeration budget");
    if (visit(cur.current())) return;
    cur.advance();
  }
}

// ---- models ----

struct ArithModel {
  using V = Code;
  static constexpr Language lang = Language::arith;

  static std::uint64_t cutoff(const EvalContext& ctx) { return ctx.nat_cutoff; }

  static Code to_code(const Code& v, const EvalContext&) { return v; }
  static Code from_code(const Code& c, const EvalContext&) { return c; }

  static Code literal(const TermPtr& t) {
    if (t->kind == TermKind::zero) return Code{};
    if (t->kind == TermKind::nat) return t->nat;
    wrong_language("a set literal", lang);
  }

  static std::size_t small_index(const Code& c, const EvalContext& ctx) {
    const auto v = c.to_u64();
    if (!v || *v >= ctx.code_budget) throw BudgetExceeded("bit index exceeds the code budget");
    return static_cast<std::size_t>(*v);
  }

  static Code apply(TermKind k, std::span<const Code> a, const EvalContext& ctx) {
    switch (k) {
      case TermKind::succ: return a[0] + Code{1};
      case TermKind::add: return a[0] + a[1];
      case TermKind::mul: {
        if (a[0].bit_length() + a[1].bit_length() > ctx.code_budget + 1)
          throw BudgetExceeded("product exceeds the code budget");
        return a[0] * a[1];
      }
      case TermKind::exp: {
        auto r = Code::pow(a[0], a[1], ctx.code_budget);
        if (!r) throw BudgetExceeded("power exceeds the code budget");
        return *r;
      }
      case TermKind::pow: {
        // Bit s is set for every sub-mask s of the argument.
        const std::size_t c = small_index(a[0], ctx);
        if (a[0].popcount() > 20) throw BudgetExceeded("power set exceeds the member budget");
        Code out;
        for (std::size_t s = c;; s = (s - 1) & c) {
          out.set_bit(s);
          if (s == 0) break;
        }
        return out;
      }
      case TermKind::sumset: {
        Code out;
        a[0].for_each_set_bit([&](std::size_t i) { out |= Code{static_cast<std::uint64_t>(i)}; });
        return out;
      }
      case TermKind::pairc: {
        Code out;
        out.set_bit(small_index(a[0], ctx));
        out.set_bit(small_index(a[1], ctx));
        return out;
      }
      case TermKind::rankc: {
        // The code of V_m is 2^|V_m| - 1 for the least m with a < |V_m|.
        for (std::uint32_t m = 0;; ++m) {
          const auto sz = level_size(m);
          if (!sz || *sz > ctx.code_budget) throw BudgetExceeded("rank level exceeds the code budget");
          if (a[0] < Code{*sz}) return Code::low_mask(static_cast<std::size_t>(*sz));
        }
      }
      case TermKind::succ_a:
      case TermKind::add_a:
      case TermKind::mul_a:
      case TermKind::exp_a: {
        const Limits lim = ctx.limits();
        const HFSet x = decode(a[0], lim);
        const HFSet y = a.size() > 1 ? decode(a[1], lim) : empty();
        return encode(apply_a(k, x, y, ctx), lim);
      }
      default: wrong_language("this function symbol", lang);
    }
  }

  static bool atom(FormulaKind k, const Code& a, const Code& b, const EvalContext& ctx) {
    switch (k) {
      case FormulaKind::eq: return a == b;
      case FormulaKind::lt: return a < b;
      case FormulaKind::less_a: return ack_less(decode(a, ctx.limits()), decode(b, ctx.limits()));
      default: wrong_language("this relation symbol", lang);
    }
  }

  static bool in_ordinals(const Code&, const EvalContext&) { wrong_language("Ord", lang); }

  template <typename F>
  static void for_each_below(BoundKind bk, const Code& bound, const EvalContext& ctx, F&& visit) {
    if (bk == BoundKind::lt) {
      check_enumeration(bound, ctx);
      const std::uint64_t n = *bound.to_u64();
      for (std::uint64_t i = 0; i < n; ++i)
        if (visit(Code{i})) return;
      return;
    }
    if (bk == BoundKind::lt_a) {
      check_enumeration(bound, ctx);
      const Limits lim = ctx.limits();
      for_each_ack_below(decode(bound, lim), ctx, [&](HFSet s) { return visit(encode(s, lim)); });
      return;
    }
    wrong_language("an `in` bound", lang);
  }

  template <typename F>
  static void for_each_unbounded(std::uint64_t n, const EvalContext&, F&& visit) {
    for (std::uint64_t i = 0; i < n; ++i)
      if (visit(Code{i})) return;
  }

  static bool within(BoundKind bk, const Code& v, const Code& bound, const EvalContext& ctx) {
    if (bk == BoundKind::lt) return v < bound;
    return ack_less(decode(v, ctx.limits()), decode(bound, ctx.limits()));
  }

  template <typename P>
  static Code separate(TermKind k, const Code& t, const EvalContext&, P&& pred) {
    if (k != TermKind::sepc) wrong_language("sep", lang);
    Code out;
    t.for_each_set_bit([&](std::size_t i) {
      if (pred(Code{static_cast<std::uint64_t>(i)})) out.set_bit(i);
    });
    return out;
  }
};

struct SetModel {
  using V = HFSet;
  static constexpr Language lang = Language::set;

  static std::uint64_t cutoff(const EvalContext& ctx) { return ctx.set_cutoff; }

  static Code to_code(HFSet v, const EvalContext& ctx) { return encode(v, ctx.limits()); }
  static HFSet from_code(const Code& c, const EvalContext& ctx) { return decode(c, ctx.limits()); }

  static HFSet literal(const TermPtr& t) {
    if (t->kind == TermKind::zero) return empty();
    if (t->kind == TermKind::set_literal) return t->set;
    wrong_language("a numeral", lang);
  }

  static HFSet apply(TermKind k, std::span<const HFSet> a, const EvalContext& ctx) {
    const Limits lim = ctx.limits();
    switch (k) {
      case TermKind::pair: return pair(a[0], a[1]);
      case TermKind::power: return powerset(a[0], lim);
      case TermKind::union_: return sumset(a[0]);
      case TermKind::rank: {
        LevelRef r = level_of(a[0], lim);
        if (!r.materialized) throw BudgetExceeded("R(x) is too large to materialize");
        return *r.materialized;
      }
      case TermKind::succ_a:
      case TermKind::add_a:
      case TermKind::mul_a:
      case TermKind::exp_a: return apply_a(k, a[0], a.size() > 1 ? a[1] : empty(), ctx);
      case TermKind::csucc: return card_succ(a[0]);
      case TermKind::cadd: return card_add(a[0], a[1], lim);
      case TermKind::cprod: return product(a[0], a[1], lim);
      case TermKind::cexp: return card_exp(a[0], a[1], lim);
      case TermKind::osucc: return ord_succ(a[0]);
      case TermKind::oadd: return ord_add(a[0], a[1], lim);
      case TermKind::omul: return ord_mul(a[0], a[1], lim);
      case TermKind::oexp: return ord_exp(a[0], a[1], lim);
      default: wrong_language("this function symbol", lang);
    }
  }

  static bool atom(FormulaKind k, HFSet a, HFSet b, const EvalContext&) {
    switch (k) {
      case FormulaKind::eq: return a == b;
      case FormulaKind::mem: return mem(a, b);
      case FormulaKind::less_a: return ack_less(a, b);
      case FormulaKind::card_eq: return card_eq(a, b);
      case FormulaKind::card_lt: return card_lt(a, b);
      case FormulaKind::card_le: return card_le(a, b);
      default: wrong_language("this relation symbol", lang);
    }
  }

  static bool in_ordinals(HFSet a, const EvalContext&) { return is_ordinal(a); }

  template <typename F>
  static void for_each_below(BoundKind bk, HFSet bound, const EvalContext& ctx, F&& visit) {
    if (bk == BoundKind::in) {
      for (HFSet m : bound.members())
        if (visit(m)) return;
      return;
    }
    if (bk == BoundKind::lt_a) {
      for_each_ack_below(bound, ctx, visit);
      return;
    }
    wrong_language("a `<` bound", lang);
  }

  template <typename F>
  static void for_each_unbounded(std::uint64_t n, const EvalContext& ctx, F&& visit) {
    for (std::uint64_t i = 0; i < n; ++i)
      if (visit(decode(Code{i}, ctx.limits()))) return;
  }

  static bool within(BoundKind bk, HFSet v, HFSet bound, const EvalContext&) {
    if (bk == BoundKind::in) return mem(v, bound);
    return ack_less(v, bound);
  }

  template <typename P>
  static HFSet separate(TermKind k, HFSet t, const EvalContext&, P&& pred) {
    if (k != TermKind::sep) wrong_language("sepc", lang);
    return hf::separate(t, [&](HFSet m) { return pred(m); });
  }
};

// ---- term nodes ----

template <typename M>
struct VarNode final : TermNode<typename M::V> {
  int slot;
  explicit VarNode(int s) : slot(s) { this->deps = slot_bit(s); }
  typename M::V eval(Frame<typename M::V>& fr) const override { return fr.slots[static_cast<std::size_t>(slot)]; }
};

template <typename M>
struct ConstNode final : TermNode<typename M::V> {
  typename M::V value;
  explicit ConstNode(typename M::V v) : value(std::move(v)) {}
  typename M::V eval(Frame<typename M::V>&) const override { return value; }
};

// Closed subterms are evaluated on first use and reused afterwards.
template <typename M>
struct CachedNode final : TermNode<typename M::V> {
  TermP<typename M::V> inner;
  mutable std::optional<typename M::V> cache;
  explicit CachedNode(TermP<typename M::V> t) : inner(std::move(t)) {}
  typename M::V eval(Frame<typename M::V>& fr) const override {
    if (!cache) cache = inner->eval(fr);
    return *cache;
  }
};

// Remembers the last arguments and result, so a subterm that only depends on
// outer variables is not recomputed inside inner loops.
template <typename M>
struct AppNode final : TermNode<typename M::V> {
  TermKind kind;
  std::vector<TermP<typename M::V>> args;
  mutable std::array<typename M::V, 2> last_args;
  mutable std::optional<typename M::V> last;
  typename M::V eval(Frame<typename M::V>& fr) const override {
    std::array<typename M::V, 2> vals;
    for (std::size_t i = 0; i < args.size(); ++i) vals[i] = args[i]->eval(fr);
    if (last && std::equal(vals.begin(), vals.begin() + static_cast<std::ptrdiff_t>(args.size()), last_args.begin()))
      return *last;
    last = M::apply(kind, std::span<const typename M::V>(vals.data(), args.size()), *fr.ctx);
    last_args = vals;
    return *last;
  }
};

template <typename M>
struct SepNode final : TermNode<typename M::V> {
  TermKind kind;
  int slot;
  TermP<typename M::V> bound;
  FormP<typename M::V> body;
  typename M::V eval(Frame<typename M::V>& fr) const override {
    return M::separate(kind, bound->eval(fr), *fr.ctx, [&](const typename M::V& v) {
      fr.slots[static_cast<std::size_t>(slot)] = v;
      return body->eval(fr);
    });
  }
};

// ---- formula nodes ----

template <typename M>
struct AtomNode final : FormNode<typename M::V> {
  FormulaKind kind;
  TermP<typename M::V> a, b;
  bool eval(Frame<typename M::V>& fr) const override { return M::atom(kind, a->eval(fr), b->eval(fr), *fr.ctx); }
};

template <typename M>
struct InOrdNode final : FormNode<typename M::V> {
  TermP<typename M::V> a;
  bool eval(Frame<typename M::V>& fr) const override { return M::in_ordinals(a->eval(fr), *fr.ctx); }
};

template <typename M>
struct TrueNode final : FormNode<typename M::V> {
  bool eval(Frame<typename M::V>&) const override { return true; }
};

template <typename M>
struct NotNode final : FormNode<typename M::V> {
  FormP<typename M::V> a;
  bool eval(Frame<typename M::V>& fr) const override { return !a->eval(fr); }
};

template <typename M>
struct BinNode final : FormNode<typename M::V> {
  FormulaKind kind;
  FormP<typename M::V> a, b;
  bool eval(Frame<typename M::V>& fr) const override {
    switch (kind) {
      case FormulaKind::and_: return a->eval(fr) && b->eval(fr);
      case FormulaKind::or_: return a->eval(fr) || b->eval(fr);
      default: return !a->eval(fr) || b->eval(fr);
    }
  }
};

template <typename M>
struct QuantNode final : FormNode<typename M::V> {
  bool forall;
  bool witness_search;
  int slot;
  BoundKind bk;
  TermP<typename M::V> bound;
  FormP<typename M::V> body;
  bool eval(Frame<typename M::V>& fr) const override {
    bool result = forall;
    auto visit = [&](const typename M::V& v) {
      fr.slots[static_cast<std::size_t>(slot)] = v;
      const bool b = body->eval(fr);
      if (b != forall) {
        result = b;
        return true;
      }
      return false;
    };
    if (bk == BoundKind::none) {
      fr.at_cutoff = true;
      const std::uint64_t n = M::cutoff(*fr.ctx);
      M::for_each_unbounded(witness_search ? n * fr.ctx->witness_scale : n, *fr.ctx, visit);
    } else {
      M::for_each_below(bk, bound->eval(fr), *fr.ctx, visit);
    }
    return result;
  }
};

// exists v < B. L = K + v (S1), or exists n < B. exists m < B'. L = c*n + K + m (S2).
template <typename M>
struct LinearSolverNode final : FormNode<typename M::V> {
  int slot_n = -1;  // -1 for S1
  int slot_m;
  BoundKind bk_n = BoundKind::none, bk_m;
  TermP<typename M::V> bound_n, bound_m, lhs, coef;
  std::vector<TermP<typename M::V>> constants;
  FormP<typename M::V> body;
  FormP<typename M::V> fallback;

  bool eval(Frame<typename M::V>& fr) const override {
    const EvalContext& ctx = *fr.ctx;
    if (!ctx.solve_witnesses) return fallback->eval(fr);
    const typename M::V bm = bound_m->eval(fr);
    Code cc;
    if (slot_n >= 0) {
      cc = M::to_code(coef->eval(fr), ctx);
      if (cc.is_zero() || M::to_code(bm, ctx) > cc) {
        ctx.stats->solver_fallbacks.fetch_add(1, std::memory_order_relaxed);
        return fallback->eval(fr);
      }
    }
    ctx.stats->solver_hits.fetch_add(1, std::memory_order_relaxed);
    const Code lc = M::to_code(lhs->eval(fr), ctx);
    Code kc;
    for (const auto& k : constants) kc += M::to_code(k->eval(fr), ctx);
    if (lc < kc) return false;
    Code rest = lc - kc;
    if (slot_n >= 0) {
      auto [q, r] = Code::divmod(rest, cc);
      const typename M::V n = M::from_code(q, ctx);
      if (!M::within(bk_n, n, bound_n->eval(fr), ctx)) return false;
      fr.slots[static_cast<std::size_t>(slot_n)] = n;
      rest = r;
    }
    const typename M::V m = M::from_code(rest, ctx);
    if (!M::within(bk_m, m, bm, ctx)) return false;
    fr.slots[static_cast<std::size_t>(slot_m)] = m;
    return body->eval(fr);
  }
};

// Q u < T. (bit(u, T) -> φ) or (bit(u, T) & φ): u ranges over the bits of T.
template <typename M>
struct BitGuardNode final : FormNode<typename M::V> {
  bool forall;
  int slot;
  BoundKind bk;
  TermP<typename M::V> bound;
  FormP<typename M::V> guard, rest, fallback;

  bool eval(Frame<typename M::V>& fr) const override {
    const EvalContext& ctx = *fr.ctx;
    if (!ctx.solve_witnesses) return fallback->eval(fr);
    ctx.stats->solver_hits.fetch_add(1, std::memory_order_relaxed);
    const typename M::V t = bound->eval(fr);
    const Code tc = M::to_code(t, ctx);
    bool result = forall;
    bool stop = false;
    tc.for_each_set_bit([&](std::size_t i) {
      if (stop) return;
      const typename M::V u = M::from_code(Code{static_cast<std::uint64_t>(i)}, ctx);
      if (!M::within(bk, u, t, ctx)) return;
      fr.slots[static_cast<std::size_t>(slot)] = u;
      if (!guard->eval(fr)) return;
      const bool r = rest->eval(fr);
      if (r != forall) {
        result = r;
        stop = true;
      }
    });
    return result;
  }
};

// ---- pattern recognition on the AST ----

bool is_add(TermKind k) { return k == TermKind::add || k == TermKind::add_a; }
bool is_mul(TermKind k) { return k == TermKind::mul || k == TermKind::mul_a; }

void flatten_sum(const TermPtr& t, std::vector<TermPtr>& out) {
  if (is_add(t->kind)) {
    flatten_sum(t->args[0], out);
    flatten_sum(t->args[1], out);
  } else {
    out.push_back(t);
  }
}

bool mentions(const TermPtr& t, const std::string& v) { return !v.empty() && free_vars(t).contains(v); }

bool is_var(const TermPtr& t, const std::string& v) { return t->kind == TermKind::var && t->name == v; }

struct LinearShape {
  TermPtr lhs;
  TermPtr coef;
  std::vector<TermPtr> constants;
};

// L = c*n + K + m with n optional (empty name).
std::optional<LinearShape> match_linear(const FormulaPtr& f, const std::string& n, const std::string& m) {
  if (f->kind != FormulaKind::eq) return std::nullopt;
  for (int side = 0; side < 2; ++side) {
    const TermPtr& lhs = f->terms[static_cast<std::size_t>(side)];
    const TermPtr& rhs = f->terms[static_cast<std::size_t>(1 - side)];
    if (mentions(lhs, n) || mentions(lhs, m)) continue;
    std::vector<TermPtr> summands;
    flatten_sum(rhs, summands);
    LinearShape shape{lhs, nullptr, {}};
    int m_count = 0;
    int n_count = 0;
    bool ok = true;
    for (const auto& s : summands) {
      if (is_var(s, m)) {
        ++m_count;
      } else if (!n.empty() && is_mul(s->kind) && (is_var(s->args[0], n) || is_var(s->args[1], n))) {
        const TermPtr& c = is_var(s->args[0], n) ? s->args[1] : s->args[0];
        if (mentions(c, n) || mentions(c, m)) ok = false;
        shape.coef = c;
        ++n_count;
      } else if (mentions(s, n) || mentions(s, m)) {
        ok = false;
      } else {
        shape.constants.push_back(s);
      }
    }
    if (ok && m_count == 1 && n_count == (n.empty() ? 0 : 1)) return shape;
  }
  return std::nullopt;
}

FormulaPtr bit_template_arith() { return membership_formula(Term::var("@u"), Term::var("@t")); }

// The membership formula, its d-image, and the a-image of that, with the
// placeholders @u/@t for the element and the bound.
const std::vector<FormulaPtr>& bit_templates(Language lang) {
  static const std::vector<FormulaPtr> arith = {bit_template_arith(),
                                                translate_a(translate_d({bit_template_arith()})).f};
  static const std::vector<FormulaPtr> set = {translate_d({bit_template_arith()}).f};
  return lang == Language::arith ? arith : set;
}

bool is_bit_guard(const FormulaPtr& g, const std::string& u, const TermPtr& bound, Language lang) {
  for (const auto& tpl : bit_templates(lang)) {
    FormulaPtr inst = substitute(substitute(tpl, "@t", bound), "@u", Term::var(u));
    if (alpha_equal(g, inst)) return true;
  }
  return false;
}

// ---- compiler ----

template <typename M>
class Compiler {
 public:
  using V = typename M::V;

  Compiler(const std::vector<std::string>& params) {
    for (const auto& p : params) bind(p);
  }

  int slots() const { return nslots_; }

  TermP<V> term(const TermPtr& t) {
    TermP<V> node = raw_term(t);
    if (node->deps == 0 && t->kind != TermKind::zero && t->kind != TermKind::nat && t->kind != TermKind::set_literal)
      return std::make_unique<CachedNode<M>>(std::move(node));
    return node;
  }

  FormP<V> formula(const FormulaPtr& f) {
    switch (f->kind) {
      case FormulaKind::dom: {
        lookup(f->var);
        return std::make_unique<TrueNode<M>>();
      }
      case FormulaKind::in_ord: {
        auto n = std::make_unique<InOrdNode<M>>();
        n->a = term(f->terms[0]);
        return n;
      }
      case FormulaKind::not_: {
        auto n = std::make_unique<NotNode<M>>();
        positive_ = !positive_;
        n->a = formula(f->subs[0]);
        positive_ = !positive_;
        return n;
      }
      case FormulaKind::and_:
      case FormulaKind::or_:
      case FormulaKind::implies: {
        auto n = std::make_unique<BinNode<M>>();
        n->kind = f->kind;
        if (f->kind == FormulaKind::implies) positive_ = !positive_;
        n->a = formula(f->subs[0]);
        if (f->kind == FormulaKind::implies) positive_ = !positive_;
        n->b = formula(f->subs[1]);
        return n;
      }
      case FormulaKind::forall:
      case FormulaKind::exists: return quantifier(f);
      default: {
        auto n = std::make_unique<AtomNode<M>>();
        n->kind = f->kind;
        n->a = term(f->terms[0]);
        n->b = term(f->terms[1]);
        return n;
      }
    }
  }

 private:
  std::map<std::string, std::vector<int>> scope_;
  int nslots_ = 0;
  // Polarity of the subformula being compiled.
  bool positive_ = true;

  int bind(const std::string& v) {
    const int s = nslots_++;
    scope_[v].push_back(s);
    return s;
  }
  void unbind(const std::string& v) { scope_[v].pop_back(); }
  int lookup(const std::string& v) const {
    auto it = scope_.find(v);
    if (it == scope_.end() || it->second.empty()) throw UnboundVariable("variable '" + v + "' is not bound");
    return it->second.back();
  }

  TermP<V> raw_term(const TermPtr& t) {
    switch (t->kind) {
      case TermKind::var: return std::make_unique<VarNode<M>>(lookup(t->name));
      case TermKind::zero:
      case TermKind::nat:
      case TermKind::set_literal: return std::make_unique<ConstNode<M>>(M::literal(t));
      case TermKind::sep:
      case TermKind::sepc: {
        auto n = std::make_unique<SepNode<M>>();
        n->kind = t->kind;
        n->bound = term(t->args[0]);
        n->slot = bind(t->name);
        n->body = formula_with_deps(t->body, n->deps);
        unbind(t->name);
        n->deps |= n->bound->deps;
        n->deps &= ~slot_bit(n->slot);
        if (n->slot >= 64) n->deps = kAllSlots;
        return n;
      }
      default: {
        auto n = std::make_unique<AppNode<M>>();
        n->kind = t->kind;
        for (const auto& a : t->args) {
          n->args.push_back(term(a));
          n->deps |= n->args.back()->deps;
        }
        return n;
      }
    }
  }

  // Separation bodies contribute their free variables to the term's deps.
  FormP<V> formula_with_deps(const FormulaPtr& f, Mask& deps) {
    for (const auto& v : free_vars(f)) deps |= slot_bit(lookup(v));
    return formula(f);
  }

  FormP<V> plain_quantifier(const FormulaPtr& f) {
    auto n = std::make_unique<QuantNode<M>>();
    n->forall = f->kind == FormulaKind::forall;
    n->witness_search = n->forall != positive_;
    n->bk = f->bound_kind;
    if (f->bound) n->bound = term(f->bound);
    n->slot = bind(f->var);
    n->body = formula(f->subs[0]);
    unbind(f->var);
    return n;
  }

  FormP<V> quantifier(const FormulaPtr& f) {
    const bool bounded_lt = f->bound_kind == BoundKind::lt || f->bound_kind == BoundKind::lt_a;
    if (!bounded_lt) return plain_quantifier(f);
    if (auto n = bit_guard(f)) return n;
    if (f->kind == FormulaKind::exists) {
      if (auto n = linear(f)) return n;
    }
    return plain_quantifier(f);
  }

  FormP<V> bit_guard(const FormulaPtr& f) {
    const FormulaPtr& body = f->subs[0];
    const FormulaKind conn = f->kind == FormulaKind::forall ? FormulaKind::implies : FormulaKind::and_;
    if (body->kind != conn || !is_bit_guard(body->subs[0], f->var, f->bound, M::lang)) return nullptr;
    auto n = std::make_unique<BitGuardNode<M>>();
    n->forall = f->kind == FormulaKind::forall;
    n->bk = f->bound_kind;
    n->fallback = plain_quantifier(f);
    n->bound = term(f->bound);
    n->slot = bind(f->var);
    n->guard = formula(body->subs[0]);
    n->rest = formula(body->subs[1]);
    unbind(f->var);
    return n;
  }

  FormP<V> linear(const FormulaPtr& f) {
    const FormulaPtr& body = f->subs[0];
    // S2: exists n < B. exists m < B'. L = c*n + K + m
    if (body->kind == FormulaKind::exists &&
        (body->bound_kind == BoundKind::lt || body->bound_kind == BoundKind::lt_a) && body->var != f->var &&
        !mentions(body->bound, f->var)) {
      if (auto shape = match_linear(body->subs[0], f->var, body->var))
        return build_linear(f, body, *shape);
    }
    if (auto shape = match_linear(body, "", f->var)) return build_linear(nullptr, f, *shape);
    return nullptr;
  }

  FormP<V> build_linear(const FormulaPtr& outer, const FormulaPtr& inner, const LinearShape& shape) {
    auto n = std::make_unique<LinearSolverNode<M>>();
    n->fallback = plain_quantifier(outer ? outer : inner);
    if (outer) {
      n->bk_n = outer->bound_kind;
      n->bound_n = term(outer->bound);
      n->slot_n = bind(outer->var);
    }
    n->bk_m = inner->bound_kind;
    n->bound_m = term(inner->bound);
    n->slot_m = bind(inner->var);
    n->lhs = term(shape.lhs);
    if (shape.coef) n->coef = term(shape.coef);
    for (const auto& k : shape.constants) n->constants.push_back(term(k));
    n->body = formula(inner->subs[0]);
    unbind(inner->var);
    if (outer) unbind(outer->var);
    return n;
  }
};

template <typename M>
EvalResult run(const FormulaPtr& f, const std::vector<std::string>& params, std::span<const typename M::V> args,
               const EvalContext& ctx) {
  Compiler<M> c(params);
  FormP<typename M::V> root = c.formula(f);
  Frame<typename M::V> fr;
  fr.slots.resize(static_cast<std::size_t>(c.slots()));
  fr.ctx = &ctx;
  for (std::size_t i = 0; i < args.size(); ++i) fr.slots[i] = args[i];
  const bool v = root->eval(fr);
  return {v, fr.at_cutoff};
}

template <typename M, typename Env>
std::pair<std::vector<std::string>, std::vector<typename M::V>> split(const Env& env) {
  std::vector<std::string> names;
  std::vector<typename M::V> values;
  for (const auto& [k, v] : env) {
    names.push_back(k);
    values.push_back(v);
  }
  return {names, values};
}

template <typename M>
typename M::V run_term(const TermPtr& t, const std::vector<std::string>& params, std::span<const typename M::V> args,
                       const EvalContext& ctx) {
  Compiler<M> c(params);
  TermP<typename M::V> root = c.term(t);
  Frame<typename M::V> fr;
  fr.slots.resize(static_cast<std::size_t>(c.slots()));
  fr.ctx = &ctx;
  for (std::size_t i = 0; i < args.size(); ++i) fr.slots[i] = args[i];
  return root->eval(fr);
}

template <typename V>
struct ModelFor;
template <>
struct ModelFor<Code> {
  using type = ArithModel;
};
template <>
struct ModelFor<HFSet> {
  using type = SetModel;
};

}  // namespace

EvalResult eval_arith(const ArithFormula& f, const ArithEnv& env, const EvalContext& ctx) {
  auto [names, values] = split<ArithModel>(env);
  return run<ArithModel>(f.f, names, values, ctx);
}

EvalResult eval_set(const SetFormula& f, const SetEnv& env, const EvalContext& ctx) {
  auto [names, values] = split<SetModel>(env);
  return run<SetModel>(f.f, names, values, ctx);
}

Code eval_arith_term(const TermPtr& t, const ArithEnv& env, const EvalContext& ctx) {
  auto [names, values] = split<ArithModel>(env);
  return run_term<ArithModel>(t, names, values, ctx);
}

HFSet eval_set_term(const TermPtr& t, const SetEnv& env, const EvalContext& ctx) {
  auto [names, values] = split<SetModel>(env);
  return run_term<SetModel>(t, names, values, ctx);
}

template <typename V>
struct CompiledFormula<V>::Impl {
  using M = typename ModelFor<V>::type;
  FormP<V> root;
  int slots = 0;
  EvalContext ctx;
};

template <typename V>
CompiledFormula<V>::CompiledFormula(const FormulaPtr& f, Language lang, std::vector<std::string> params,
                                    const EvalContext& ctx)
    : impl_(std::make_unique<Impl>()), params_(std::move(params)) {
  using M = typename Impl::M;
  if (lang != M::lang) throw LanguageMismatch("compiled formula language does not match its value type");
  Compiler<M> c(params_);
  impl_->root = c.formula(f);
  impl_->slots = c.slots();
  impl_->ctx = ctx;
}

template <typename V>
CompiledFormula<V>::~CompiledFormula() = default;
template <typename V>
CompiledFormula<V>::CompiledFormula(CompiledFormula&&) noexcept = default;
template <typename V>
CompiledFormula<V>& CompiledFormula<V>::operator=(CompiledFormula&&) noexcept = default;

template <typename V>
EvalResult CompiledFormula<V>::operator()(std::span<const V> args) const {
  Frame<V> fr;
  fr.slots.resize(static_cast<std::size_t>(impl_->slots));
  fr.ctx = &impl_->ctx;
  for (std::size_t i = 0; i < args.size() && i < params_.size(); ++i) fr.slots[i] = args[i];
  const bool v = impl_->root->eval(fr);
  return {v, fr.at_cutoff};
}

template class CompiledFormula<Code>;
template class CompiledFormula<HFSet>;

FormulaPtr specialize(const FormulaPtr& f, const std::string& v, const Code& value) {
  return substitute(f, v, value.is_zero() ? Term::zero() : Term::natural(value));
}

FormulaPtr specialize(const FormulaPtr& f, const std::string& v, HFSet value) {
  return substitute(f, v, Term::literal(value));
}

}  // namespace hf
