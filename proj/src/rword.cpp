#include "nil2/rword.hpp"

#include <cctype>

#include "nil2/error.hpp"
#include "nil2/scalar_parser.hpp"

namespace nil2 {

RWordPtr RWord::identity() { return std::make_shared<RWord>(); }

RWordPtr RWord::gen(int index, bool central) {
  auto w = std::make_shared<RWord>();
  w->kind = Kind::Gen;
  w->index = index;
  w->central = central;
  return w;
}

RWordPtr RWord::mul(std::vector<RWordPtr> factors) {
  auto w = std::make_shared<RWord>();
  w->kind = Kind::Mul;
  w->args = std::move(factors);
  return w;
}

RWordPtr RWord::inv(RWordPtr x) {
  auto w = std::make_shared<RWord>();
  w->kind = Kind::Inv;
  w->args = {std::move(x)};
  return w;
}

RWordPtr RWord::exp(RWordPtr x, Scalar s) {
  auto w = std::make_shared<RWord>();
  w->kind = Kind::Exp;
  w->args = {std::move(x)};
  w->scalar = std::move(s);
  return w;
}

RWordPtr RWord::comm(RWordPtr g, RWordPtr h) {
  auto w = std::make_shared<RWord>();
  w->kind = Kind::Comm;
  w->args = {std::move(g), std::move(h)};
  return w;
}

RWordPtr RWord::ccomm(RWordPtr g, RWordPtr h, Scalar s) {
  auto w = std::make_shared<RWord>();
  w->kind = Kind::CComm;
  w->args = {std::move(g), std::move(h)};
  w->scalar = std::move(s);
  return w;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const GroupSchema& schema, RingKind ring)
      : text_(text), schema_(schema), ring_(ring) {}

  RWordPtr parse() {
    RWordPtr w = word();
    skip();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what, ErrorKind kind = ErrorKind::SyntaxError) const {
    throw ParseError(kind, pos_ + 1, what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool starts_atom(char c) const {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '[' || c == '1';
  }

  RWordPtr word() {
    std::vector<RWordPtr> factors{factor()};
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        factors.push_back(factor());
      } else if (starts_atom(c)) {
        factors.push_back(factor());
      } else {
        break;
      }
    }
    return factors.size() == 1 ? factors[0] : RWord::mul(std::move(factors));
  }

  Scalar scalar_atom() {
    skip();
    if (pos_ >= text_.size()) fail("expected a scalar");
    return read_scalar(text_, pos_, ring_, ScalarForm::ExponentAtom);
  }

  RWordPtr factor() {
    RWordPtr a = atom();
    if (peek() != '^') return a;
    ++pos_;
    RWordPtr w = RWord::exp(std::move(a), scalar_atom());
    if (peek() == '^') fail("repeated '^' needs parentheses");
    return w;
  }

  RWordPtr atom() {
    const char c = peek();
    const std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      RWordPtr w = word();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      RWordPtr g = word();
      expect(',');
      RWordPtr h = word();
      expect(']');
      return RWord::comm(std::move(g), std::move(h));
    }
    if (c == '1') {
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("numbers other than 1 are not words");
      return RWord::identity();
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail(c ? "expected a word" : "unexpected end of input");
    std::string name;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) name += text_[pos_++];
    if (name == "c" && peek() == '(') {
      ++pos_;
      RWordPtr g = word();
      expect(',');
      RWordPtr h = word();
      expect(')');
      expect('_');
      return RWord::ccomm(std::move(g), std::move(h), scalar_atom());
    }
    if (auto w = generator(name)) return w;
    pos_ = start;
    fail("unknown generator '" + name + "'", ErrorKind::UnknownGenerator);
  }

  RWordPtr generator(const std::string& name) const {
    if (schema_.m() == 2 && name == "x") return RWord::gen(1);
    if (schema_.m() == 2 && name == "y") return RWord::gen(2);
    if (name.size() < 2 || (name[0] != 'u' && name[0] != 'v') || name[1] == '0') return nullptr;
    for (std::size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return nullptr;
    if (name.size() > 6) return nullptr;
    const int k = std::stoi(name.substr(1));
    const bool central = name[0] == 'v';
    if (k > (central ? schema_.n() : schema_.m())) return nullptr;
    return RWord::gen(k, central);
  }

  std::string_view text_;
  const GroupSchema& schema_;
  RingKind ring_;
  std::size_t pos_ = 0;
};

std::string braced(const Scalar& s) { return "{" + s.to_string() + "}"; }

std::string power(const std::string& base, const Scalar& e) {
  if (e.is_one()) return base;
  return base + "^" + braced(e);
}

GeneratorNames u_names(const GroupSchema& schema) {
  GeneratorNames names;
  for (int i = 1; i <= schema.m(); ++i) names.push_back(schema.u_name(i));
  return names;
}

}  // namespace

RWordPtr parse_word(std::string_view text, const GroupSchema& schema, RingKind ring) {
  return Parser(text, schema, ring).parse();
}

TensorElement eval(const RWordPtr& w, const CReductionStrategy& s) {
  switch (w->kind) {
    case RWord::Kind::Identity:
      return TensorElement::identity(s.schema, s.ring);
    case RWord::Kind::Gen:
      return TensorElement::from_hall(w->central ? HallElement::central(s.schema, s.ring, w->index)
                                                 : HallElement::generator(s.schema, s.ring, w->index));
    case RWord::Kind::Mul: {
      TensorElement acc = TensorElement::identity(s.schema, s.ring);
      for (const auto& f : w->args) acc = t_mul(acc, eval(f, s));
      return acc;
    }
    case RWord::Kind::Inv:
      return t_inv(eval(w->args[0], s));
    case RWord::Kind::Exp:
      return t_exp(s, eval(w->args[0], s), w->scalar);
    case RWord::Kind::Comm:
      return t_commutator(eval(w->args[0], s), eval(w->args[1], s));
    case RWord::Kind::CComm: {
      const TensorElement g = eval(w->args[0], s), h = eval(w->args[1], s);
      const Scalar& a = w->scalar;
      if (s.canonical()) return {HallElement::identity(s.schema, s.ring), c_binary(s, g, h, a)};
      // [g,h]^{C(a,2)} h^-a g^-a (gh)^a
      TensorElement c = t_exp(s, t_commutator(g, h), binomial(a, 2));
      c = t_mul(c, t_inv(t_exp(s, h, a)));
      c = t_mul(c, t_inv(t_exp(s, g, a)));
      return t_mul(c, t_exp(s, t_mul(g, h), a));
    }
  }
  return TensorElement::identity(s.schema, s.ring);
}

std::string to_string(const RWordPtr& w, const GroupSchema& schema) {
  switch (w->kind) {
    case RWord::Kind::Identity:
      return "1";
    case RWord::Kind::Gen:
      return w->central ? schema.v_name(w->index) : schema.u_name(w->index);
    case RWord::Kind::Mul: {
      if (w->args.empty()) return "1";
      std::string out = "(";
      for (std::size_t i = 0; i < w->args.size(); ++i) out += (i ? "*" : "") + to_string(w->args[i], schema);
      return out + ")";
    }
    case RWord::Kind::Inv:
      return "(" + to_string(w->args[0], schema) + ")^-1";
    case RWord::Kind::Exp:
      return "(" + to_string(w->args[0], schema) + ")^" + braced(w->scalar);
    case RWord::Kind::Comm:
      return "[" + to_string(w->args[0], schema) + "," + to_string(w->args[1], schema) + "]";
    case RWord::Kind::CComm:
      return "c(" + to_string(w->args[0], schema) + "," + to_string(w->args[1], schema) + ")_" + braced(w->scalar);
  }
  return "1";
}

std::string print_normal_form(const TensorElement& g) {
  const GroupSchema& schema = *g.hall.schema;
  std::string hall;
  auto append = [](std::string& out, const std::string& piece) {
    if (!out.empty()) out += " ";
    out += piece;
  };
  for (int i = 1; i <= schema.m(); ++i)
    if (!g.hall.a[i - 1].is_zero()) append(hall, power(schema.u_name(i), g.hall.a[i - 1]));
  for (int j = 1; j <= schema.n(); ++j)
    if (!g.hall.b[j - 1].is_zero()) append(hall, power(schema.v_name(j), g.hall.b[j - 1]));
  std::string d;
  const GeneratorNames names = u_names(schema);
  for (const auto& [key, c] : g.d.terms()) append(d, key_to_string(key, names) + "^" + braced(c));
  if (hall.empty() && d.empty()) return "1";
  if (hall.empty()) return d;
  if (d.empty()) return hall;
  return hall + " * " + d;
}

}  // namespace nil2
