#include "genmodels/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <vector>

#include "genmodels/errors.hpp"

namespace genmodels {

namespace {

enum class Tok {
  Ident,
  Not,      // ~
  And,      // &
  Or,       // |
  Arrow,    // ->
  Diamond,  // <>
  Box,      // []
  LParen,
  RParen,
  Comma,
  Dot,
  Eq,
  KwMu,
  KwNu,
  KwExists,
  KwForall,
  KwExists2,
  KwForall2,
  KwExistsP,
  KwForallP,
  KwExt,
  End,
};

struct Token {
  Tok tok;
  std::string text;
  int line;
  int col;
};

const std::map<std::string, Tok> kKeywords = {
    {"mu", Tok::KwMu},           {"nu", Tok::KwNu},
    {"exists", Tok::KwExists},   {"forall", Tok::KwForall},
    {"exists2", Tok::KwExists2}, {"forall2", Tok::KwForall2},
    {"existsP", Tok::KwExistsP}, {"forallP", Tok::KwForallP},
    {"ext", Tok::KwExt},
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto push = [&](Tok t, std::string s, int c) { out.push_back({t, std::move(s), line, c}); };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    int startCol = col;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      std::string word = text.substr(i, j - i);
      auto kw = kKeywords.find(word);
      push(kw == kKeywords.end() ? Tok::Ident : kw->second, word, startCol);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    auto two = [&](char a, char b) {
      return c == a && i + 1 < text.size() && text[i + 1] == b;
    };
    if (two('-', '>')) {
      push(Tok::Arrow, "->", startCol);
      i += 2;
      col += 2;
      continue;
    }
    if (two('<', '>')) {
      push(Tok::Diamond, "<>", startCol);
      i += 2;
      col += 2;
      continue;
    }
    if (two('[', ']')) {
      push(Tok::Box, "[]", startCol);
      i += 2;
      col += 2;
      continue;
    }
    Tok t;
    switch (c) {
      case '~': t = Tok::Not; break;
      case '&': t = Tok::And; break;
      case '|': t = Tok::Or; break;
      case '(': t = Tok::LParen; break;
      case ')': t = Tok::RParen; break;
      case ',': t = Tok::Comma; break;
      case '.': t = Tok::Dot; break;
      case '=': t = Tok::Eq; break;
      default:
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    push(t, std::string(1, c), startCol);
    ++i;
    ++col;
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
public:
  Parser(Language lang, std::vector<Token> toks) : lang_(lang), toks_(std::move(toks)) {}

  Formula run() {
    Formula f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

private:
  Language lang_;
  std::vector<Token> toks_;
  size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  bool at(Tok t) const { return peek().tok == t; }
  bool eat(Tok t) {
    if (!at(t)) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string got = t.tok == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.col, msg + ", got " + got);
  }

  Token expect(Tok t, const std::string& what) {
    if (!at(t)) fail("expected " + what);
    return take();
  }

  std::string ident(const std::string& what) {
    if (!at(Tok::Ident)) fail("expected " + what);
    return take().text;
  }

  Formula formula() { return implies(); }

  Formula implies() {
    Formula lhs = orExpr();
    if (eat(Tok::Arrow)) return impl(std::move(lhs), implies());
    return lhs;
  }

  Formula orExpr() {
    Formula lhs = andExpr();
    while (eat(Tok::Or)) lhs = disj(std::move(lhs), andExpr());
    return lhs;
  }

  Formula andExpr() {
    Formula lhs = unary();
    while (eat(Tok::And)) lhs = conj(std::move(lhs), unary());
    return lhs;
  }

  bool atBinder() const {
    switch (peek().tok) {
      case Tok::KwMu:
      case Tok::KwNu:
      case Tok::KwExists:
      case Tok::KwForall:
      case Tok::KwExists2:
      case Tok::KwForall2:
      case Tok::KwExistsP:
      case Tok::KwForallP:
        return true;
      default:
        return false;
    }
  }

  Formula unary() {
    if (eat(Tok::Not)) return neg(unary());
    if (at(Tok::Diamond)) {
      if (lang_ != Language::Modal) fail("modalities only occur in modal formulas");
      take();
      return diamond(unary());
    }
    if (at(Tok::Box)) {
      if (lang_ != Language::Modal) fail("modalities only occur in modal formulas");
      take();
      return box(unary());
    }
    if (at(Tok::KwExt)) {
      if (lang_ != Language::Fol) fail("'ext' only occurs in first-order formulas");
      take();
      return ext_dia(unary());
    }
    if (atBinder()) return binder();
    return primary();
  }

  // A binder's body is maximal: it runs to the next unmatched ')' or the end.
  Formula binder() {
    Token t = take();
    switch (t.tok) {
      case Tok::KwMu:
      case Tok::KwNu: {
        if (lang_ != Language::Modal) fail("fixpoint binders only occur in modal formulas");
        std::string v = ident("a fixpoint variable");
        expect(Tok::Dot, "'.'");
        Formula body = formula();
        return t.tok == Tok::KwMu ? mu(v, std::move(body)) : nu(v, std::move(body));
      }
      case Tok::KwExists2:
      case Tok::KwForall2: {
        if (lang_ != Language::Mso) fail("set quantifiers only occur in monadic second-order formulas");
        std::string v = ident("a set variable");
        expect(Tok::Dot, "'.'");
        Formula body = formula();
        return t.tok == Tok::KwExists2 ? exists_set(v, std::move(body))
                                       : forall_set(v, std::move(body));
      }
      case Tok::KwExistsP:
      case Tok::KwForallP: {
        if (lang_ != Language::TwoSorted)
          fail("predicate quantifiers only occur in two-sorted formulas");
        std::string v = ident("a predicate variable");
        expect(Tok::Dot, "'.'");
        Formula body = formula();
        return t.tok == Tok::KwExistsP ? exists(v, std::move(body)) : forall(v, std::move(body));
      }
      case Tok::KwExists:
      case Tok::KwForall: {
        if (lang_ == Language::Modal) fail("quantifiers do not occur in modal formulas");
        if (t.tok == Tok::KwExists && at(Tok::LParen)) {
          if (lang_ != Language::Fol)
            fail("simultaneous re-assignment only occurs in first-order formulas");
          take();
          std::vector<std::string> vars;
          vars.push_back(ident("a variable"));
          while (eat(Tok::Comma)) vars.push_back(ident("a variable"));
          expect(Tok::RParen, "')'");
          expect(Tok::Dot, "'.'");
          return poly_exists(vars, formula());
        }
        std::string v = ident("a variable");
        expect(Tok::Dot, "'.'");
        Formula body = formula();
        return t.tok == Tok::KwExists ? exists(v, std::move(body)) : forall(v, std::move(body));
      }
      default:
        fail("expected a binder");
    }
  }

  Formula primary() {
    if (eat(Tok::LParen)) {
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (!at(Tok::Ident)) fail("expected a formula");
    Token head = take();
    if (eat(Tok::LParen)) {
      std::vector<std::string> args;
      args.push_back(ident("a variable"));
      while (eat(Tok::Comma)) args.push_back(ident("a variable"));
      expect(Tok::RParen, "')'");
      return application(head, args);
    }
    if (eat(Tok::Eq)) {
      std::string rhs = ident("a variable");
      return eq(head.text, rhs);
    }
    // bare identifier
    if (lang_ == Language::Modal)
      return is_upper_var(head.text) ? fixvar(head.text) : prop(head.text);
    throw ParseError(head.line, head.col,
                     "bare identifier '" + head.text + "' is not a formula here");
  }

  Formula application(const Token& head, const std::vector<std::string>& args) {
    if (lang_ == Language::Modal)
      throw ParseError(head.line, head.col, "applications do not occur in modal formulas");
    if (lang_ == Language::Mso && args.size() == 1 && is_upper_var(head.text))
      return set_atom(head.text, args[0]);
    if (lang_ == Language::TwoSorted && head.text == "E") {
      if (args.size() != 2)
        throw ParseError(head.line, head.col, "membership atom E takes two arguments");
      return e_atom(args[0], args[1]);
    }
    return pred(head.text, args);
  }
};

// Renames shadowing or free-colliding binders so every binder of the
// uppercase namespaces is globally unique.
class RenameApart {
public:
  explicit RenameApart(const Formula& f) {
    FreeVars fv = free_variables(f);
    for (const auto& n : fv.sets) used_.insert(n);
    for (const auto& n : fv.preds) used_.insert(n);
    for (const auto& n : fv.fixpoints) used_.insert(n);
  }

  Formula walk(const Formula& f, std::map<std::string, std::string>& ren) {
    switch (f->kind) {
      case Kind::FixVar: {
        auto it = ren.find(f->name);
        return it == ren.end() ? f : fixvar(it->second);
      }
      case Kind::SetAtom: {
        auto it = ren.find(f->name);
        return it == ren.end() ? f : set_atom(it->second, f->args[0]);
      }
      case Kind::EAtom: {
        auto it = ren.find(f->args[1]);
        return it == ren.end() ? f : e_atom(f->args[0], it->second);
      }
      case Kind::Equal: {
        std::vector<std::string> a = f->args;
        for (auto& v : a) {
          auto it = ren.find(v);
          if (it != ren.end() && is_pred_sort_var(v)) v = it->second;
        }
        return eq(a[0], a[1]);
      }
      case Kind::Mu:
      case Kind::Nu:
      case Kind::ExistsSet:
      case Kind::ForallSet:
        return rebind(f, ren);
      case Kind::Exists:
      case Kind::Forall:
        if (is_pred_sort_var(f->name)) return rebind(f, ren);
        [[fallthrough]];
      default: {
        if (f->kids.empty()) return f;
        std::vector<Formula> kids;
        kids.reserve(f->kids.size());
        bool changed = false;
        for (const auto& k : f->kids) {
          kids.push_back(walk(k, ren));
          changed = changed || kids.back() != k;
        }
        if (!changed) return f;
        return std::make_shared<const Node>(f->kind, f->name, f->args, std::move(kids));
      }
    }
  }

private:
  std::set<std::string> used_;

  Formula rebind(const Formula& f, std::map<std::string, std::string>& ren) {
    std::string name = f->name;
    if (!used_.insert(name).second) {
      int i = 1;
      while (!used_.insert(name + std::to_string(i)).second) ++i;
      name += std::to_string(i);
    }
    std::optional<std::string> saved;
    auto it = ren.find(f->name);
    if (it != ren.end()) saved = it->second;
    if (name != f->name)
      ren[f->name] = name;
    else
      ren.erase(f->name);
    Formula body = walk(f->kids[0], ren);
    if (saved)
      ren[f->name] = *saved;
    else
      ren.erase(f->name);
    return std::make_shared<const Node>(f->kind, name, f->args,
                                        std::vector<Formula>{std::move(body)});
  }
};

}  // namespace

Formula parse(Language lang, const std::string& text) {
  Parser p(lang, lex(text));
  Formula f = p.run();
  if (lang != Language::Fol) {
    RenameApart r(f);
    std::map<std::string, std::string> ren;
    f = r.walk(f, ren);
  }
  check_wellformed(lang, f);
  return f;
}

Language language_from_string(const std::string& s) {
  if (s == "modal") return Language::Modal;
  if (s == "fol") return Language::Fol;
  if (s == "mso") return Language::Mso;
  if (s == "two_sorted") return Language::TwoSorted;
  throw InputError("unknown language: " + s);
}

std::string to_string(Language lang) {
  switch (lang) {
    case Language::Modal: return "modal";
    case Language::Fol: return "fol";
    case Language::Mso: return "mso";
    case Language::TwoSorted: return "two_sorted";
  }
  return "?";
}

}  // namespace genmodels
