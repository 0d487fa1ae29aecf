#include "opw/chittenden.hpp"

#include <algorithm>
#include <numeric>

namespace opw {

Params::Params(int m_, int n_) : m(m_), n(n_) {
  if (m < 2 || n < m) throw Error(Err::BadRange, "params require 2 <= m <= n", m, n);
  d = std::gcd(m - 1, n - 1);
  ell = std::lcm(m - 1, n - 1);
}

int NormalForm::length() const {
  switch (shape) {
    case Shape::SPow:
    case Shape::TPow: return exp;
    case Shape::ST:
    case Shape::TS: return exp + 1;
    case Shape::STS:
    case Shape::TST: return exp + 2;
  }
  return 0;
}

char NormalForm::first() const {
  switch (shape) {
    case Shape::SPow:
    case Shape::ST:
    case Shape::STS: return 's';
    default: return 't';
  }
}

char NormalForm::last() const {
  switch (shape) {
    case Shape::SPow:
    case Shape::STS:
    case Shape::TS: return 's';
    default: return 't';
  }
}

bool NormalForm::has_s() const { return shape != Shape::TPow; }

bool NormalForm::has_t() const { return shape != Shape::SPow; }

std::string NormalForm::word() const {
  switch (shape) {
    case Shape::SPow: return std::string(exp, 's');
    case Shape::TPow: return std::string(exp, 't');
    case Shape::ST: return std::string(exp, 's') + "t";
    case Shape::STS: return std::string(exp, 's') + "ts";
    case Shape::TS: return std::string(exp, 't') + "s";
    case Shape::TST: return std::string(exp, 't') + "st";
  }
  return {};
}

std::vector<NormalForm> wset(const Params& p) {
  std::vector<NormalForm> out;
  out.reserve((p.m - 1) + (p.n - 1) + 4 * p.d);
  for (int a = 1; a <= p.m - 1; ++a) out.push_back({Shape::SPow, a});
  for (int a = 1; a <= p.n - 1; ++a) out.push_back({Shape::TPow, a});
  for (int j = 1; j <= p.d; ++j) {
    out.push_back({Shape::ST, j});
    out.push_back({Shape::STS, j});
    out.push_back({Shape::TS, j});
    out.push_back({Shape::TST, j});
  }
  return out;
}

namespace {

void check_member(const NormalForm& a, const Params& p) {
  int cap = 0;
  switch (a.shape) {
    case Shape::SPow: cap = p.m - 1; break;
    case Shape::TPow: cap = p.n - 1; break;
    default: cap = p.d; break;
  }
  if (a.exp < 1 || a.exp > cap)
    throw Error(Err::ParamMismatch, "normal form does not belong to this parameter pair", a.exp, cap);
}

int r_mod(int x, int k) {
  int r = (x - 1) % k;
  if (r < 0) r += k;
  return 1 + r;
}

}  // namespace

int wset_index(const NormalForm& a, const Params& p) {
  check_member(a, p);
  switch (a.shape) {
    case Shape::SPow: return a.exp - 1;
    case Shape::TPow: return (p.m - 1) + a.exp - 1;
    case Shape::ST: return (p.m - 1) + (p.n - 1) + 4 * (a.exp - 1);
    case Shape::STS: return (p.m - 1) + (p.n - 1) + 4 * (a.exp - 1) + 1;
    case Shape::TS: return (p.m - 1) + (p.n - 1) + 4 * (a.exp - 1) + 2;
    case Shape::TST: return (p.m - 1) + (p.n - 1) + 4 * (a.exp - 1) + 3;
  }
  return -1;
}

NormalForm multiply(const NormalForm& a, const NormalForm& b, const Params& p) {
  check_member(a, p);
  check_member(b, p);
  const int lambda = a.length() + b.length();
  if (!a.has_t() && !b.has_t()) return {Shape::SPow, r_mod(lambda, p.m - 1)};
  if (!a.has_s() && !b.has_s()) return {Shape::TPow, r_mod(lambda, p.n - 1)};
  const int u = r_mod(lambda - 2, p.d);
  const int v = r_mod(lambda - 1, p.d);
  if (a.first() == 't') {
    if (b.last() == 't') return {Shape::TST, u};
    return {Shape::TS, v};
  }
  if (b.last() == 't') return {Shape::ST, v};
  return {Shape::STS, u};
}

NormalForm normal_form(const std::string& word, const Params& p) {
  if (word.empty()) throw Error(Err::EmptyWord, "cannot normalize the empty word");
  NormalForm acc;
  bool started = false;
  for (char c : word) {
    if (c != 's' && c != 't') throw Error(Err::UnknownLetter, "letters must be s or t", c);
    NormalForm letter{c == 's' ? Shape::SPow : Shape::TPow, 1};
    acc = started ? multiply(acc, letter, p) : letter;
    started = true;
  }
  return acc;
}

namespace {

std::vector<std::vector<uint8_t>> order_with_bound(const Params& p, int kmax) {
  const auto ws = wset(p);
  const int nw = static_cast<int>(ws.size());
  std::vector<std::vector<uint8_t>> rel(nw, std::vector<uint8_t>(nw, 0));
  for (int i = 0; i < nw; ++i) rel[i][i] = 1;

  auto add = [&](const std::string& lo, const std::string& hi) {
    int a = wset_index(normal_form(lo, p), p);
    int b = wset_index(normal_form(hi, p), p);
    rel[a][b] = 1;
  };

  add("s", "t");
  if (kmax >= 2) {
    add("ss", "st");
    add("st", "tt");
    add("ss", "ts");
    add("ts", "tt");
  }
  for (int k = 3; k <= kmax; ++k) {
    const std::string sk(k, 's');
    const std::string tk(k, 't');
    const std::string sts = std::string(k - 2, 's') + "ts";
    const std::string st = std::string(k - 1, 's') + "t";
    const std::string ts = std::string(k - 1, 't') + "s";
    const std::string tst = std::string(k - 2, 't') + "st";
    add(sk, sts);
    add(sts, st);
    add(st, tst);
    add(tst, tk);
    add(sts, ts);
    add(ts, tst);
  }

  for (int k = 0; k < nw; ++k)
    for (int i = 0; i < nw; ++i) {
      if (!rel[i][k]) continue;
      for (int j = 0; j < nw; ++j)
        if (rel[k][j]) rel[i][j] = 1;
    }
  return rel;
}

}  // namespace

std::vector<std::vector<uint8_t>> word_order(const Params& p) {
  const int bound = 2 * p.ell + 4;
  auto rel = order_with_bound(p, bound);
  if (rel != order_with_bound(p, bound + p.d))
    throw Error(Err::PreconditionFailed, "order generators did not stabilize at the pinned bound", bound);
  const int nw = static_cast<int>(rel.size());
  for (int i = 0; i < nw; ++i)
    for (int j = i + 1; j < nw; ++j)
      if (rel[i][j] && rel[j][i])
        throw Error(Err::NotAPartialOrder, "distinct normal forms became order-equivalent", i, j);
  return rel;
}

bool leq(const NormalForm& a, const NormalForm& b, const Params& p) {
  const auto rel = word_order(p);
  return rel[wset_index(a, p)][wset_index(b, p)] != 0;
}

int idempotent_exponent(const Params& p) {
  return p.d % 2 == 0 ? p.d / 2 + 1 : p.d + 1;
}

std::string negate(const std::string& word) {
  std::string out = word;
  for (char& c : out) {
    if (c == 's') c = 't';
    else if (c == 't') c = 's';
    else throw Error(Err::UnknownLetter, "letters must be s or t", c);
  }
  return out;
}

DiagramCatalog hasse(const Params& p) {
  const auto ws = wset(p);
  const auto rel = word_order(p);
  const int nw = static_cast<int>(ws.size());
  DiagramCatalog cat;
  for (const auto& w : ws) cat.nodes.push_back(w.word());
  for (int i = 0; i < nw; ++i)
    for (int j = 0; j < nw; ++j) {
      if (i == j || !rel[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < nw && cover; ++k)
        if (k != i && k != j && rel[i][k] && rel[k][j]) cover = false;
      if (cover) cat.edges.push_back({i, j, EdgeKind::Solid});
    }
  return cat;
}

EndoMap eval_st_word(const std::string& word, const EndoMap& s, const EndoMap& t) {
  if (s.size() != t.size()) throw Error(Err::SizeMismatch, "generator maps act on different carriers");
  EndoMap acc = identity_map(s.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it != 's' && *it != 't') throw Error(Err::UnknownLetter, "letters must be s or t", *it);
    acc = compose(*it == 's' ? s : t, acc);
  }
  return acc;
}

}  // namespace opw
