#include "hecketwist/hecke.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "hecketwist/klcells.hpp"

namespace hecketwist {

namespace {

const LaurentPoly kZeroPoly(0);
const LaurentPoly kOnePoly(1);

LaurentPoly quad_coeff() { return LaurentPoly::v(1) - LaurentPoly::v(-1); }

bool is_identity_table(const std::vector<int>& t) {
  for (size_t i = 0; i < t.size(); ++i)
    if (t[i] != static_cast<int>(i)) return false;
  return true;
}

}  // namespace

AlgebraContext::AlgebraContext(const RootDatum& rd, long n,
                               std::vector<int> dbar_perm)
    : datum_(rd),
      n_(n),
      dbar_(dbar_perm.empty() ? DbarAction::from_eps(datum_)
                              : DbarAction(datum_, dbar_perm)),
      stab_(datum_) {
  dbar_.validate();
  chars_ = enumerate_ufs(datum_, n_);
  for (int j = 0; j < static_cast<int>(chars_.size()); ++j)
    char_index_[chars_[j]] = j;
  W_ = enumerate_W(datum_);
  const int nw = static_cast<int>(W_.size());
  const int nc = static_cast<int>(chars_.size());
  for (int i = 0; i < nw; ++i) w_index_[W_[i].perm()] = i;

  left_mul_.assign(datum_.rank(), std::vector<int>(nw));
  for (int s = 0; s < datum_.rank(); ++s) {
    WeylElement si = WeylElement::simple(datum_, s);
    for (int i = 0; i < nw; ++i)
      left_mul_[s][i] = w_index_.at((si * W_[i]).perm());
  }
  act_.assign(nw, std::vector<int>(nc));
  for (int i = 0; i < nw; ++i)
    for (int j = 0; j < nc; ++j)
      act_[i][j] = char_index_.at(act(W_[i], chars_[j]));
  svanish_.assign(nc, std::vector<char>(datum_.rank()));
  for (int j = 0; j < nc; ++j)
    for (int s = 0; s < datum_.rank(); ++s)
      svanish_[j][s] = chars_[j].vanishes_on_coroot(datum_, s) ? 1 : 0;

  eps_w_once_.resize(nw);
  for (int i = 0; i < nw; ++i)
    eps_w_once_[i] = w_index_.at(W_[i].eps_twist().perm());
  dbar_lam_once_.resize(nc);
  for (int j = 0; j < nc; ++j)
    dbar_lam_once_[j] = char_index_.at(dbar_.apply(chars_[j]));

  d_ = 1;
  std::vector<int> wp = eps_w_once_;
  std::vector<int> lp = dbar_lam_once_;
  while (!(is_identity_table(wp) && is_identity_table(lp))) {
    for (int& x : wp) x = eps_w_once_[x];
    for (int& x : lp) x = dbar_lam_once_[x];
    ++d_;
    if (d_ > 1000) throw ConfigError("twist order does not stabilize");
  }

  d0_ = 2 * datum_.rank() + datum_.num_pos_roots();
  kl_ = make_kl_table(*this);
}

AlgebraContext::~AlgebraContext() = default;

int AlgebraContext::w_index(const WeylElement& w) const {
  auto it = w_index_.find(w.perm());
  if (it == w_index_.end())
    throw ContextMismatch("Weyl element does not belong to this context");
  return it->second;
}

int AlgebraContext::char_index(const CharacterPoint& lam) const {
  if (static_cast<int>(lam.num().size()) != datum_.rank())
    throw ContextMismatch("character rank does not match the root datum");
  std::vector<long> num(datum_.rank());
  for (int i = 0; i < datum_.rank(); ++i) {
    long p = lam.num()[i];
    long q = lam.den();
    long g = std::gcd(p, q);
    if (g > 0) {
      p /= g;
      q /= g;
    }
    if (q <= 0 || n_ % q != 0)
      throw ContextMismatch("character order does not divide the level");
    num[i] = p * (n_ / q);
  }
  return char_index_.at(CharacterPoint(num, n_));
}

int AlgebraContext::eps_w(int wIdx, int power) const {
  int p = ((power % d_) + d_) % d_;
  int r = wIdx;
  while (p-- > 0) r = eps_w_once_[r];
  return r;
}

int AlgebraContext::dbar_lam(int lamIdx, int power) const {
  int p = ((power % d_) + d_) % d_;
  int r = lamIdx;
  while (p-- > 0) r = dbar_lam_once_[r];
  return r;
}

namespace {

const AlgebraContext* merge_ctx(const AlgebraContext* a,
                                const AlgebraContext* b) {
  if (a && b && a != b)
    throw ContextMismatch("operands belong to different contexts");
  return a ? a : b;
}

}  // namespace

const LaurentPoly& HeckeElt::coeff(int k, int wIdx, int lamIdx) const {
  auto it = terms_.find(TermKey{k, wIdx, lamIdx});
  return it == terms_.end() ? kZeroPoly : it->second;
}

void HeckeElt::add_term(int k, int wIdx, int lamIdx, const LaurentPoly& c) {
  if (c.is_zero()) return;
  TermKey key{k, wIdx, lamIdx};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  ctx_ = merge_ctx(ctx_, o.ctx_);
  for (const auto& [key, c] : o.terms_) {
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) { return *this += -o; }

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
  HeckeElt r = *this;
  r += o;
  return r;
}

HeckeElt HeckeElt::operator-(const HeckeElt& o) const {
  HeckeElt r = *this;
  r -= o;
  return r;
}

HeckeElt HeckeElt::operator-() const { return scaled(LaurentPoly(-1)); }

HeckeElt HeckeElt::operator*(const HeckeElt& o) const { return mul(*this, o); }

HeckeElt HeckeElt::scaled(const LaurentPoly& c) const {
  HeckeElt r;
  r.ctx_ = ctx_;
  if (c.is_zero()) return r;
  for (const auto& [key, p] : terms_) r.terms_.emplace(key, p * c);
  return r;
}

bool HeckeElt::operator==(const HeckeElt& o) const {
  merge_ctx(ctx_, o.ctx_);
  return terms_ == o.terms_;
}

HeckeElt basis(const AlgebraContext& ctx, int k, const WeylElement& w,
               const CharacterPoint& lam) {
  HeckeElt h(ctx);
  h.add_term(((k % ctx.d()) + ctx.d()) % ctx.d(), ctx.w_index(w),
             ctx.char_index(lam), kOnePoly);
  return h;
}

HeckeElt basis(const AlgebraContext& ctx, const WeylElement& w,
               const CharacterPoint& lam) {
  return basis(ctx, 0, w, lam);
}

HeckeElt idempotent(const AlgebraContext& ctx, const CharacterPoint& lam) {
  return basis(ctx, 0, WeylElement::identity(ctx.datum()), lam);
}

HeckeElt unit(const AlgebraContext& ctx) { return twist_gen(ctx, 0); }

HeckeElt twist_gen(const AlgebraContext& ctx, int k) {
  HeckeElt h(ctx);
  int kk = ((k % ctx.d()) + ctx.d()) % ctx.d();
  int id = ctx.w_index(WeylElement::identity(ctx.datum()));
  for (int j = 0; j < static_cast<int>(ctx.chars().size()); ++j)
    h.add_term(kk, id, j, kOnePoly);
  return h;
}

HeckeElt mul(const HeckeElt& a, const HeckeElt& b) {
  HeckeElt out;
  const AlgebraContext* cp = merge_ctx(a.ctx_, b.ctx_);
  out.ctx_ = cp;
  if (!cp || a.is_zero() || b.is_zero()) return out;
  const AlgebraContext& ctx = *cp;
  const LaurentPoly q = quad_coeff();

  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      // (k,h)(k',h') = (k+k', Theta^{-k'}(h) h')
      int w1 = ctx.eps_w(ka.w, -kb.k);
      int l1 = ctx.dbar_lam(ka.lam, -kb.k);
      if (ctx.act_index(kb.w, kb.lam) != l1) continue;

      // reduce T_{w1} (T_{wb} 1_{lamb}) generator by generator
      std::vector<int> word = ctx.w(w1).word();
      std::map<int, LaurentPoly> acc;
      acc.emplace(kb.w, kOnePoly);
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int s = *it;
        std::map<int, LaurentPoly> next;
        for (const auto& [x, c] : acc) {
          int sx = ctx.left_mul(s, x);
          next[sx] += c;
          if (ctx.w(sx).length() < ctx.w(x).length() &&
              ctx.simple_fixes(s, ctx.act_index(sx, kb.lam)))
            next[x] += c * q;
        }
        for (auto jt = next.begin(); jt != next.end();)
          jt = jt->second.is_zero() ? next.erase(jt) : std::next(jt);
        acc = std::move(next);
      }

      int k = (ka.k + kb.k) % ctx.d();
      LaurentPoly cc = ca * cb;
      for (const auto& [x, c] : acc) out.add_term(k, x, kb.lam, c * cc);
    }
  }
  return out;
}

HeckeElt invert_basis(const AlgebraContext& ctx, const WeylElement& w) {
  HeckeElt inv = unit(ctx);
  const LaurentPoly q = quad_coeff();
  std::vector<int> word = ctx.w(ctx.w_index(w)).word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    WeylElement s = WeylElement::simple(ctx.datum(), *it);
    HeckeElt gen(ctx);
    int sIdx = ctx.w_index(s);
    int idIdx = ctx.w_index(WeylElement::identity(ctx.datum()));
    for (int j = 0; j < static_cast<int>(ctx.chars().size()); ++j) {
      gen.add_term(0, sIdx, j, kOnePoly);
      if (ctx.simple_fixes(*it, j)) gen.add_term(0, idIdx, j, -q);
    }
    inv = mul(inv, gen);
  }
  return inv;
}

HeckeElt theta_twist(const HeckeElt& h, int power) {
  if (!h.context()) return h;
  const AlgebraContext& ctx = *h.context();
  HeckeElt out(ctx);
  for (const auto& [key, c] : h.terms())
    out.add_term(key.k, ctx.eps_w(key.w, power), ctx.dbar_lam(key.lam, power),
                 c);
  return out;
}

HeckeElt bar_involution(const HeckeElt& h) {
  if (!h.context()) return h;
  const AlgebraContext& ctx = *h.context();
  HeckeElt out(ctx);
  for (const auto& [key, c] : h.terms()) {
    HeckeElt p = mul(invert_basis(ctx, ctx.w(key.w).inverse()),
                     basis(ctx, 0, WeylElement::identity(ctx.datum()),
                           ctx.lambda(key.lam)));
    LaurentPoly cb = c.bar();
    for (const auto& [pk, pc] : p.terms())
      out.add_term(key.k, pk.w, pk.lam, pc * cb);
  }
  return out;
}

bool in_WJ(const WeylElement& w, const std::vector<int>& J) {
  std::vector<int> word = w.word();
  for (int s : word)
    if (std::find(J.begin(), J.end(), s) == J.end()) return false;
  return true;
}

HeckeElt restrict_HJ(const HeckeElt& h, const std::vector<int>& J) {
  if (!h.context()) return h;
  const AlgebraContext& ctx = *h.context();
  HeckeElt out(ctx);
  for (const auto& [key, c] : h.terms())
    if (in_WJ(ctx.w(key.w), J)) out.add_term(key.k, key.w, key.lam, c);
  return out;
}

std::string render(const HeckeElt& h) {
  if (h.is_zero()) return "0";
  const AlgebraContext& ctx = *h.context();
  std::string out;
  for (const auto& [key, c] : h.terms()) {
    if (!out.empty()) out += " + ";
    std::string term;
    if (key.k != 0)
      term += key.k == 1 ? std::string("TD") : "TD^" + std::to_string(key.k);
    const WeylElement& w = ctx.w(key.w);
    if (!w.is_identity()) {
      if (!term.empty()) term += ' ';
      term += "T[";
      std::vector<int> word = w.word();
      for (size_t i = 0; i < word.size(); ++i) {
        if (i) term += ' ';
        term += 's' + std::to_string(word[i] + 1);
      }
      term += ']';
    }
    if (!term.empty()) term += ' ';
    term += "1[" + ctx.lambda(key.lam).str() + "]";
    if (!(c == kOnePoly)) term += " * (" + c.str() + ")";
    out += term;
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_top_plus(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == '+' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

long parse_long(const std::string& s, size_t& pos) {
  size_t used = 0;
  long val = 0;
  try {
    val = std::stol(s.substr(pos), &used);
  } catch (const std::exception&) {
    throw ParseError("expected integer at: " + s.substr(pos));
  }
  pos += used;
  return val;
}

void skip_ws(const std::string& s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
    ++pos;
}

CharacterPoint parse_char_literal(const AlgebraContext& ctx,
                                  const std::string& body) {
  std::string lit = trim(body);
  if (lit.size() >= 2 && lit.front() == '(' && lit.back() == ')')
    lit = lit.substr(1, lit.size() - 2);
  std::vector<long> num;
  std::string entry;
  std::istringstream iss(lit);
  while (std::getline(iss, entry, ',')) {
    entry = trim(entry);
    if (entry.empty()) throw ParseError("empty character entry");
    size_t pos = 0;
    long p = parse_long(entry, pos);
    long q = 1;
    if (pos < entry.size() && entry[pos] == '/') {
      ++pos;
      q = parse_long(entry, pos);
    }
    if (pos != entry.size() || q <= 0)
      throw ParseError("bad character entry: " + entry);
    long g = std::gcd(p, q);
    if (g > 0) {
      p /= g;
      q /= g;
    }
    if (ctx.n() % q != 0)
      throw ParseError("character entry " + entry +
                       " is not " + std::to_string(ctx.n()) + "-torsion");
    num.push_back((((p % q) + q) % q) * (ctx.n() / q));
  }
  if (static_cast<int>(num.size()) != ctx.datum().rank())
    throw ParseError("character rank mismatch");
  return CharacterPoint(num, ctx.n());
}

}  // namespace

HeckeElt parse_elt(const AlgebraContext& ctx, const std::string& text) {
  std::string whole = trim(text);
  HeckeElt out(ctx);
  if (whole == "0") return out;
  if (whole.empty()) throw ParseError("empty element");
  for (const std::string& raw : split_top_plus(whole)) {
    std::string s = trim(raw);
    if (s.empty()) throw ParseError("empty term");
    size_t pos = 0;
    int k = 0;
    if (s.compare(pos, 2, "TD") == 0) {
      pos += 2;
      k = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        k = static_cast<int>(parse_long(s, pos));
      }
    }
    skip_ws(s, pos);
    WeylElement w = WeylElement::identity(ctx.datum());
    if (s.compare(pos, 2, "T[") == 0) {
      size_t close = s.find(']', pos);
      if (close == std::string::npos) throw ParseError("unterminated T[");
      std::istringstream iss(s.substr(pos + 2, close - pos - 2));
      std::string tok;
      while (iss >> tok) {
        if (tok.size() < 2 || tok[0] != 's')
          throw ParseError("bad generator token: " + tok);
        size_t tp = 1;
        long i = parse_long(tok, tp) - 1;
        if (tp != tok.size() || i < 0 || i >= ctx.datum().rank())
          throw ParseError("generator out of range: " + tok);
        w = w * WeylElement::simple(ctx.datum(), static_cast<int>(i));
      }
      pos = close + 1;
    }
    skip_ws(s, pos);
    if (s.compare(pos, 2, "1[") != 0)
      throw ParseError("expected idempotent 1[...] in: " + s);
    size_t close = s.find(']', pos);
    if (close == std::string::npos) throw ParseError("unterminated 1[");
    CharacterPoint lam = parse_char_literal(ctx, s.substr(pos + 2, close - pos - 2));
    pos = close + 1;
    skip_ws(s, pos);
    LaurentPoly c(1);
    if (pos < s.size()) {
      if (s[pos] != '*') throw ParseError("unexpected trailing text: " + s.substr(pos));
      ++pos;
      skip_ws(s, pos);
      if (pos >= s.size() || s[pos] != '(') throw ParseError("expected (poly)");
      size_t close2 = s.rfind(')');
      if (close2 == std::string::npos || close2 <= pos)
        throw ParseError("unterminated coefficient");
      c = LaurentPoly::parse(s.substr(pos + 1, close2 - pos - 1));
      pos = close2 + 1;
      skip_ws(s, pos);
      if (pos != s.size()) throw ParseError("unexpected trailing text: " + s.substr(pos));
    }
    out += basis(ctx, k, w, lam).scaled(c);
  }
  return out;
}

std::string json_terms(const HeckeElt& h) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  if (!h.context()) return arr.dump();
  const AlgebraContext& ctx = *h.context();
  for (const auto& [key, c] : h.terms()) {
    nlohmann::ordered_json t;
    t["k"] = key.k;
    std::vector<int> word;
    for (int s : ctx.w(key.w).word()) word.push_back(s + 1);
    t["word"] = word;
    t["lambda"] = ctx.lambda(key.lam).fractions();
    t["poly"] = c.str();
    arr.push_back(t);
  }
  return arr.dump();
}

}  // namespace hecketwist
