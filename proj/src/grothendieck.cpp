#include "hecketwist/grothendieck.hpp"

#include <stdexcept>

#include "json.hpp"

#include "hecketwist/errors.hpp"

namespace hecketwist {

namespace {

const LaurentPoly kZeroPoly(0);

const AlgebraContext* merge_ctx(const AlgebraContext* a,
                                const AlgebraContext* b) {
  if (a && b && a != b)
    throw ContextMismatch("operands belong to different contexts");
  return a ? a : b;
}

// (-v)^e for any integer e
LaurentPoly neg_v_pow(int e) {
  return LaurentPoly::term(e % 2 == 0 ? 1 : -1, e);
}

}  // namespace

const LaurentPoly& FKElt::coeff(int wIdx, int lamIdx) const {
  auto it = coords_.find({wIdx, lamIdx});
  return it == coords_.end() ? kZeroPoly : it->second;
}

void FKElt::add_term(int wIdx, int lamIdx, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = coords_.try_emplace({wIdx, lamIdx}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

FKElt& FKElt::operator+=(const FKElt& o) {
  ctx_ = merge_ctx(ctx_, o.ctx_);
  for (const auto& [key, c] : o.coords_) add_term(key.first, key.second, c);
  return *this;
}

FKElt& FKElt::operator-=(const FKElt& o) { return *this += -o; }

FKElt FKElt::operator+(const FKElt& o) const {
  FKElt r = *this;
  r += o;
  return r;
}

FKElt FKElt::operator-(const FKElt& o) const {
  FKElt r = *this;
  r -= o;
  return r;
}

FKElt FKElt::operator-() const { return scaled(LaurentPoly(-1)); }

FKElt FKElt::scaled(const LaurentPoly& c) const {
  FKElt r;
  r.ctx_ = ctx_;
  if (c.is_zero()) return r;
  for (const auto& [key, p] : coords_) r.coords_.emplace(key, p * c);
  return r;
}

bool FKElt::operator==(const FKElt& o) const {
  merge_ctx(ctx_, o.ctx_);
  return coords_ == o.coords_;
}

FKElt fk_basis(const AlgebraContext& ctx, const WeylElement& w,
               const CharacterPoint& lam) {
  FKElt x(ctx);
  x.add_term(ctx.w_index(w), ctx.char_index(lam), LaurentPoly(1));
  return x;
}

HeckeElt omega(const FKElt& x) {
  if (!x.context()) return HeckeElt();
  const AlgebraContext& ctx = *x.context();
  HeckeElt h(ctx);
  for (const auto& [key, c] : x.coords())
    h.add_term(0, key.first, key.second,
               c.shifted(ctx.w(key.first).length()));
  return h;
}

FKElt omega_inv(const HeckeElt& h) {
  if (!h.context()) return FKElt();
  const AlgebraContext& ctx = *h.context();
  FKElt x(ctx);
  for (const auto& [key, c] : h.terms()) {
    if (key.k != 0)
      throw std::invalid_argument("omega_inv: element carries twist terms");
    x.add_term(key.w, key.lam, c.shifted(-ctx.w(key.w).length()));
  }
  return x;
}

FKElt star(const FKElt& x, const FKElt& xp) {
  const AlgebraContext* cp = merge_ctx(x.context(), xp.context());
  if (!cp) return FKElt();
  const LaurentPoly scale =
      (LaurentPoly::v(2) - LaurentPoly(1)).pow(cp->datum().rank());
  return omega_inv(mul(omega(x), omega(xp)).scaled(scale));
}

FKElt sheaf_class(const AlgebraContext& ctx, const WeylElement& w,
                  const CharacterPoint& lam) {
  int lw = ctx.w(ctx.w_index(w)).length();
  // (-v)^{-d_w} v^{l(w)} with d_w = l(w) + d0
  LaurentPoly scale = neg_v_pow(-(lw + ctx.d0())).shifted(lw);
  return omega_inv(c_basis(ctx, w, lam).scaled(scale));
}

bool in_HD(const HeckeElt& h) {
  if (!h.context()) return true;
  const AlgebraContext& ctx = *h.context();
  for (const auto& [key, c] : h.terms())
    if (ctx.act_index(key.w, key.lam) != ctx.dbar_lam(key.lam, -1))
      return false;
  return true;
}

std::pair<HeckeElt, HeckeElt> split_HD(const HeckeElt& h) {
  if (!h.context()) return {HeckeElt(), HeckeElt()};
  const AlgebraContext& ctx = *h.context();
  HeckeElt hd(ctx), rest(ctx);
  for (const auto& [key, c] : h.terms()) {
    if (ctx.act_index(key.w, key.lam) == ctx.dbar_lam(key.lam, -1))
      hd.add_term(key.k, key.w, key.lam, c);
    else
      rest.add_term(key.k, key.w, key.lam, c);
  }
  return {hd, rest};
}

HeckeElt rho_J(const HeckeElt& h, const std::vector<int>& J) {
  if (!in_HD(h)) throw NotInHD();
  return restrict_HJ(h, J);
}

HeckeElt p_J(const HeckeElt& h, const std::vector<int>& J) {
  return restrict_HJ(h, J);
}

std::string fk_json(const FKElt& x) {
  nlohmann::ordered_json doc;
  doc["basis"] = "prime";
  doc["d0"] = x.context() ? x.context()->d0() : 0;
  doc["terms"] = nlohmann::ordered_json::array();
  if (x.context()) {
    const AlgebraContext& ctx = *x.context();
    for (const auto& [key, c] : x.coords()) {
      nlohmann::ordered_json t;
      std::vector<int> word;
      for (int s : ctx.w(key.first).word()) word.push_back(s + 1);
      t["word"] = word;
      t["lambda"] = ctx.lambda(key.second).fractions();
      t["poly"] = c.str();
      doc["terms"].push_back(t);
    }
  }
  return doc.dump();
}

}  // namespace hecketwist
