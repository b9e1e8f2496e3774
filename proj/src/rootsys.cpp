#include "hecketwist/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

namespace hecketwist {

namespace {

std::vector<std::vector<int>> cartan_for_factor(char letter, int n,
                                                const std::string& full) {
  auto chain = [](int n) {
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    for (int i = 0; i + 1 < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
    return c;
  };
  switch (letter) {
    case 'A':
      if (n >= 1 && n <= 4) return chain(n);
      break;
    case 'B':
      if (n >= 2 && n <= 4) {
        auto c = chain(n);
        c[n - 2][n - 1] = -1;
        c[n - 1][n - 2] = -2;
        return c;
      }
      break;
    case 'C':
      if (n >= 2 && n <= 4) {
        auto c = chain(n);
        c[n - 2][n - 1] = -2;
        c[n - 1][n - 2] = -1;
        return c;
      }
      break;
    case 'D':
      if (n == 4) {
        std::vector<std::vector<int>> c(4, std::vector<int>(4, 0));
        for (int i = 0; i < 4; ++i) c[i][i] = 2;
        for (int i : {0, 2, 3}) c[i][1] = c[1][i] = -1;
        return c;
      }
      break;
    case 'G':
      if (n == 2) return {{2, -1}, {-3, 2}};
      break;
    case 'F':
      if (n == 4)
        return {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
      break;
    default:
      break;
  }
  throw ConfigError("unsupported Cartan type '" + full + "'");
}

}  // namespace

RootDatum RootDatum::from_type(const std::string& type) {
  if (type.empty()) throw ConfigError("empty Cartan type");
  std::vector<std::vector<std::vector<int>>> blocks;
  size_t pos = 0;
  while (pos < type.size()) {
    size_t next = type.find('x', pos);
    std::string fac = type.substr(pos, next == std::string::npos ? next : next - pos);
    if (fac.size() < 2 || !std::isalpha(static_cast<unsigned char>(fac[0])))
      throw ConfigError("bad Cartan factor '" + fac + "'");
    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(fac[0])));
    int n = 0;
    for (size_t i = 1; i < fac.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(fac[i])))
        throw ConfigError("bad Cartan factor '" + fac + "'");
      n = 10 * n + (fac[i] - '0');
    }
    blocks.push_back(cartan_for_factor(letter, n, type));
    pos = (next == std::string::npos) ? type.size() : next + 1;
  }
  int total = 0;
  for (const auto& b : blocks) total += static_cast<int>(b.size());
  if (total > 8) throw ConfigError("total rank too large: " + type);
  std::vector<std::vector<int>> cartan(total, std::vector<int>(total, 0));
  int off = 0;
  for (const auto& b : blocks) {
    int k = static_cast<int>(b.size());
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) cartan[off + i][off + j] = b[i][j];
    off += k;
  }
  RootDatum rd;
  rd.type_ = type;
  rd.rank_ = total;
  rd.build(cartan);
  return rd;
}

void RootDatum::build(const std::vector<std::vector<int>>& cartan) {
  cartan_ = cartan;
  const int r = rank_;
  // closure of the simple (root, coroot) pairs under simple reflections
  std::map<std::vector<int>, std::vector<int>> all;  // root -> coroot
  std::deque<std::vector<int>> work;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0), ev(r, 0);
    e[i] = 1;
    ev[i] = 1;
    all[e] = ev;
    work.push_back(e);
  }
  const size_t root_bound = 1 << 12;
  while (!work.empty()) {
    std::vector<int> b = work.front();
    work.pop_front();
    std::vector<int> bv = all.at(b);
    for (int i = 0; i < r; ++i) {
      int pr = 0, pc = 0;  // <b, alpha_i^vee>, <alpha_i, b^vee>
      for (int j = 0; j < r; ++j) {
        pr += cartan_[i][j] * b[j];
        pc += cartan_[j][i] * bv[j];
      }
      std::vector<int> nb = b, nbv = bv;
      nb[i] -= pr;
      nbv[i] -= pc;
      auto it = all.find(nb);
      if (it == all.end()) {
        all[nb] = nbv;
        work.push_back(nb);
        if (all.size() > root_bound) throw InfiniteType(type_);
      } else {
        assert(it->second == nbv);
      }
    }
  }
  // positives: every root is +-positive; simples first, rest by (height, lex)
  std::vector<std::pair<std::vector<int>, std::vector<int>>> pos;
  for (const auto& [b, bv] : all) {
    bool nonneg = std::all_of(b.begin(), b.end(), [](int c) { return c >= 0; });
    bool nonpos = std::all_of(b.begin(), b.end(), [](int c) { return c <= 0; });
    assert(nonneg || nonpos);
    if (nonneg) pos.emplace_back(b, bv);
  }
  auto height = [](const std::vector<int>& c) {
    return std::accumulate(c.begin(), c.end(), 0);
  };
  std::sort(pos.begin(), pos.end(), [&](const auto& x, const auto& y) {
    int hx = height(x.first), hy = height(y.first);
    if (hx != hy) return hx < hy;
    // within height 1 this puts alpha_0 before alpha_1 before ...
    return x.first > y.first;
  });
  for (size_t a = 0; a < pos.size(); ++a) {
    roots_.push_back(pos[a].first);
    coroots_.push_back(pos[a].second);
    root_lookup_[pos[a].first] = static_cast<int>(a);
  }
  const int m = num_pos_roots();
  refl_.assign(m, std::vector<int16_t>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<int> c = roots_[b];
      int p = pairing(b, a);
      for (int j = 0; j < r; ++j) c[j] -= p * roots_[a][j];
      int idx = root_index(c);
      assert(idx != 0);
      refl_[a][b] = static_cast<int16_t>(idx);
    }
  eps_.resize(r);
  std::iota(eps_.begin(), eps_.end(), 0);
  eps_root_.resize(m);
  std::iota(eps_root_.begin(), eps_root_.end(), 0);
}

int RootDatum::root_index(const std::vector<int>& coords) const {
  auto it = root_lookup_.find(coords);
  if (it != root_lookup_.end()) return it->second + 1;
  std::vector<int> neg(coords.size());
  for (size_t j = 0; j < coords.size(); ++j) neg[j] = -coords[j];
  it = root_lookup_.find(neg);
  if (it != root_lookup_.end()) return -(it->second + 1);
  return 0;
}

int RootDatum::pairing(int b, int a) const {
  int p = 0;
  for (int i = 0; i < rank_; ++i) {
    if (coroots_[a][i] == 0) continue;
    int row = 0;
    for (int j = 0; j < rank_; ++j) row += cartan_[i][j] * roots_[b][j];
    p += coroots_[a][i] * row;
  }
  return p;
}

void RootDatum::set_eps(const std::vector<int>& perm_of_I) {
  const int r = rank_;
  if (static_cast<int>(perm_of_I.size()) != r)
    throw ConfigError("eps permutation has wrong size");
  std::vector<bool> seen(r, false);
  for (int i : perm_of_I) {
    if (i < 0 || i >= r || seen[i]) throw ConfigError("eps is not a permutation of I");
    seen[i] = true;
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (cartan_[perm_of_I[i]][perm_of_I[j]] != cartan_[i][j])
        throw ConfigError("eps does not preserve the Cartan matrix");
  eps_ = perm_of_I;
  const int m = num_pos_roots();
  for (int a = 0; a < m; ++a) {
    std::vector<int> c(rank_, 0);
    for (int j = 0; j < rank_; ++j) c[eps_[j]] = roots_[a][j];
    int idx = root_index(c);
    assert(idx > 0);
    eps_root_[a] = idx - 1;
  }
}

void RootDatum::set_eps(const std::string& spec) {
  std::string s;
  for (char ch : spec)
    if (ch != ' ' && ch != '[' && ch != ']') s += ch;
  if (s.empty() || s == "id" || s == "none") {
    std::vector<int> id(rank_);
    std::iota(id.begin(), id.end(), 0);
    set_eps(id);
    return;
  }
  if (s == "flip" || s == "swap" || s == "rev") {
    std::vector<int> p(rank_);
    for (int i = 0; i < rank_; ++i) p[i] = rank_ - 1 - i;
    set_eps(p);
    return;
  }
  std::vector<int> p;
  size_t i = 0;
  while (i < s.size()) {
    size_t j = s.find(',', i);
    std::string item = s.substr(i, j == std::string::npos ? j : j - i);
    try {
      p.push_back(std::stoi(item) - 1);  // config lists are 1-based
    } catch (const std::exception&) {
      throw ConfigError("bad eps entry '" + item + "'");
    }
    i = (j == std::string::npos) ? s.size() : j + 1;
  }
  set_eps(p);
}

bool RootDatum::eps_is_identity() const {
  for (int i = 0; i < rank_; ++i)
    if (eps_[i] != i) return false;
  return true;
}

int RootDatum::eps_order() const {
  int d = 1;
  std::vector<int> p = eps_;
  auto is_id = [&] {
    for (int i = 0; i < rank_; ++i)
      if (p[i] != i) return false;
    return true;
  };
  while (!is_id()) {
    std::vector<int> q(rank_);
    for (int i = 0; i < rank_; ++i) q[i] = eps_[p[i]];
    p = q;
    ++d;
  }
  return d;
}

int RootDatum::eps_orbits(const std::vector<int>& J) const {
  std::set<int> in(J.begin(), J.end());
  for (int i : in)
    if (!in.count(eps_[i])) throw NotEpsStable();
  int orbits = 0;
  std::set<int> seen;
  for (int i : in) {
    if (seen.count(i)) continue;
    ++orbits;
    int j = i;
    do {
      seen.insert(j);
      j = eps_[j];
    } while (j != i);
  }
  return orbits;
}

// ---------------------------------------------------------------------------

WeylElement::WeylElement(const RootDatum& rd, std::vector<int16_t> img)
    : rd_(&rd), img_(std::move(img)) {
  len_ = 0;
  for (int16_t v : img_)
    if (v < 0) ++len_;
}

WeylElement WeylElement::identity(const RootDatum& rd) {
  std::vector<int16_t> img(rd.num_pos_roots());
  for (size_t j = 0; j < img.size(); ++j) img[j] = static_cast<int16_t>(j + 1);
  return WeylElement(rd, std::move(img));
}

WeylElement WeylElement::simple(const RootDatum& rd, int i) {
  return reflection(rd, i);
}

WeylElement WeylElement::reflection(const RootDatum& rd, int a) {
  std::vector<int16_t> img(rd.num_pos_roots());
  for (int b = 0; b < rd.num_pos_roots(); ++b) img[b] = static_cast<int16_t>(rd.reflect(a, b));
  return WeylElement(rd, std::move(img));
}

int WeylElement::apply(int signed_root) const {
  return signed_root > 0 ? img_[signed_root - 1] : -img_[-signed_root - 1];
}

std::vector<int> WeylElement::act_coroot(const std::vector<int>& x) const {
  const int r = rd_->rank();
  std::vector<int> y(r, 0);
  for (int i = 0; i < r; ++i) {
    if (x[i] == 0) continue;
    int s = img_[i];
    const std::vector<int>& cv = rd_->coroot(std::abs(s) - 1);
    int sign = s > 0 ? 1 : -1;
    for (int j = 0; j < r; ++j) y[j] += sign * x[i] * cv[j];
  }
  return y;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  if (rd_ != o.rd_) throw ContextMismatch();
  std::vector<int16_t> img(img_.size());
  for (size_t j = 0; j < img.size(); ++j)
    img[j] = static_cast<int16_t>(apply(o.img_[j]));
  return WeylElement(*rd_, std::move(img));
}

WeylElement WeylElement::inverse() const {
  std::vector<int16_t> img(img_.size());
  for (size_t j = 0; j < img_.size(); ++j) {
    int s = img_[j];
    if (s > 0)
      img[s - 1] = static_cast<int16_t>(j + 1);
    else
      img[-s - 1] = static_cast<int16_t>(-(static_cast<int>(j) + 1));
  }
  return WeylElement(*rd_, std::move(img));
}

bool WeylElement::left_descent(int i) const {
  for (size_t j = 0; j < img_.size(); ++j)
    if (std::abs(img_[j]) == i + 1) return img_[j] < 0;
  assert(false);
  return false;
}

std::vector<int> WeylElement::word() const {
  std::vector<int> w;
  WeylElement cur = *this;
  while (!cur.is_identity()) {
    int i = 0;
    while (!cur.left_descent(i)) ++i;
    w.push_back(i);
    cur = simple(*rd_, i) * cur;
  }
  return w;
}

WeylElement WeylElement::eps_twist(int power) const {
  const int ord = rd_->eps_order();
  int k = ((power % ord) + ord) % ord;
  WeylElement cur = *this;
  const int m = rd_->num_pos_roots();
  for (int t = 0; t < k; ++t) {
    std::vector<int> inv(m);
    for (int a = 0; a < m; ++a) inv[rd_->eps_root(a)] = a;
    std::vector<int16_t> img(m);
    for (int j = 0; j < m; ++j) {
      int y = cur.apply(inv[j] + 1);
      int e = rd_->eps_root(std::abs(y) - 1) + 1;
      img[j] = static_cast<int16_t>(y > 0 ? e : -e);
    }
    cur = WeylElement(*rd_, std::move(img));
  }
  return cur;
}

std::vector<WeylElement> enumerate_W(const RootDatum& rd, size_t bound) {
  std::set<std::vector<int16_t>> seen;
  std::deque<WeylElement> work;
  std::vector<WeylElement> out;
  WeylElement id = WeylElement::identity(rd);
  seen.insert(id.perm());
  work.push_back(id);
  out.push_back(id);
  while (!work.empty()) {
    WeylElement w = work.front();
    work.pop_front();
    for (int i = 0; i < rd.rank(); ++i) {
      WeylElement u = w * WeylElement::simple(rd, i);
      if (seen.insert(u.perm()).second) {
        if (seen.size() > bound) throw InfiniteType(rd.type());
        work.push_back(u);
        out.push_back(u);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool length_dichotomy(const WeylElement& w, int alpha) {
  WeylElement ws = w * WeylElement::reflection(w.datum(), alpha);
  return ws.length() > w.length();
}

bool bruhat_leq(const WeylElement& wp, const WeylElement& w) {
  if (wp == w) return true;
  if (wp.length() >= w.length()) return false;
  // lifting property along any left descent of w
  int i = 0;
  while (!w.left_descent(i)) ++i;
  WeylElement s = WeylElement::simple(w.datum(), i);
  WeylElement sw = s * w;
  if (wp.left_descent(i)) return bruhat_leq(s * wp, sw);
  return bruhat_leq(wp, sw);
}

std::string word_str(const WeylElement& w) {
  if (w.is_identity()) return "e";
  std::string out;
  for (int s : w.word()) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(s + 1);
  }
  return out;
}

std::vector<WeylElement> min_parabolic_reps(const std::vector<WeylElement>& W,
                                            const std::vector<int>& J) {
  std::vector<WeylElement> reps;
  for (const WeylElement& u : W) {
    bool ok = true;
    for (int j : J)
      if (u.right_descent(j)) {
        ok = false;
        break;
      }
    if (ok) reps.push_back(u);
  }
  return reps;
}

// ---------------------------------------------------------------------------

ReflectionSubgroup::ReflectionSubgroup(const RootDatum& rd, std::vector<int> pos_roots)
    : rd_(&rd), pos_(std::move(pos_roots)) {
  std::sort(pos_.begin(), pos_.end());
  std::set<int> in(pos_.begin(), pos_.end());
  // simple system: alpha whose reflection permutes the other positives
  for (int a : pos_) {
    bool simple = true;
    for (int b : pos_) {
      if (b == a) continue;
      if (!in.count(rd.reflect(a, b) - 1)) {  // image must be positive and inside
        simple = false;
        break;
      }
    }
    if (simple) simples_.push_back(a);
  }
  std::vector<WeylElement> gens;
  for (int a : simples_) gens.push_back(WeylElement::reflection(rd, a));
  std::set<std::vector<int16_t>> seen;
  std::deque<WeylElement> work;
  WeylElement id = WeylElement::identity(rd);
  seen.insert(id.perm());
  work.push_back(id);
  members_.push_back(id);
  while (!work.empty()) {
    WeylElement z = work.front();
    work.pop_front();
    for (const auto& g : gens) {
      WeylElement u = g * z;
      if (seen.insert(u.perm()).second) {
        work.push_back(u);
        members_.push_back(u);
      }
    }
  }
  std::sort(members_.begin(), members_.end(),
            [this](const WeylElement& x, const WeylElement& y) {
              int lx = length(x), ly = length(y);
              if (lx != ly) return lx < ly;
              return x.perm() < y.perm();
            });
  for (size_t k = 0; k < members_.size(); ++k) index_[members_[k].perm()] = static_cast<int>(k);
}

bool ReflectionSubgroup::contains(const WeylElement& z) const {
  return index_.count(z.perm()) > 0;
}

int ReflectionSubgroup::member_index(const WeylElement& z) const {
  auto it = index_.find(z.perm());
  if (it == index_.end()) throw NotInSubgroup();
  return it->second;
}

int ReflectionSubgroup::length(const WeylElement& z) const {
  int l = 0;
  for (int a : pos_)
    if (z.apply(a + 1) < 0) ++l;
  return l;
}

bool ReflectionSubgroup::right_descent(const WeylElement& z, int k) const {
  return z.apply(simples_[k] + 1) < 0;
}

bool ReflectionSubgroup::left_descent(const WeylElement& z, int k) const {
  int beta = simples_[k] + 1;
  for (int a : pos_) {
    int y = z.apply(a + 1);
    if (y == beta) return false;
    if (y == -beta) return true;
  }
  assert(false);
  return false;
}

std::vector<int> ReflectionSubgroup::word(const WeylElement& z) const {
  std::vector<int> w;
  WeylElement cur = z;
  while (length(cur) > 0) {
    size_t k = 0;
    while (!left_descent(cur, static_cast<int>(k))) ++k;
    w.push_back(static_cast<int>(k));
    cur = WeylElement::reflection(*rd_, simples_[k]) * cur;
  }
  assert(cur.is_identity());
  return w;
}

bool ReflectionSubgroup::bruhat_leq(const WeylElement& zp, const WeylElement& z) const {
  if (zp == z) return true;
  if (length(zp) >= length(z)) return false;
  size_t k = 0;
  while (!left_descent(z, static_cast<int>(k))) ++k;
  WeylElement t = WeylElement::reflection(*rd_, simples_[k]);
  WeylElement tz = t * z;
  if (left_descent(zp, static_cast<int>(k))) return bruhat_leq(t * zp, tz);
  return bruhat_leq(zp, tz);
}

std::pair<WeylElement, WeylElement> min_subgroup_coset(
    const WeylElement& w, const ReflectionSubgroup& sub) {
  const WeylElement* best = nullptr;
  WeylElement cand;
  for (const WeylElement& u : sub.members()) {
    WeylElement c = w * u;
    if (!best || c.length() < best->length() ||
        (c.length() == best->length() && c.perm() < best->perm())) {
      cand = c;
      best = &cand;
    }
  }
  WeylElement w1 = cand;
  WeylElement z = w1.inverse() * w;
  // the minimal representative maps the internal positive system into R+
  for (int a : sub.pos_roots()) assert(w1.apply(a + 1) > 0);
  assert(sub.contains(z));
  return {w1, z};
}

}  // namespace hecketwist
